#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kron/integer.hpp"
#include "kron/series.hpp"

namespace kron {

/// r x s matrix of non-negative integers, weakly decreasing along rows and
/// columns. Zero rows and columns are kept, so the box dimensions are part of
/// the value.
struct PlanePartition {
  std::vector<std::vector<int>> entries;

  int weight() const;
  /// Monotone along rows and columns with non-negative entries.
  bool valid() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
};

/// Calls visit on every plane partition in an r x s box with entries <= t.
/// Returning false stops the walk.
void for_each_pp(int r, int s, int t, const std::function<bool(const PlanePartition&)>& visit);

std::vector<PlanePartition> enumerate_pp(int r, int s, int t);

/// Plane partitions of weight k in an r x s rectangle, entries unbounded.
Integer count_pp(int k, int r, int s);

/// prod_{i<=r, j<=s} (1 - x^{i+j+t-1}) / (1 - x^{i+j-1}) up to x^N.
IntegerSeries macmahon_series(int r, int s, int t, int N);

/// Plane partitions fitting in an r x s rectangle, entries unbounded, up to x^N.
IntegerSeries box_series(int r, int s, int N);

/// sum_{l=0..j} count_pp(l, 3, a-1) * count_pp(j-l, 2, 1); requires a >= 2.
Integer family3_convolution(int a, int j);

/// q_n = sum_{m<=n} (floor((n-m)/2) + 1) r_m.
std::vector<Integer> lemma2_transform(const std::vector<Integer>& r);

/// r_n = q_n - q_{n-1} - q_{n-2} + q_{n-3} (terms with negative index are 0).
std::vector<Integer> lemma2_inverse(const std::vector<Integer>& q);

}  // namespace kron
