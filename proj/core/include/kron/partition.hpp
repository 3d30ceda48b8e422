#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kron/integer.hpp"

namespace kron {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Parts are stored without trailing zeros, so two partitions compare equal
/// exactly when they have the same parts. Indexing is 0-based and reads past
/// the last part return 0, which makes the componentwise operations used all
/// over the library (containment, skew shapes, lattice offsets) implicitly
/// zero-padded.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument on negative or increasing parts. Trailing
  /// zeros are accepted and dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Parses the comma-separated form "5,3,2,1"; the empty string is the empty
  /// partition.
  static Partition parse(std::string_view text);

  std::string str() const;

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  int operator[](int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  const std::vector<int>& parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// The skew diagram outer/inner. Construction enforces inner ⊆ outer.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition outer_shape, Partition inner_shape);
  int rows() const { return outer.length(); }
  int row_length(int r) const { return outer[r] - inner[r]; }
  int cells() const { return outer.size() - inner.size(); }
};

/// (width^height), the rectangle with `height` rows of length `width`.
Partition rectangle(int width, int height);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// (n - |alpha|, alpha_1, alpha_2, ...). Requires n >= |alpha| + alpha_1 so
/// the result is a partition; throws std::invalid_argument otherwise.
Partition pad(const Partition& alpha, int n);

/// Smallest n for which pad(alpha, n) is defined.
inline int padding_floor(const Partition& alpha) { return alpha.size() + alpha.first(); }

/// inner[i] <= outer[i] for every i.
bool contains(const Partition& inner, const Partition& outer);

/// True iff every prefix of `word` satisfies
///   #i + alpha_i >= #(i+1) + alpha_{i+1}   for all i >= 1.
/// With alpha empty this is the classical lattice (Yamanouchi) condition.
/// Entries must be positive.
bool is_alpha_lattice(std::span<const int> word, const Partition& alpha);

/// Centraliser order prod_i i^{m_i} m_i! of a permutation of cycle type rho.
Integer z_weight(const Partition& rho);

/// Every partition of n, optionally with at most max_length parts, in
/// lexicographically decreasing order: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
std::vector<Partition> partitions_of(int n, std::optional<int> max_length = std::nullopt);

/// n! as an exact integer.
Integer factorial(int n);

}  // namespace kron
