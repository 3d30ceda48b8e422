#pragma once

#include <map>
#include <vector>

#include "kron/integer.hpp"

namespace kron {

/// Exact polynomial with integer coefficients, constant term first. The
/// representation is trimmed: the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  /// x^n - 1.
  static IntPolynomial x_pow_minus_one(int n);
  static IntPolynomial constant(Integer c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coefficients() const { return c_; }
  Integer operator[](int i) const;

  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator-() const;
  IntPolynomial pow(int e) const;

  /// Exact quotient; the divisor's leading coefficient must be +-1 and the
  /// remainder must vanish, otherwise std::domain_error.
  IntPolynomial exact_div(const IntPolynomial& divisor) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Power series truncated at x^order; coefficients() has order+1 entries.
class IntegerSeries {
 public:
  explicit IntegerSeries(int order);
  IntegerSeries(std::vector<Integer> coefficients, int order);

  static IntegerSeries one(int order);

  int order() const { return order_; }
  const std::vector<Integer>& coefficients() const { return c_; }
  const Integer& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }

  IntegerSeries operator*(const IntegerSeries& other) const;
  IntegerSeries operator*(const IntPolynomial& p) const;

  /// Multiplies by (1 - x^i)^{-times} in place.
  void divide_by_one_minus_x_pow(int i, int times = 1);

  /// Multiplicative inverse; the constant term must be +-1.
  IntegerSeries inverse() const;

  friend bool operator==(const IntegerSeries&, const IntegerSeries&) = default;

 private:
  std::vector<Integer> c_;
  int order_;
};

/// Phi_n, from x^n - 1 divided by Phi_d over the proper divisors d of n.
IntPolynomial cyclotomic(int n);

/// Exponent map i -> e_i describing prod_i (1 - x^i)^{-e_i}.
using ExponentMap = std::map<int, int>;

/// prod_i (1 - x^i)^{-e_i} truncated at x^N.
IntegerSeries inv_product_series(const ExponentMap& exponents, int N);

/// 1 / ((1-x)(1-x^2)^2 ... (1-x^a)^2 (1-x^{a+1})); a = 0 gives the series 1.
ExponentMap F_exponents(int a);
/// 1 / ((1-x)^2 (1-x^2)^3 ... (1-x^{a-1})^3 (1-x^a)^2 (1-x^{a+1})), a >= 2;
/// a = 1 is 1/((1-x)(1-x^2)).
ExponentMap G_exponents(int a);
/// Plane partitions in a 3 x (a-1) rectangle, a >= 1; H_1 is the series 1.
ExponentMap H_exponents(int a);
/// Plane partitions fitting in an r x s rectangle with unbounded entries.
ExponentMap box_exponents(int r, int s);

IntegerSeries F_series(int a, int N);
IntegerSeries G_series(int a, int N);
IntegerSeries H_series(int a, int N);

}  // namespace kron
