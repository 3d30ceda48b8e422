#include "kron/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kron {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] += 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(Integer c) { return IntPolynomial({std::move(c)}); }

Integer IntPolynomial::operator[](int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Integer(0);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Integer> out(c_.size() + other.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < other.c_.size(); ++j) out[i + j] += c_[i] * other.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out = c_;
  for (auto& x : out) x = -x;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Integer& lead = divisor.c_.back();
  if (lead != 1 && lead != -1) throw std::domain_error("divisor must have unit leading coefficient");
  if (degree() < divisor.degree()) {
    if (is_zero()) return {};
    throw std::domain_error("inexact polynomial division");
  }
  std::vector<Integer> rem = c_;
  const int dd = divisor.degree();
  std::vector<Integer> q(static_cast<std::size_t>(degree() - dd) + 1, 0);
  for (int i = degree(); i >= dd; --i) {
    const Integer coef = rem[static_cast<std::size_t>(i)] * lead;  // lead^{-1} == lead
    q[static_cast<std::size_t>(i - dd)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= coef * divisor.c_[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

IntegerSeries::IntegerSeries(int order) : c_(static_cast<std::size_t>(order) + 1, 0), order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

IntegerSeries::IntegerSeries(std::vector<Integer> coefficients, int order)
    : c_(std::move(coefficients)), order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1, 0);
}

IntegerSeries IntegerSeries::one(int order) {
  IntegerSeries s(order);
  s.c_[0] = 1;
  return s;
}

IntegerSeries IntegerSeries::operator*(const IntegerSeries& other) const {
  const int order = std::min(order_, other.order_);
  IntegerSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order; ++j)
      out.c_[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * other[j];
  }
  return out;
}

IntegerSeries IntegerSeries::operator*(const IntPolynomial& p) const {
  IntegerSeries out(order_);
  for (int i = 0; i <= p.degree() && i <= order_; ++i) {
    const Integer coef = p[i];
    if (coef == 0) continue;
    for (int j = 0; i + j <= order_; ++j) out.c_[static_cast<std::size_t>(i + j)] += coef * (*this)[j];
  }
  return out;
}

void IntegerSeries::divide_by_one_minus_x_pow(int i, int times) {
  if (i < 1) throw std::invalid_argument("(1 - x^i)^{-1} needs i >= 1");
  for (int t = 0; t < times; ++t)
    for (int n = i; n <= order_; ++n) c_[static_cast<std::size_t>(n)] += c_[static_cast<std::size_t>(n - i)];
}

IntegerSeries IntegerSeries::inverse() const {
  const Integer& c0 = c_[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("series is not a unit");
  IntegerSeries out(order_);
  out.c_[0] = c0;
  for (int n = 1; n <= order_; ++n) {
    Integer acc = 0;
    for (int k = 1; k <= n; ++k) acc += (*this)[k] * out[n - k];
    out.c_[static_cast<std::size_t>(n)] = -acc * c0;
  }
  return out;
}

IntPolynomial cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  IntPolynomial p = IntPolynomial::x_pow_minus_one(n);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = p.exact_div(cyclotomic(d));
  return p;
}

IntegerSeries inv_product_series(const ExponentMap& exponents, int N) {
  IntegerSeries s = IntegerSeries::one(N);
  for (auto [i, e] : exponents) {
    if (e < 0) throw std::invalid_argument("inv_product_series: negative exponent");
    s.divide_by_one_minus_x_pow(i, e);
  }
  return s;
}

ExponentMap F_exponents(int a) {
  if (a < 0) throw std::invalid_argument("F_a needs a >= 0");
  ExponentMap e;
  if (a == 0) return e;
  e[1] = 1;
  for (int i = 2; i <= a; ++i) e[i] = 2;
  e[a + 1] += 1;
  return e;
}

ExponentMap G_exponents(int a) {
  if (a < 1) throw std::invalid_argument("G_a needs a >= 1");
  // The general product double counts (1-x) at a = 1; the diagonals of
  // family3(1, 2, ., .) are 1/((1-x)(1-x^2)).
  if (a == 1) return {{1, 1}, {2, 1}};
  ExponentMap e;
  e[1] = 2;
  for (int i = 2; i <= a - 1; ++i) e[i] = 3;
  e[a] = 2;
  e[a + 1] = 1;
  return e;
}

ExponentMap box_exponents(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("box dimensions must be non-negative");
  ExponentMap e;
  const int l = std::min(r, s);
  const int n = std::max(r, s);
  if (l == 0) return e;
  for (int j = l; j <= n; ++j) e[j] += l;
  for (int i = 1; i <= l - 1; ++i) {
    e[i] += i;
    e[n + i] += l - i;
  }
  return e;
}

ExponentMap H_exponents(int a) {
  if (a < 1) throw std::invalid_argument("H_a needs a >= 1");
  return box_exponents(3, a - 1);
}

IntegerSeries F_series(int a, int N) { return inv_product_series(F_exponents(a), N); }
IntegerSeries G_series(int a, int N) { return inv_product_series(G_exponents(a), N); }
IntegerSeries H_series(int a, int N) { return inv_product_series(H_exponents(a), N); }

}  // namespace kron
