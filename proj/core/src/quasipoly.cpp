#include "kron/quasipoly.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kron {

namespace {

using RationalPoly = std::vector<Rational>;

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p *= (n + shift)
void mul_linear(RationalPoly& p, const Rational& shift) {
  RationalPoly out(p.size() + 1, Rational(0));
  for (std::size_t d = 0; d < p.size(); ++d) {
    out[d + 1] += p[d];
    out[d] += p[d] * shift;
  }
  p = std::move(out);
}

}  // namespace

int lcm_upto(int n) {
  int l = 1;
  for (int i = 2; i <= n; ++i) l = std::lcm(l, i);
  return l;
}

NumeratorPolynomial numerator_polynomial(const ExponentMap& exponents, int ell, int m) {
  if (ell < 1 || m < 0) throw std::invalid_argument("numerator_polynomial: need ell >= 1, m >= 0");
  NumeratorPolynomial out;
  out.ell = ell;
  out.m = m;
  std::map<int, int> exps;
  for (int d = 1; d <= ell; ++d)
    if (ell % d == 0) exps[d] = m;
  int total = 0;
  for (auto [i, e] : exponents) {
    total += e;
    for (int d = 1; d <= i; ++d)
      if (i % d == 0) exps[d] -= e;
  }
  for (auto it = exps.begin(); it != exps.end();) {
    if (it->second < 0)
      throw std::logic_error("numerator_polynomial: Phi_" + std::to_string(it->first) +
                             " gets a negative exponent; ell or m is too small");
    it = it->second == 0 ? exps.erase(it) : std::next(it);
  }
  // (1 - x^n) = -prod_{d|n} Phi_d, so the quotient carries (-1)^{m - sum e_i}.
  out.sign = ((m - total) % 2 == 0) ? 1 : -1;
  out.cyclotomic = std::move(exps);
  out.poly = expand_cyclotomic(out.cyclotomic, out.sign);
  return out;
}

IntPolynomial expand_cyclotomic(const std::map<int, int>& exponents, int sign) {
  IntPolynomial p = IntPolynomial::constant(sign);
  for (auto [d, e] : exponents) p = p * cyclotomic(d).pow(e);
  return p;
}

Quasipolynomial quasipoly_extract(const IntPolynomial& numerator, int ell, int m) {
  if (ell < 1 || m < 1) throw std::invalid_argument("quasipoly_extract: need ell >= 1, m >= 1");
  if (numerator.degree() >= ell * m)
    throw std::invalid_argument("quasipoly_extract: deg(numerator) must be below ell*m");
  // [x^n] numerator / (1 - x^ell)^m = sum_s num_s * C(m-1+(n-s)/ell, m-1), summed
  // over s = n (mod ell); as a polynomial in n that binomial is
  // prod_{i=1}^{m-1} (n - s + i*ell) / (ell^{m-1} (m-1)!).
  Integer scale = 1;
  for (int i = 1; i <= m - 1; ++i) scale *= Integer(ell) * i;
  Quasipolynomial qp;
  qp.period = ell;
  qp.residues.assign(static_cast<std::size_t>(ell), RationalPoly{});
  for (int s = 0; s <= numerator.degree(); ++s) {
    const Integer coef = numerator[s];
    if (coef == 0) continue;
    RationalPoly term{Rational(coef, scale)};
    for (int i = 1; i <= m - 1; ++i) mul_linear(term, Rational(i * ell - s));
    RationalPoly& acc = qp.residues[static_cast<std::size_t>(s % ell)];
    if (acc.size() < term.size()) acc.resize(term.size(), Rational(0));
    for (std::size_t d = 0; d < term.size(); ++d) acc[d] += term[d];
  }
  for (auto& r : qp.residues) trim(r);
  return qp;
}

Rational quasipoly_eval(const Quasipolynomial& qp, long long n) {
  const long long p = qp.period;
  const auto& poly = qp.residues[static_cast<std::size_t>(((n % p) + p) % p)];
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * n + *it;
  return acc;
}

int minimal_period(const Quasipolynomial& qp) {
  for (int p = 1; p < qp.period; ++p) {
    if (qp.period % p != 0) continue;
    bool repeats = true;
    for (int r = p; r < qp.period && repeats; ++r)
      repeats = qp.residues[static_cast<std::size_t>(r)] == qp.residues[static_cast<std::size_t>(r % p)];
    if (repeats) return p;
  }
  return qp.period;
}

int quasipoly_degree(const Quasipolynomial& qp) {
  int deg = -1;
  for (const auto& r : qp.residues) deg = std::max(deg, static_cast<int>(r.size()) - 1);
  return deg;
}

FamilyQuasipolynomial family_quasipolynomial(QuasiFamily family, int a) {
  const int ell = lcm_upto(a + 1);
  FamilyQuasipolynomial out;
  if (family == QuasiFamily::family1) {
    if (a < 1) throw std::invalid_argument("family 1 quasipolynomial needs a >= 1");
    out.numerator = numerator_polynomial(F_exponents(a), ell, 2 * a);
  } else {
    if (a < 1) throw std::invalid_argument("family 3 quasipolynomial needs a >= 1");
    out.numerator = numerator_polynomial(G_exponents(a), ell, 3 * a - 1);
  }
  out.qp = quasipoly_extract(out.numerator.poly, ell, out.numerator.m);
  return out;
}

}  // namespace kron
