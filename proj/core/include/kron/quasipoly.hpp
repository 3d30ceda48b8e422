#pragma once

#include <map>
#include <vector>

#include "kron/integer.hpp"
#include "kron/series.hpp"

namespace kron {

/// One polynomial per residue class mod `period`; residues[r][d] is the
/// coefficient of n^d used when n = r (mod period).
struct Quasipolynomial {
  int period = 1;
  std::vector<std::vector<Rational>> residues;

  friend bool operator==(const Quasipolynomial&, const Quasipolynomial&) = default;
};

/// (1 - x^ell)^m * prod_i (1 - x^i)^{-e_i}, carried both expanded and as
/// sign * prod_d Phi_d^{cyclotomic[d]}.
struct NumeratorPolynomial {
  IntPolynomial poly;
  std::map<int, int> cyclotomic;
  int sign = 1;
  int ell = 1;
  int m = 0;
};

/// lcm(1, ..., n).
int lcm_upto(int n);

/// Computed in cyclotomic-exponent arithmetic. Throws std::logic_error when
/// some Phi_d would get a negative exponent (ell or m too small).
NumeratorPolynomial numerator_polynomial(const ExponentMap& exponents, int ell, int m);

/// Expands sign * prod Phi_d^{e_d}.
IntPolynomial expand_cyclotomic(const std::map<int, int>& exponents, int sign = 1);

/// Coefficients of numerator / (1 - x^ell)^m as a quasipolynomial in n.
/// Requires deg(numerator) < ell * m; throws std::invalid_argument otherwise.
Quasipolynomial quasipoly_extract(const IntPolynomial& numerator, int ell, int m);

Rational quasipoly_eval(const Quasipolynomial& qp, long long n);

/// Smallest divisor p of the period with residues[r] == residues[r mod p].
int minimal_period(const Quasipolynomial& qp);

/// Largest residue degree; -1 for the zero quasipolynomial.
int quasipoly_degree(const Quasipolynomial& qp);

/// The generating functions with quasipolynomial coefficients.
enum class QuasiFamily { family1, family3 };

struct FamilyQuasipolynomial {
  NumeratorPolynomial numerator;
  Quasipolynomial qp;
};

/// F_a over (1 - x^ell)^{2a} for family1 (a >= 1), G_a over (1 - x^ell)^{3a-1}
/// for family3 (a >= 1), with ell = lcm(1..a+1).
FamilyQuasipolynomial family_quasipolynomial(QuasiFamily family, int a);

}  // namespace kron
