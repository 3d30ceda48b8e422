#include "kron/reduced.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "kron/characters.hpp"
#include "kron/config.hpp"
#include "kron/errors.hpp"
#include "kron/tableaux.hpp"

namespace kron {

namespace {

int floor_of_three(const Partition& a, const Partition& b, const Partition& c) {
  return std::max({padding_floor(a), padding_floor(b), padding_floor(c)});
}

std::string triple_str(const Partition& a, const Partition& b, const Partition& c, int n) {
  return "(" + a.str() + "), (" + b.str() + "), (" + c.str() + ") at n=" + std::to_string(n);
}

Integer via_tableaux(const Partition& a, const Partition& b, const Partition& c, int n) {
  const std::array<Partition, 3> padded{a, b, c};
  for (int t = 0; t < 3; ++t) {
    const Partition& two_row = padded[static_cast<std::size_t>(t)];
    if (two_row.length() > 2) continue;
    const Partition& x = padded[static_cast<std::size_t>((t + 1) % 3)];
    const Partition& y = padded[static_cast<std::size_t>((t + 2) % 3)];
    const int p = two_row[1];
    if (p == 0) return x == y ? 1 : 0;
    if (two_row_rule_applies(p, x)) return two_row_multiplicity(n, p, x, y);
    if (two_row_rule_applies(p, y)) return two_row_multiplicity(n, p, y, x);
  }
  throw ScaleExceeded("no pathway for " + triple_str(a, b, c, n) +
                      ": above the oracle cap and outside the two-row rule");
}

}  // namespace

int stab(const Partition& alpha, const Partition& beta) {
  return alpha.size() + beta.size() + alpha.first() + beta.first();
}

int stability_threshold(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  return std::min({stab(alpha, beta), stab(alpha, gamma), stab(beta, gamma)});
}

int evaluation_point(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  return std::max(stability_threshold(alpha, beta, gamma), floor_of_three(alpha, beta, gamma));
}

Integer padded_kronecker(const Partition& alpha, const Partition& beta, const Partition& gamma,
                         int n, Pathway pathway) {
  const Partition a = pad(alpha, n);
  const Partition b = pad(beta, n);
  const Partition c = pad(gamma, n);
  switch (pathway) {
    case Pathway::oracle:
      return kronecker_coeff(c, a, b);
    case Pathway::tableau:
      return via_tableaux(a, b, c, n);
    case Pathway::automatic:
      break;
  }
  if (oracle_allows(n)) return kronecker_coeff(c, a, b);
  return via_tableaux(a, b, c, n);
}

Integer reduced_kron(const Partition& alpha, const Partition& beta, const Partition& gamma,
                     Pathway pathway) {
  return padded_kronecker(alpha, beta, gamma, evaluation_point(alpha, beta, gamma), pathway);
}

std::vector<Integer> stabilization_sequence(const Partition& alpha, const Partition& beta,
                                            const Partition& gamma, int n_lo, int n_hi,
                                            Pathway pathway) {
  const int floor = floor_of_three(alpha, beta, gamma);
  if (n_lo < floor)
    throw std::invalid_argument("stabilization_sequence: n_lo=" + std::to_string(n_lo) +
                                " is below the padding floor " + std::to_string(floor));
  if (n_hi < n_lo) throw std::invalid_argument("stabilization_sequence: empty range");
  std::vector<Integer> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(padded_kronecker(alpha, beta, gamma, n, pathway));
  return out;
}

}  // namespace kron
