#pragma once

#include <vector>

#include "kron/integer.hpp"
#include "kron/partition.hpp"

namespace kron {

/// How a padded Kronecker coefficient is evaluated.
enum class Pathway {
  automatic,  ///< character oracle up to oracle_cap(), then the two-row rule
  oracle,     ///< character oracle only
  tableau,    ///< two-row Kronecker tableau rule only
};

/// |alpha| + |beta| + alpha_1 + beta_1.
int stab(const Partition& alpha, const Partition& beta);

/// min(stab(alpha,beta), stab(alpha,gamma), stab(beta,gamma)).
int stability_threshold(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// max(stability_threshold, |x| + x_1 for x in {alpha, beta, gamma}): the
/// smallest n past the stability bound at which all three paddings exist.
int evaluation_point(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// g^{gamma[n]}_{alpha[n] beta[n]}.
///
/// The tableau pathway needs one padded partition with at most two rows,
/// (n-p, p); p = 0 is the trivial character, otherwise the two-row rule is
/// tried with the remaining pair in both orders. Throws ScaleExceeded when
/// the requested pathway cannot evaluate the coefficient and
/// std::invalid_argument when n is below a padding floor.
Integer padded_kronecker(const Partition& alpha, const Partition& beta, const Partition& gamma,
                         int n, Pathway pathway = Pathway::automatic);

/// The reduced Kronecker coefficient, evaluated at evaluation_point().
Integer reduced_kron(const Partition& alpha, const Partition& beta, const Partition& gamma,
                     Pathway pathway = Pathway::automatic);

/// padded_kronecker for every n in [n_lo, n_hi]. Throws std::invalid_argument
/// when n_lo is below a padding floor or n_hi < n_lo.
std::vector<Integer> stabilization_sequence(const Partition& alpha, const Partition& beta,
                                            const Partition& gamma, int n_lo, int n_hi,
                                            Pathway pathway = Pathway::automatic);

}  // namespace kron
