#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kron/integer.hpp"
#include "kron/partition.hpp"

namespace kron {

/// chi^lambda(rho) by Murnaghan-Nakayama: border strips of length rho_1 are
/// stripped first, then rho_2, and so on. Results are memoised on
/// (shape, remaining cycle type) in a process-wide cache that is safe under
/// concurrent use. Throws std::invalid_argument when |lambda| != |rho|.
std::int64_t mn_character(const Partition& lambda, const Partition& rho);

/// Number of standard Young tableaux of shape lambda (hook length formula).
Integer dimension(const Partition& lambda);

/// g^lambda_{mu nu} = sum_rho chi^lambda chi^mu chi^nu / z_rho.
///
/// Throws std::invalid_argument on a size mismatch and ScaleExceeded when
/// the common size is above oracle_cap().
Integer kronecker_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Every lambda with g^lambda_{mu nu} > 0. Same errors as kronecker_coeff.
std::map<Partition, Integer> kronecker_product(const Partition& mu, const Partition& nu);

/// c^gamma_{alpha beta}: semistandard fillings of gamma/alpha with content
/// beta whose reverse reading word is a lattice word.
Integer lr_coeff(const Partition& alpha, const Partition& beta, const Partition& gamma);

struct CharacterTable {
  int n = 0;
  /// Row and column labels, both in partitions_of(n) order.
  std::vector<Partition> partitions;
  /// values[i][j] = chi^{partitions[i]}(partitions[j]).
  std::vector<std::vector<std::int64_t>> values;
};

/// Full character table of the symmetric group on n letters. Subject to the
/// same oracle cap as kronecker_coeff.
CharacterTable character_table(int n);

}  // namespace kron
