#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kron/partition.hpp"
#include "kron/skew_filling.hpp"

namespace kron {

/// A filling of outer/inner; rows[r] holds row r of the skew shape left to
/// right. The type partition is not stored: the same filling is checked
/// against whatever nu the caller supplies.
struct KroneckerTableau {
  Partition outer;
  Partition inner;
  Filling rows;

  friend bool operator==(const KroneckerTableau&, const KroneckerTableau&) = default;
  friend auto operator<=>(const KroneckerTableau&, const KroneckerTableau&) = default;
};

/// Reverse reading word: each row right to left, rows top to bottom.
std::vector<int> reverse_reading_word(const Filling& rows);

/// The alpha-condition: alpha_1 == alpha_2, or the number of 1's in row 2 of
/// the skew shape or the number of 2's in row 1 equals alpha_1 - alpha_2.
bool satisfies_alpha_condition(const Filling& rows, const Partition& alpha);

/// Semistandard on lambda/alpha, content nu/alpha, alpha-lattice reverse
/// reading word and the alpha-condition. Throws std::invalid_argument when
/// alpha is not inside lambda and nu, or when T does not have shape
/// lambda/alpha.
bool is_kronecker_tableau(const KroneckerTableau& T, const Partition& lambda,
                          const Partition& nu, const Partition& alpha);

/// Calls visit on every Kronecker tableau of shape lambda/alpha and type
/// nu/alpha; returning false from visit stops the walk. Nothing is visited
/// when alpha is not inside both lambda and nu or |lambda| != |nu|.
void for_each_kron_tableau(const Partition& lambda, const Partition& nu,
                           const Partition& alpha,
                           const std::function<bool(const KroneckerTableau&)>& visit);

std::vector<KroneckerTableau> enumerate_kron_tableaux(const Partition& lambda,
                                                      const Partition& nu,
                                                      const Partition& alpha);

/// k^lambda_{alpha nu}.
std::uint64_t count_kron_tableaux(const Partition& lambda, const Partition& nu,
                                  const Partition& alpha);

/// Multiplicity of s_nu in s_{(n-p,p)} * s_lambda by the two-row tableau rule.
///
/// Uses sum_{alpha |- p, alpha in lambda ∩ nu} k^lambda_{alpha nu} when
/// lambda_1 >= 2p-1, otherwise the same sum over conjugates when
/// length(lambda) >= 2p-1. Throws RuleNotApplicable when neither holds and
/// std::invalid_argument when p < 1, n < 2p or the sizes disagree. The sum
/// over alpha runs on thread_count() workers.
std::uint64_t two_row_multiplicity(int n, int p, const Partition& lambda, const Partition& nu);

/// True when two_row_multiplicity(n, p, lambda, .) has an applicable case.
bool two_row_rule_applies(int p, const Partition& lambda);

}  // namespace kron
