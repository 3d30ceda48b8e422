#include "kron/tableaux.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>

#include "kron/config.hpp"
#include "kron/errors.hpp"

namespace kron {

namespace {

std::vector<int> skew_content(const Partition& nu, const Partition& alpha) {
  std::vector<int> content;
  for (int i = 0; i < nu.length(); ++i) content.push_back(nu[i] - alpha[i]);
  return content;
}

int count_value(const std::vector<int>& row, int v) {
  return static_cast<int>(std::count(row.begin(), row.end(), v));
}

}  // namespace

std::vector<int> reverse_reading_word(const Filling& rows) {
  std::vector<int> word;
  for (const auto& row : rows) word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

bool satisfies_alpha_condition(const Filling& rows, const Partition& alpha) {
  const int gap = alpha[0] - alpha[1];
  if (gap == 0) return true;
  const int ones_row2 = rows.size() > 1 ? count_value(rows[1], 1) : 0;
  const int twos_row1 = rows.empty() ? 0 : count_value(rows[0], 2);
  return ones_row2 == gap || twos_row1 == gap;
}

bool is_kronecker_tableau(const KroneckerTableau& T, const Partition& lambda,
                          const Partition& nu, const Partition& alpha) {
  if (!contains(alpha, lambda) || !contains(alpha, nu))
    throw std::invalid_argument("is_kronecker_tableau: alpha must lie inside lambda and nu");
  if (T.outer != lambda || T.inner != alpha ||
      static_cast<int>(T.rows.size()) != lambda.length())
    throw std::invalid_argument("is_kronecker_tableau: tableau shape is not lambda/alpha");
  for (int r = 0; r < lambda.length(); ++r)
    if (static_cast<int>(T.rows[r].size()) != lambda[r] - alpha[r])
      throw std::invalid_argument("is_kronecker_tableau: row " + std::to_string(r + 1) +
                                  " has the wrong length");
  if (lambda.size() != nu.size()) return false;

  std::vector<int> content(static_cast<std::size_t>(nu.length()), 0);
  for (int r = 0; r < lambda.length(); ++r) {
    const auto& row = T.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int v = row[c];
      if (v < 1 || v > nu.length()) return false;
      ++content[v - 1];
      if (c > 0 && row[c - 1] > v) return false;
      const int col = alpha[r] + static_cast<int>(c);
      if (r > 0 && col >= alpha[r - 1] && T.rows[r - 1][col - alpha[r - 1]] >= v) return false;
    }
  }
  if (content != skew_content(nu, alpha)) return false;
  const auto word = reverse_reading_word(T.rows);
  if (!is_alpha_lattice(word, alpha)) return false;
  return satisfies_alpha_condition(T.rows, alpha);
}

void for_each_kron_tableau(const Partition& lambda, const Partition& nu,
                           const Partition& alpha,
                           const std::function<bool(const KroneckerTableau&)>& visit) {
  if (lambda.size() != nu.size() || !contains(alpha, lambda) || !contains(alpha, nu)) return;
  SkewFiller filler({lambda, alpha, skew_content(nu, alpha), alpha});
  KroneckerTableau T{lambda, alpha, {}};
  const bool short_shape = lambda.length() < 2;
  filler.run(
      [&](const Filling& rows) {
        if (short_shape && !satisfies_alpha_condition(rows, alpha)) return true;
        T.rows = rows;
        return visit(T);
      },
      [&](int r, const Filling& rows) {
        return r != 1 || satisfies_alpha_condition(rows, alpha);
      });
}

std::vector<KroneckerTableau> enumerate_kron_tableaux(const Partition& lambda,
                                                      const Partition& nu,
                                                      const Partition& alpha) {
  std::vector<KroneckerTableau> out;
  for_each_kron_tableau(lambda, nu, alpha, [&](const KroneckerTableau& T) {
    out.push_back(T);
    return true;
  });
  return out;
}

std::uint64_t count_kron_tableaux(const Partition& lambda, const Partition& nu,
                                  const Partition& alpha) {
  std::uint64_t n = 0;
  for_each_kron_tableau(lambda, nu, alpha, [&](const KroneckerTableau&) {
    ++n;
    return true;
  });
  return n;
}

bool two_row_rule_applies(int p, const Partition& lambda) {
  return lambda.first() >= 2 * p - 1 || lambda.length() >= 2 * p - 1;
}

std::uint64_t two_row_multiplicity(int n, int p, const Partition& lambda, const Partition& nu) {
  if (p < 1 || n < 2 * p)
    throw std::invalid_argument("two_row_multiplicity: need p >= 1 and n >= 2p");
  if (lambda.size() != n || nu.size() != n)
    throw std::invalid_argument("two_row_multiplicity: |lambda| and |nu| must equal n");
  Partition outer = lambda;
  Partition type = nu;
  if (lambda.first() < 2 * p - 1) {
    if (lambda.length() < 2 * p - 1)
      throw RuleNotApplicable("two-row rule needs lambda_1 >= 2p-1 or length(lambda) >= 2p-1 (p=" +
                              std::to_string(p) + ", lambda=" + lambda.str() + ")");
    outer = conjugate(lambda);
    type = conjugate(nu);
  }
  std::vector<Partition> alphas;
  for (Partition& alpha : partitions_of(p))
    if (contains(alpha, outer) && contains(alpha, type)) alphas.push_back(std::move(alpha));

  const int workers = std::min<int>(thread_count(), static_cast<int>(alphas.size()));
  if (workers <= 1) {
    std::uint64_t total = 0;
    for (const auto& alpha : alphas) total += count_kron_tableaux(outer, type, alpha);
    return total;
  }
  std::vector<std::future<std::uint64_t>> parts;
  for (int w = 0; w < workers; ++w)
    parts.push_back(std::async(std::launch::async, [&, w] {
      std::uint64_t sub = 0;
      for (std::size_t i = static_cast<std::size_t>(w); i < alphas.size();
           i += static_cast<std::size_t>(workers))
        sub += count_kron_tableaux(outer, type, alphas[i]);
      return sub;
    }));
  std::uint64_t total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

}  // namespace kron
