#pragma once

// Brute-force reference implementations used only by the tests. None of
// them shares code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline int total(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline void partitions_rec(int n, int max_part, Parts& cur, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Centraliser order of a permutation with cycle type rho.
inline std::int64_t z(const Parts& rho) {
  std::map<int, int> mult;
  for (int p : rho) ++mult[p];
  std::int64_t out = 1;
  for (auto [p, m] : mult) {
    for (int i = 0; i < m; ++i) out *= p;
    out *= factorial(m);
  }
  return out;
}

// Number of ways to send each part of rho to one of the variables so that
// variable j receives total e[j].
inline std::int64_t power_sum_coefficient(const Parts& rho, std::size_t idx, std::vector<int>& e) {
  if (idx == rho.size())
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; }) ? 1 : 0;
  std::int64_t out = 0;
  for (auto& slot : e) {
    if (slot < rho[idx]) continue;
    slot -= rho[idx];
    out += power_sum_coefficient(rho, idx + 1, e);
    slot += rho[idx];
  }
  return out;
}

/// Frobenius: chi^lambda(rho) = [x^{lambda+delta}] a_delta * prod p_{rho_i}.
inline std::int64_t character(const Parts& lambda, const Parts& rho) {
  const int k = std::max<int>(1, static_cast<int>(lambda.size()));
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t out = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> e(static_cast<std::size_t>(k));
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      const int part = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
      e[i] = part + (k - 1 - i) - (k - 1 - perm[i]);
      if (e[i] < 0) ok = false;
    }
    if (!ok) continue;
    const std::int64_t c = power_sum_coefficient(rho, 0, e);
    out += (inversions % 2 == 0) ? c : -c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::int64_t kronecker(const Parts& l, const Parts& m, const Parts& n) {
  const int size = total(l);
  std::int64_t acc = 0;
  for (const Parts& rho : partitions(size))
    acc += character(l, rho) * character(m, rho) * character(n, rho) * (factorial(size) / z(rho));
  return acc / factorial(size);
}

// ---------------------------------------------------------------------------
// Semistandard tableaux

/// Semistandard tableaux of shape outer/inner with content `content`
/// (content[v-1] copies of v), filled cell by cell in row order.
inline std::int64_t count_ssyt(const Parts& outer, const Parts& inner, Parts content) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(outer.size()); ++r) {
    const int start = r < static_cast<int>(inner.size()) ? inner[r] : 0;
    for (int c = start; c < outer[r]; ++c) cells.emplace_back(r, c);
  }
  std::map<std::pair<int, int>, int> grid;
  std::function<std::int64_t(std::size_t)> rec = [&](std::size_t idx) -> std::int64_t {
    if (idx == cells.size()) return 1;
    auto [r, c] = cells[idx];
    int lo = 1;
    if (auto left = grid.find({r, c - 1}); left != grid.end()) lo = std::max(lo, left->second);
    if (auto up = grid.find({r - 1, c}); up != grid.end()) lo = std::max(lo, up->second + 1);
    std::int64_t out = 0;
    for (int v = lo; v <= static_cast<int>(content.size()); ++v) {
      if (content[v - 1] == 0) continue;
      --content[v - 1];
      grid[{r, c}] = v;
      out += rec(idx + 1);
      grid.erase({r, c});
      ++content[v - 1];
    }
    return out;
  };
  return rec(0);
}

inline std::int64_t kostka(const Parts& shape, const Parts& weight) { return count_ssyt(shape, {}, weight); }

/// c^gamma_{alpha beta} from the monomial expansion of s_alpha s_beta and
/// inversion of the unitriangular Kostka matrix.
inline std::int64_t lr(const Parts& alpha, const Parts& beta, const Parts& gamma) {
  const int n = total(gamma);
  if (total(alpha) + total(beta) != n) return 0;
  auto sorted_desc = [](Parts p) {
    std::sort(p.begin(), p.end(), std::greater<>());
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
  };
  // [m_w] s_alpha s_beta for a partition w.
  auto monomial = [&](const Parts& w) {
    std::int64_t out = 0;
    Parts w1(w.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
      if (idx == w.size()) {
        if (left != 0) return;
        Parts w2(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) w2[i] = w[i] - w1[i];
        out += kostka(alpha, sorted_desc(w1)) * kostka(beta, sorted_desc(w2));
        return;
      }
      for (int v = 0; v <= std::min(left, w[idx]); ++v) {
        w1[idx] = v;
        rec(idx + 1, left - v);
      }
      w1[idx] = 0;
    };
    rec(0, total(alpha));
    return out;
  };
  // partitions(n) is in reverse lexicographic order, which refines dominance.
  std::map<Parts, std::int64_t> coeff;
  for (const Parts& g : partitions(n)) {
    std::int64_t c = monomial(g);
    for (const auto& [h, ch] : coeff) c -= ch * kostka(h, g);
    if (c != 0) coeff[g] = c;
    if (g == gamma) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Kronecker tableaux by brute force

inline bool alpha_lattice(const std::vector<int>& word, const Parts& alpha, int max_value) {
  std::vector<int> count(static_cast<std::size_t>(max_value) + 2, 0);
  auto a = [&](int i) { return i - 1 < static_cast<int>(alpha.size()) ? alpha[i - 1] : 0; };
  for (int v : word) {
    ++count[v];
    for (int i = 1; i <= max_value; ++i)
      if (count[i] + a(i) < count[i + 1] + a(i + 1)) return false;
  }
  return true;
}

/// Fillings of lambda/alpha with content nu/alpha that are semistandard, have
/// an alpha-lattice reverse reading word and satisfy the alpha-condition.
inline std::vector<std::vector<std::vector<int>>> kron_tableaux(const Parts& lambda, const Parts& nu,
                                                                const Parts& alpha) {
  auto at = [](const Parts& p, int i) { return i < static_cast<int>(p.size()) ? p[i] : 0; };
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> content;
  for (int i = 0; i < static_cast<int>(nu.size()); ++i)
    for (int c = 0; c < nu[i] - at(alpha, i); ++c) content.push_back(i + 1);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
    for (int c = at(alpha, r); c < lambda[r]; ++c) cells.emplace_back(r, c);
  if (cells.size() != content.size()) return out;
  std::sort(content.begin(), content.end());
  const int max_value = static_cast<int>(nu.size());
  do {
    std::vector<std::vector<int>> rows(lambda.size());
    for (std::size_t t = 0; t < cells.size(); ++t) rows[cells[t].first].push_back(content[t]);
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      ok = std::is_sorted(rows[r].begin(), rows[r].end());
    for (std::size_t t = 0; t < cells.size() && ok; ++t) {
      auto [r, c] = cells[t];
      if (r == 0 || c < at(alpha, r - 1)) continue;
      ok = rows[r - 1][c - at(alpha, r - 1)] < content[t];
    }
    if (!ok) continue;
    std::vector<int> word;
    for (const auto& row : rows) word.insert(word.end(), row.rbegin(), row.rend());
    if (!alpha_lattice(word, alpha, max_value)) continue;
    const int gap = at(alpha, 0) - at(alpha, 1);
    if (gap > 0) {
      const int ones_row2 = rows.size() > 1 ? static_cast<int>(std::count(rows[1].begin(), rows[1].end(), 1)) : 0;
      const int twos_row1 = rows.empty() ? 0 : static_cast<int>(std::count(rows[0].begin(), rows[0].end(), 2));
      if (ones_row2 != gap && twos_row1 != gap) continue;
    }
    out.push_back(rows);
  } while (std::next_permutation(content.begin(), content.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Plane partitions and coloured partitions

/// Histogram by weight of monotone r x s matrices with entries in 0..t.
inline std::vector<std::int64_t> pp_histogram(int r, int s, int t) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(r * s * t) + 1, 0);
  std::vector<int> m(static_cast<std::size_t>(r * s), 0);
  std::function<void(int)> rec = [&](int idx) {
    if (idx == r * s) {
      ++hist[static_cast<std::size_t>(std::accumulate(m.begin(), m.end(), 0))];
      return;
    }
    for (int v = 0; v <= t; ++v) {
      const int i = idx / s, j = idx % s;
      if (i > 0 && m[(i - 1) * s + j] < v) continue;
      if (j > 0 && m[i * s + j - 1] < v) continue;
      m[idx] = v;
      rec(idx + 1);
    }
    m[idx] = 0;
  };
  rec(0);
  return hist;
}

/// Number of multisets of the given part weights (repeats count as distinct
/// kinds) with total n.
inline std::vector<std::int64_t> multiset_counts(const std::vector<int>& weights, int N) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(N) + 1, 0);
  ways[0] = 1;
  for (int w : weights)
    for (int n = w; n <= N; ++n) ways[n] += ways[n - w];
  return ways;
}

/// Coefficients of prod_i (1 - x^i)^{-e_i} by repeated geometric expansion.
inline std::vector<std::int64_t> inverse_product(const std::map<int, int>& exponents, int N) {
  std::vector<int> weights;
  for (auto [i, e] : exponents)
    for (int t = 0; t < e; ++t) weights.push_back(i);
  return multiset_counts(weights, N);
}

}  // namespace oracle
