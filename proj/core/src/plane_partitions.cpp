#include "kron/plane_partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace kron {

int PlanePartition::weight() const {
  int w = 0;
  for (const auto& row : entries)
    for (int v : row) w += v;
  return w;
}

bool PlanePartition::valid() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      const int v = entries[i][j];
      if (v < 0) return false;
      if (j > 0 && entries[i][j - 1] < v) return false;
      if (i > 0 && (j >= entries[i - 1].size() || entries[i - 1][j] < v)) return false;
    }
  return true;
}

namespace {

// Fills cells row-major; each cell is bounded by its left and upper
// neighbours, and by what is left of the weight budget when one is given.
struct PPWalk {
  int r, s, t;
  int budget;  // negative: no weight target
  PlanePartition pp;
  const std::function<bool(const PlanePartition&)>* visit = nullptr;
  std::uint64_t counted = 0;
  bool stopped = false;

  void cell(int idx, int remaining) {
    if (stopped) return;
    if (idx == r * s) {
      if (budget >= 0 && remaining != 0) return;
      if (visit) {
        if (!(*visit)(pp)) stopped = true;
      } else {
        ++counted;
      }
      return;
    }
    const int i = idx / s;
    const int j = idx % s;
    int hi = t;
    if (j > 0) hi = std::min(hi, pp.entries[i][j - 1]);
    if (i > 0) hi = std::min(hi, pp.entries[i - 1][j]);
    if (budget >= 0) hi = std::min(hi, remaining);
    for (int v = hi; v >= 0 && !stopped; --v) {
      pp.entries[i][j] = v;
      cell(idx + 1, budget >= 0 ? remaining - v : remaining);
    }
    pp.entries[i][j] = 0;
  }
};

}  // namespace

void for_each_pp(int r, int s, int t, const std::function<bool(const PlanePartition&)>& visit) {
  if (r < 0 || s < 0 || t < 0) throw std::invalid_argument("box dimensions must be non-negative");
  PPWalk w{r, s, t, -1, {}, &visit};
  w.pp.entries.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(s), 0));
  w.cell(0, 0);
}

std::vector<PlanePartition> enumerate_pp(int r, int s, int t) {
  std::vector<PlanePartition> out;
  for_each_pp(r, s, t, [&](const PlanePartition& pp) {
    out.push_back(pp);
    return true;
  });
  return out;
}

Integer count_pp(int k, int r, int s) {
  if (k < 0 || r < 0 || s < 0) throw std::invalid_argument("count_pp: negative argument");
  if (k == 0 || r == 0 || s == 0) return k == 0 ? 1 : 0;
  PPWalk w{r, s, k, k, {}, nullptr};
  w.pp.entries.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(s), 0));
  w.cell(0, k);
  return Integer(w.counted);
}

IntegerSeries macmahon_series(int r, int s, int t, int N) {
  if (r < 0 || s < 0 || t < 0 || N < 0) throw std::invalid_argument("macmahon_series: negative argument");
  IntegerSeries series = IntegerSeries::one(N);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j) {
      const int top = i + j + t - 1;
      if (top <= N) {
        std::vector<Integer> c(static_cast<std::size_t>(top) + 1, 0);
        c[0] = 1;
        c[static_cast<std::size_t>(top)] = -1;
        series = series * IntPolynomial(std::move(c));
      }
      series.divide_by_one_minus_x_pow(i + j - 1);
    }
  return series;
}

IntegerSeries box_series(int r, int s, int N) { return inv_product_series(box_exponents(r, s), N); }

Integer family3_convolution(int a, int j) {
  if (a < 2) throw std::invalid_argument("family3_convolution needs a >= 2");
  if (j < 0) throw std::invalid_argument("family3_convolution: negative j");
  Integer total = 0;
  for (int l = 0; l <= j; ++l) total += count_pp(l, 3, a - 1) * count_pp(j - l, 2, 1);
  return total;
}

std::vector<Integer> lemma2_transform(const std::vector<Integer>& r) {
  std::vector<Integer> q(r.size(), 0);
  for (std::size_t n = 0; n < r.size(); ++n)
    for (std::size_t m = 0; m <= n; ++m) q[n] += Integer((n - m) / 2 + 1) * r[m];
  return q;
}

std::vector<Integer> lemma2_inverse(const std::vector<Integer>& q) {
  std::vector<Integer> r(q.size(), 0);
  auto at = [&](long long i) { return i < 0 ? Integer(0) : q[static_cast<std::size_t>(i)]; };
  for (std::size_t n = 0; n < q.size(); ++n) {
    const long long i = static_cast<long long>(n);
    r[n] = at(i) - at(i - 1) - at(i - 2) + at(i - 3);
  }
  return r;
}

}  // namespace kron
