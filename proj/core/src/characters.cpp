#include "kron/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "kron/config.hpp"
#include "kron/errors.hpp"
#include "kron/skew_filling.hpp"

namespace kron {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

class CharacterCache {
 public:
  std::int64_t get(const std::vector<int>& key, bool& hit) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    hit = it != map_.end();
    return hit ? it->second : 0;
  }
  void put(std::vector<int> key, std::int64_t value) {
    std::unique_lock lock(mutex_);
    map_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, std::int64_t, VecHash> map_;
};

CharacterCache& cache() {
  static CharacterCache instance;
  return instance;
}

// Beta set of a partition with exactly `len` beads: beta_i = lambda_i + len - 1 - i.
std::vector<int> beta_set(const std::vector<int>& lambda, int len) {
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    int part = i < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i)] : 0;
    beta[static_cast<std::size_t>(i)] = part + len - 1 - i;
  }
  return beta;
}

std::vector<int> from_beta(const std::vector<int>& beta) {
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

Integer hook_dimension(const std::vector<int>& lambda) {
  int n = 0;
  for (int p : lambda) n += p;
  Integer hooks = 1;
  const Partition shape(lambda);
  const Partition conj = conjugate(shape);
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape[r]; ++c) hooks *= (shape[r] - c) + (conj[c] - r) - 1;
  return factorial(n) / hooks;
}

// rho is consumed from position `from`; all remaining parts are >= 1.
std::int64_t mn(const std::vector<int>& lambda, const std::vector<int>& rho, std::size_t from) {
  if (from == rho.size()) return lambda.empty() ? 1 : 0;
  if (rho[from] == 1) return static_cast<std::int64_t>(hook_dimension(lambda));
  if (lambda.size() == 1) return 1;

  std::vector<int> key = lambda;
  key.push_back(-1);
  key.insert(key.end(), rho.begin() + static_cast<std::ptrdiff_t>(from), rho.end());
  bool hit = false;
  std::int64_t cached = cache().get(key, hit);
  if (hit) return cached;

  const int r = rho[from];
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta = beta_set(lambda, len);
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int target = b - r;
    if (target < 0) continue;
    // Beads are strictly decreasing; the strip is legal when target is empty.
    int between = 0;
    bool blocked = false;
    for (int j = i + 1; j < len; ++j) {
      const int bj = beta[static_cast<std::size_t>(j)];
      if (bj == target) {
        blocked = true;
        break;
      }
      if (bj > target) ++between;
    }
    if (blocked) continue;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    const std::int64_t sub = mn(from_beta(moved), rho, from + 1);
    total += (between % 2 == 0) ? sub : -sub;
  }
  cache().put(std::move(key), total);
  return total;
}

void require_cap(int n) {
  if (!oracle_allows(n))
    throw ScaleExceeded("character oracle scale exceeded: n=" + std::to_string(n) +
                        ", cap " + std::to_string(oracle_cap()));
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("mn_character: |lambda| != |rho|");
  return mn(lambda.parts(), rho.parts(), 0);
}

Integer dimension(const Partition& lambda) { return hook_dimension(lambda.parts()); }

Integer kronecker_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int n = lambda.size();
  if (mu.size() != n || nu.size() != n)
    throw std::invalid_argument("kronecker_coeff: partitions of different sizes");
  require_cap(n);
  const Integer nfact = factorial(n);
  Integer acc = 0;
  for (const Partition& rho : partitions_of(n)) {
    const std::int64_t a = mn_character(lambda, rho);
    if (a == 0) continue;
    const std::int64_t b = mn_character(mu, rho);
    if (b == 0) continue;
    const std::int64_t c = mn_character(nu, rho);
    if (c == 0) continue;
    acc += Integer(a) * b * c * (nfact / z_weight(rho));
  }
  if (acc % nfact != 0) throw std::logic_error("kronecker_coeff: non-integral character sum");
  return acc / nfact;
}

std::map<Partition, Integer> kronecker_product(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("kronecker_product: partitions of different sizes");
  require_cap(mu.size());
  std::map<Partition, Integer> out;
  for (const Partition& lambda : partitions_of(mu.size())) {
    Integer g = kronecker_coeff(lambda, mu, nu);
    if (g != 0) out.emplace(lambda, std::move(g));
  }
  return out;
}

Integer lr_coeff(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  if (alpha.size() + beta.size() != gamma.size())
    throw std::invalid_argument("lr_coeff: |alpha| + |beta| != |gamma|");
  if (!contains(alpha, gamma)) return 0;
  SkewFiller filler({gamma, alpha, beta.parts(), Partition{}});
  return Integer(filler.count());
}

CharacterTable character_table(int n) {
  if (n < 0) throw std::invalid_argument("character_table: negative n");
  require_cap(n);
  CharacterTable table;
  table.n = n;
  table.partitions = partitions_of(n);
  for (const Partition& lambda : table.partitions) {
    std::vector<std::int64_t> row;
    row.reserve(table.partitions.size());
    for (const Partition& rho : table.partitions) row.push_back(mn_character(lambda, rho));
    table.values.push_back(std::move(row));
  }
  return table;
}

}  // namespace kron
