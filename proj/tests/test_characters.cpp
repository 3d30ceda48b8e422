#include <doctest.h>

#include <algorithm>
#include <array>
#include <stdexcept>

#include "kron/characters.hpp"
#include "kron/config.hpp"
#include "kron/errors.hpp"
#include "oracles.hpp"

using kron::Integer;
using kron::Partition;

TEST_SUITE("characters") {
  TEST_CASE("small values") {
    CHECK(kron::mn_character(Partition{4}, Partition{2, 1, 1}) == 1);
    CHECK(kron::mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(kron::mn_character(Partition{1, 1, 1}, Partition{3}) == 1);
    CHECK(kron::mn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(kron::mn_character(Partition{}, Partition{}) == 1);
    CHECK(kron::dimension(Partition{3, 2}) == 5);
    CHECK(kron::dimension(Partition{5, 3, 2, 1}) == 2310);
    CHECK_THROWS_AS(kron::mn_character(Partition{2}, Partition{1}), std::invalid_argument);
  }

  TEST_CASE("agrees with the Frobenius formula for n <= 7") {
    for (int n = 0; n <= 7; ++n)
      for (const Partition& lambda : kron::partitions_of(n))
        for (const Partition& rho : kron::partitions_of(n))
          CHECK(kron::mn_character(lambda, rho) == oracle::character(lambda.parts(), rho.parts()));
  }

  TEST_CASE("row and column orthogonality for n <= 10") {
    for (int n = 1; n <= 10; ++n) {
      const auto table = kron::character_table(n);
      const std::size_t m = table.partitions.size();
      std::vector<Integer> class_size(m);
      for (std::size_t j = 0; j < m; ++j) class_size[j] = kron::factorial(n) / kron::z_weight(table.partitions[j]);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
          Integer rows = 0, cols = 0;
          for (std::size_t t = 0; t < m; ++t) {
            rows += class_size[t] * table.values[a][t] * table.values[b][t];
            cols += Integer(table.values[t][a]) * table.values[t][b];
          }
          CHECK(rows == (a == b ? kron::factorial(n) : Integer(0)));
          CHECK(cols == (a == b ? kron::z_weight(table.partitions[a]) : Integer(0)));
        }
    }
  }

  TEST_CASE("Kronecker coefficients: trivial and sign twists") {
    CHECK(kron::kronecker_coeff(Partition{2}, Partition{1, 1}, Partition{1, 1}) == 1);
    CHECK(kron::kronecker_coeff(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}) == 1);
    for (int n = 1; n <= 8; ++n) {
      const auto parts = kron::partitions_of(n);
      const Partition trivial{n};
      const Partition sign = kron::conjugate(trivial);
      for (const Partition& l : parts)
        for (const Partition& m : parts) {
          CHECK(kron::kronecker_coeff(l, m, trivial) == (l == m ? 1 : 0));
          CHECK(kron::kronecker_coeff(l, m, sign) == (l == kron::conjugate(m) ? 1 : 0));
        }
    }
  }

  TEST_CASE("Kronecker coefficients are symmetric and match the oracle") {
    for (int n = 1; n <= 6; ++n) {
      const auto parts = kron::partitions_of(n);
      for (const Partition& l : parts)
        for (const Partition& m : parts)
          for (const Partition& v : parts) {
            const Integer g = kron::kronecker_coeff(l, m, v);
            CHECK(g == oracle::kronecker(l.parts(), m.parts(), v.parts()));
            CHECK(g >= 0);
          }
    }
    for (int n = 7; n <= 8; ++n) {
      const auto parts = kron::partitions_of(n);
      for (const Partition& l : parts)
        for (const Partition& m : parts)
          for (const Partition& v : parts) {
            if (m < l || v < m) continue;
            std::array<Partition, 3> t{l, m, v};
            const Integer g = kron::kronecker_coeff(l, m, v);
            std::sort(t.begin(), t.end());
            do {
              CHECK(kron::kronecker_coeff(t[0], t[1], t[2]) == g);
            } while (std::next_permutation(t.begin(), t.end()));
          }
    }
  }

  TEST_CASE("Kronecker product expansions") {
    const auto p = kron::kronecker_product(Partition{2, 1}, Partition{2, 1});
    CHECK(p.size() == 3);
    CHECK(p.at(Partition{3}) == 1);
    CHECK(p.at(Partition{2, 1}) == 1);
    CHECK(p.at(Partition{1, 1, 1}) == 1);
    const auto q = kron::kronecker_product(Partition{1, 1}, Partition{2});
    CHECK(q.size() == 1);
    CHECK(q.at(Partition{1, 1}) == 1);
    const auto r = kron::kronecker_product(Partition{5}, Partition{3, 2});
    CHECK(r.size() == 1);
    CHECK(r.at(Partition{3, 2}) == 1);
    // Dimensions multiply.
    for (const Partition& m : kron::partitions_of(6))
      for (const Partition& v : kron::partitions_of(6)) {
        Integer dim = 0;
        for (const auto& [l, g] : kron::kronecker_product(m, v)) dim += g * kron::dimension(l);
        CHECK(dim == kron::dimension(m) * kron::dimension(v));
      }
  }

  TEST_CASE("Littlewood-Richardson coefficients") {
    CHECK(kron::lr_coeff(Partition{2, 1}, Partition{}, Partition{2, 1}) == 1);
    CHECK(kron::lr_coeff(Partition{1}, Partition{1, 1}, Partition{2, 1}) == 1);
    CHECK(kron::lr_coeff(Partition{2, 1}, Partition{2, 1}, Partition{4, 2}) == 1);
    CHECK(kron::lr_coeff(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(kron::lr_coeff(Partition{3}, Partition{1}, Partition{2, 2}) == 0);
    CHECK_THROWS_AS(kron::lr_coeff(Partition{1}, Partition{1}, Partition{3}), std::invalid_argument);
    for (int n = 0; n <= 7; ++n)
      for (int a = 0; a <= n; ++a)
        for (const Partition& g : kron::partitions_of(n))
          for (const Partition& alpha : kron::partitions_of(a))
            for (const Partition& beta : kron::partitions_of(n - a)) {
              const Integer c = kron::lr_coeff(alpha, beta, g);
              CHECK(c == oracle::lr(alpha.parts(), beta.parts(), g.parts()));
              CHECK(c == kron::lr_coeff(beta, alpha, g));
            }
  }

  TEST_CASE("oracle cap") {
    const int saved = kron::oracle_cap();
    kron::set_oracle_cap(5);
    CHECK_THROWS_AS(kron::kronecker_coeff(Partition{6}, Partition{6}, Partition{6}), kron::ScaleExceeded);
    CHECK(kron::kronecker_coeff(Partition{5}, Partition{5}, Partition{5}) == 1);
    kron::set_oracle_cap(0);
    CHECK_FALSE(kron::oracle_allows(0));
    CHECK_THROWS_AS(kron::character_table(1), kron::ScaleExceeded);
    kron::set_oracle_cap(saved);
    CHECK(kron::oracle_allows(saved));
  }
}
