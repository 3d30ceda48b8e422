#include <doctest.h>

#include <set>
#include <stdexcept>

#include "kron/families.hpp"
#include "kron/tableaux.hpp"

using kron::ColouredPartition;
using kron::Filling;
using kron::Integer;
using kron::KroneckerTableau;
using kron::Partition;
using kron::TypedTableau;

namespace {

std::vector<int> run(std::vector<std::pair<int, int>> blocks) {
  std::vector<int> out;
  for (auto [value, times] : blocks) out.insert(out.end(), static_cast<std::size_t>(times), value);
  return out;
}

bool valid(const TypedTableau& t) {
  return kron::is_kronecker_tableau(t.tableau, t.tableau.outer, t.type, t.tableau.inner);
}

// Sum over alpha |- p of k^lambda_{alpha nu}.
std::uint64_t tableau_total(const Partition& lambda, const Partition& nu, int p) {
  std::uint64_t total = 0;
  for (const Partition& alpha : kron::partitions_of(p))
    if (kron::contains(alpha, lambda) && kron::contains(alpha, nu)) total += kron::count_kron_tableaux(lambda, nu, alpha);
  return total;
}

}  // namespace

TEST_SUITE("bijections") {
  TEST_CASE("first family, worked example") {
    const auto t = kron::bij_family1(ColouredPartition::parse("2,1~"), 3);
    CHECK(t.tableau.outer == Partition{9, 3, 3, 3});
    CHECK(t.type == Partition{9, 3, 3, 3});
    CHECK(t.tableau.inner == Partition{2, 1});
    CHECK(t.tableau.rows == Filling{run({{1, 6}, {2, 1}}), {1, 2}, {3, 3, 3}, {4, 4, 4}});
    CHECK(valid(t));
  }

  TEST_CASE("second family, worked example") {
    const auto t = kron::bij_family2(ColouredPartition::parse("4~,2~"), 3, 1);
    CHECK(t.tableau.outer == Partition{36, 12, 12, 12});
    CHECK(t.type == Partition{33, 13, 13, 13});
    CHECK(t.tableau.inner == Partition{5, 4, 2, 1});
    CHECK(t.tableau.rows ==
          Filling{run({{1, 27}, {2, 1}, {3, 2}, {4, 1}}), run({{2, 8}}), run({{1, 1}, {3, 9}}), run({{4, 11}})});
    CHECK(valid(t));
  }

  TEST_CASE("third family, worked example and its inverse") {
    const auto beta = ColouredPartition::parse("2~~,1");
    const auto t = kron::bij_family3(beta, 3, 7);
    CHECK(t.tableau.outer == Partition{21, 7, 7, 7});
    CHECK(t.type == Partition{17, 11, 7, 7});
    CHECK(t.tableau.inner == Partition{5, 1, 1});
    CHECK(t.tableau.rows == Filling{run({{1, 11}, {2, 4}, {4, 1}}), run({{1, 1}, {2, 5}}), run({{3, 6}}),
                                    run({{2, 1}, {4, 6}})});
    CHECK(valid(t));
    CHECK(kron::inv_bij_family3(t.tableau, 3, 7) == beta);
  }

  TEST_CASE("empty coloured partitions") {
    const auto t1 = kron::bij_family1(ColouredPartition{}, 2);
    CHECK(t1.tableau.outer.empty());
    CHECK(valid(t1));
    for (int k = 0; k <= 4; ++k) {
      const auto t3 = kron::bij_family3(ColouredPartition{}, 2, k);
      CHECK(t3.tableau.inner == (k == 0 ? Partition{} : Partition{k}));
      CHECK(valid(t3));
      CHECK(kron::inv_bij_family3(t3.tableau, 2, k) == ColouredPartition{});
    }
  }

  TEST_CASE("first family: injective onto the tableau set") {
    for (int a = 1; a <= 3; ++a)
      for (int k = 0; k <= (a == 3 ? 3 : 4); ++k) {
        std::set<KroneckerTableau> image;
        const auto betas = kron::enumerate_coloured(kron::alphabet_B(a), k);
        for (const auto& beta : betas) {
          const auto t = kron::bij_family1(beta, a);
          CHECK(valid(t));
          image.insert(t.tableau);
        }
        CHECK(image.size() == betas.size());
        if (k > 0) {
          const auto& sample = kron::bij_family1(betas.front(), a);
          CHECK(tableau_total(sample.tableau.outer, sample.type, k) == betas.size());
        }
      }
  }

  TEST_CASE("second family") {
    for (int k = 0; k <= 4; ++k)
      for (const auto& beta : kron::enumerate_coloured(kron::alphabet_B(2), k)) {
        const auto zero = kron::bij_family2(beta, 2, 0);
        const auto one = kron::bij_family1(beta, 2);
        CHECK(zero.tableau == one.tableau);
        CHECK(zero.type == one.type);
      }
    for (int k = 0; k <= 3; ++k) {
      std::set<KroneckerTableau> image;
      const auto betas = kron::enumerate_coloured(kron::alphabet_B(2), k);
      for (const auto& beta : betas) {
        const auto t = kron::bij_family2(beta, 2, 1);
        CHECK(valid(t));
        image.insert(t.tableau);
      }
      CHECK(Integer(image.size()) == kron::family1(2, 2, k));
      CHECK(Integer(image.size()) == kron::family2(2, 2, k + 3, 1));
      const auto sample = kron::bij_family2(betas.front(), 2, 1);
      CHECK(tableau_total(sample.tableau.outer, sample.type, k + 3) == image.size());
    }
  }

  TEST_CASE("third family: injective, onto, and inverted") {
    for (int a = 2; a <= 3; ++a)
      for (int j = 0; j <= 3; ++j)
        for (int k = 2 * j; k <= 2 * j + 1; ++k) {
          std::set<KroneckerTableau> image;
          const auto betas = kron::enumerate_coloured(kron::alphabet_C(a), j);
          for (const auto& beta : betas) {
            const auto t = kron::bij_family3(beta, a, k);
            CHECK(valid(t));
            CHECK(kron::inv_bij_family3(t.tableau, a, k) == beta);
            image.insert(t.tableau);
          }
          CHECK(image.size() == betas.size());
          CHECK(Integer(image.size()) == kron::diag_stable(a, j));
          if (k > 0 && a == 2) {
            const auto sample = kron::bij_family3(betas.front(), a, k);
            CHECK(tableau_total(sample.tableau.outer, sample.type, k) == image.size());
          }
        }
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(kron::bij_family1(ColouredPartition::parse("1"), 2), std::invalid_argument);
    CHECK_THROWS_AS(kron::bij_family1(ColouredPartition::parse("4~"), 2), std::invalid_argument);
    CHECK_THROWS_AS(kron::bij_family3(ColouredPartition::parse("2~~"), 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(kron::bij_family3(ColouredPartition::parse("1~,1~"), 2, 3), std::invalid_argument);
    auto t = kron::bij_family3(ColouredPartition::parse("1"), 2, 3).tableau;
    t.rows[2].back() = 2;
    CHECK_THROWS_AS(kron::inv_bij_family3(t, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(kron::inv_bij_family3(t, 2, 4), std::invalid_argument);
  }
}
