#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "kron/partition.hpp"
#include "oracles.hpp"

using kron::Partition;

TEST_SUITE("partition") {
  TEST_CASE("construction validates and normalises") {
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    const Partition p{5, 3, 2, 1};
    CHECK(p.size() == 11);
    CHECK(p.length() == 4);
    CHECK(p.first() == 5);
    CHECK(p[3] == 1);
    CHECK(p[4] == 0);
    CHECK(p[-1] == 0);
  }

  TEST_CASE("text form round trips") {
    CHECK(Partition::parse("5,3,2,1") == Partition{5, 3, 2, 1});
    CHECK(Partition::parse(" 4, 2 ") == Partition{4, 2});
    CHECK(Partition::parse("").empty());
    CHECK(Partition{}.str().empty());
    CHECK(Partition{5, 3, 2, 1}.str() == "5,3,2,1");
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,3"), std::invalid_argument);
    for (const Partition& p : kron::partitions_of(7)) CHECK(Partition::parse(p.str()) == p);
  }

  TEST_CASE("partitions_of counts and order") {
    const std::vector<int> p_n{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
    for (int n = 0; n < static_cast<int>(p_n.size()); ++n) {
      const auto parts = kron::partitions_of(n);
      CHECK(static_cast<int>(parts.size()) == p_n[n]);
      for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i - 1] > parts[i]);
      for (const auto& p : parts) CHECK(p.size() == n);
    }
    const auto four = kron::partitions_of(4);
    CHECK(four.front() == Partition{4});
    CHECK(four[1] == Partition{3, 1});
    CHECK(four.back() == Partition{1, 1, 1, 1});
    CHECK(kron::partitions_of(6, 2).size() == 4);
    CHECK(kron::partitions_of(0).front().empty());
    CHECK_THROWS_AS(kron::partitions_of(-1), std::invalid_argument);
  }

  TEST_CASE("partitions_of agrees with the brute-force generator") {
    for (int n = 0; n <= 10; ++n) {
      const auto lib = kron::partitions_of(n);
      const auto ref = oracle::partitions(n);
      REQUIRE(lib.size() == ref.size());
      for (std::size_t i = 0; i < lib.size(); ++i) CHECK(lib[i].parts() == ref[i]);
    }
  }

  TEST_CASE("conjugate is an involution and transposes the diagram") {
    CHECK(kron::conjugate(Partition{5, 3, 2, 1}) == Partition{4, 3, 2, 1, 1});
    CHECK(kron::conjugate(Partition{}).empty());
    for (int n = 0; n <= 9; ++n)
      for (const Partition& p : kron::partitions_of(n)) {
        const Partition c = kron::conjugate(p);
        CHECK(kron::conjugate(c) == p);
        CHECK(c.size() == p.size());
        CHECK(c.length() == p.first());
      }
  }

  TEST_CASE("rectangles and padding") {
    CHECK(kron::rectangle(3, 2) == Partition{3, 3});
    CHECK(kron::rectangle(0, 4).empty());
    CHECK(kron::rectangle(4, 0).empty());
    CHECK(kron::pad(Partition{3, 3, 3}, 18) == Partition{9, 3, 3, 3});
    CHECK(kron::pad(Partition{}, 5) == Partition{5});
    CHECK(kron::pad(Partition{2, 1}, 5) == Partition{2, 2, 1});
    CHECK(kron::padding_floor(Partition{2, 1}) == 5);
    CHECK_THROWS_AS(kron::pad(Partition{2, 1}, 4), std::invalid_argument);
  }

  TEST_CASE("containment and skew shapes") {
    CHECK(kron::contains(Partition{3, 1}, Partition{5, 3, 2, 1}));
    CHECK_FALSE(kron::contains(Partition{3, 3}, Partition{5, 2}));
    CHECK(kron::contains(Partition{}, Partition{}));
    const kron::SkewShape s(Partition{5, 3, 2, 1}, Partition{3, 1});
    CHECK(s.cells() == 7);
    CHECK(s.row_length(0) == 2);
    CHECK(s.row_length(3) == 1);
    CHECK_THROWS_AS(kron::SkewShape(Partition{2}, Partition{3}), std::invalid_argument);
  }

  TEST_CASE("alpha-lattice words") {
    const std::vector<int> yamanouchi{1, 1, 2, 1, 2, 3};
    CHECK(kron::is_alpha_lattice(yamanouchi, Partition{}));
    const std::vector<int> starts_with_two{2, 1};
    CHECK_FALSE(kron::is_alpha_lattice(starts_with_two, Partition{}));
    CHECK(kron::is_alpha_lattice(starts_with_two, Partition{1}));
    const std::vector<int> empty;
    CHECK(kron::is_alpha_lattice(empty, Partition{2}));
    // Matches the brute-force check on every word over {1,2,3} of length 5.
    for (int code = 0; code < 243; ++code) {
      std::vector<int> word;
      for (int c = code, t = 0; t < 5; ++t, c /= 3) word.push_back(c % 3 + 1);
      for (const Partition& alpha : {Partition{}, Partition{1}, Partition{2, 1}, Partition{3, 1}})
        CHECK(kron::is_alpha_lattice(word, alpha) == oracle::alpha_lattice(word, alpha.parts(), 3));
    }
  }

  TEST_CASE("centraliser orders sum to one over n!") {
    CHECK(kron::z_weight(Partition{2, 2, 1}) == 8);
    CHECK(kron::z_weight(Partition{}) == 1);
    CHECK(kron::factorial(0) == 1);
    CHECK(kron::factorial(20) == kron::Integer("2432902008176640000"));
    for (int n = 0; n <= 12; ++n) {
      kron::Integer classes = 0;
      for (const Partition& rho : kron::partitions_of(n)) {
        CHECK(kron::z_weight(rho) == oracle::z(rho.parts()));
        classes += kron::factorial(n) / kron::z_weight(rho);
      }
      CHECK(classes == kron::factorial(n));
    }
  }
}
