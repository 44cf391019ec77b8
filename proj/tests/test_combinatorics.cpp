#include <doctest.h>

#include <set>

#include "symtensor/combinatorics.hpp"
#include "symtensor/scalar.hpp"

using namespace symtensor;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

}  // namespace

TEST_CASE("enum_partitions") {
  CHECK(parts_of(enum_partitions(4, 2)) == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}});
  CHECK(parts_of(enum_partitions(3, 3)) == std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
  const auto empty = enum_partitions(0, 3);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].length() == 0);
  // OEIS A000041 for the unrestricted counts.
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(enum_partitions(n, n + 1).size() == counts[n]);
}

TEST_CASE("Partition rejects malformed parts") {
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, -1}));
  CHECK(Partition({2, 1, 0, 0}).parts() == std::vector<int>{2, 1});
}

TEST_CASE("dual_partition") {
  CHECK(dual_partition(Partition({3, 1})).parts() == std::vector<int>{2, 1, 1});
  CHECK(dual_partition(Partition({5})).parts() == std::vector<int>(5, 1));
  CHECK(dual_partition(Partition({2, 2})).parts() == std::vector<int>{2, 2});
  for (int n = 0; n <= 12; ++n) {
    for (const auto& lambda : enum_partitions(n, n)) {
      CHECK(dual_partition(dual_partition(lambda)) == lambda);
    }
  }
}

TEST_CASE("enum_ssyt") {
  SUBCASE("two-row shapes over two symbols are indexed by the count of 2s") {
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; 2 * k <= n; ++k) {
        const auto ts = enum_ssyt(Partition({n - k, k}), 2);
        REQUIRE(ts.size() == static_cast<std::size_t>(n - 2 * k + 1));
        for (std::size_t idx = 0; idx < ts.size(); ++idx) {
          CHECK(ts[idx].weight(2)[1] == k + static_cast<int>(idx));
        }
      }
    }
  }
  CHECK(enum_ssyt(Partition({1}), 4).size() == 4);
  const auto square = enum_ssyt(Partition({2, 2}), 2);
  REQUIRE(square.size() == 1);
  CHECK(square[0].reading_word() == "1122");
  CHECK(enum_ssyt(Partition({1, 1, 1}), 2).empty());

  const auto ts = enum_ssyt(Partition({2, 1}), 3);
  CHECK(ts.size() == 8);
  CHECK(ts.front() == Tableau::row_filling(Partition({2, 1})));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(ts[i].is_semistandard());
    if (i > 0) CHECK(ts[i - 1].reading_word() < ts[i].reading_word());
  }
}

TEST_CASE("dimension identity: sum of squared SSYT counts") {
  for (int p = 1; p <= 3; ++p) {
    for (int n = 0; n <= 8; ++n) {
      mpz_class total = 0;
      for (const auto& lambda : enum_partitions(n, p)) {
        const auto m = enum_ssyt(lambda, p).size();
        total += m * m;
      }
      CHECK(total == binomial(n + p * p - 1, p * p - 1));
    }
  }
}

TEST_CASE("enum_profiles") {
  CHECK(enum_profiles(4, 2).size() == 35);
  CHECK(enum_profiles(2, 3).size() == 45);
  const auto zero = enum_profiles(0, 3);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].total() == 0);
  const auto ps = enum_profiles(3, 2);
  CHECK(ps.front() == Profile(2, {3, 0, 0, 0}));
  std::set<Profile> unique(ps.begin(), ps.end());
  CHECK(unique.size() == ps.size());
  for (const auto& d : ps) {
    CHECK(d.total() == 3);
    CHECK(d.transpose().total() == 3);
  }
  CHECK(enum_profiles(3, 2) == ps);
}

TEST_CASE("tableau and profile correspondence") {
  const Partition lambda({3, 2});
  CHECK(tableau_profile(Tableau::row_filling(lambda), 2) == Profile::diagonal({3, 2}));

  SUBCASE("binary tableaux t_{k,i}") {
    const int n = 7;
    for (int k = 0; 2 * k <= n; ++k) {
      const auto ts = enum_ssyt(Partition({n - k, k}), 2);
      for (int i = k; i <= n - k; ++i) {
        const Profile expected(2, {n - i, 0, i - k, k});
        CHECK(tableau_profile(ts[i - k], 2) == expected);
        CHECK(profile_tableau(expected) == ts[i - k]);
      }
    }
  }

  SUBCASE("round trips over all SSYT") {
    for (int p = 1; p <= 3; ++p) {
      for (int n = 0; n <= 6; ++n) {
        for (const auto& shape : enum_partitions(n, p)) {
          for (const auto& t : enum_ssyt(shape, p)) {
            const Profile d = tableau_profile(t, p);
            CHECK(d.is_lower_triangular());
            CHECK(d.col_sums()[0] == shape[0]);
            CHECK(profile_tableau(d) == t);
          }
        }
      }
    }
  }

  SUBCASE("profiles with a valid column-sum vector") {
    for (const auto& d : enum_profiles(4, 2)) {
      const auto t = profile_tableau(d);
      const auto cs = d.col_sums();
      if (cs[1] > cs[0]) {
        CHECK_FALSE(t);
      } else {
        REQUIRE(t);
        CHECK(tableau_profile(*t, 2) == d);
      }
    }
  }
}
