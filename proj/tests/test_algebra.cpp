#include <doctest.h>

#include <random>

#include "oracle_util.hpp"
#include "symtensor/algebra.hpp"
#include "symtensor/poly.hpp"

using namespace symtensor;
using symtensor::testing::dense_generating_poly;
using symtensor::testing::random_element;

namespace {

Profile unit(int p, int i, int j) {
  Profile e(p);
  e(i, j) = 1;
  return e;
}

}  // namespace

TEST_CASE("structure constants: trivial cases") {
  CHECK(structure_constant(Profile(1, {4}), Profile(1, {4}), Profile(1, {4})) == 1);
  const Profile mu = Profile::diagonal({2, 1, 1});
  CHECK(structure_constant(mu, mu, mu) == 1);
  CHECK_THROWS(structure_constant(Profile(2, {1, 0, 0, 0}), Profile(2, {1, 0, 0, 0}),
                                  Profile(2, {2, 0, 0, 0})));
}

TEST_CASE("structure constants match dense products") {
  for (int p = 1; p <= 3; ++p) {
    for (int n = 0; n <= (p == 3 ? 2 : 3); ++n) {
      const auto profiles = enum_profiles(n, p);
      for (const auto& l : profiles) {
        const IntMatrix al = brute_force_AD(l);
        for (const auto& m : profiles) {
          const auto product = from_dense(al * brute_force_AD(m), n, p);
          REQUIRE(product);
          for (const auto& nn : profiles) {
            CHECK(Scalar(mpq_class(structure_constant(l, m, nn))) == product->coeff(nn));
          }
        }
      }
    }
  }
}

TEST_CASE("structure constant transpose symmetry") {
  const auto profiles = enum_profiles(3, 2);
  for (const auto& l : profiles)
    for (const auto& m : profiles)
      for (const auto& n : profiles)
        CHECK(structure_constant(l, m, n) ==
              structure_constant(m.transpose(), l.transpose(), n.transpose()));
}

TEST_CASE("multiply") {
  std::mt19937 rng(17);
  const AlgebraElement id = AlgebraElement::identity(3, 2);
  const AlgebraElement all_ones = AlgebraElement::basis(Profile(2, {3, 0, 0, 0}));
  CHECK(multiply(all_ones, all_ones) == all_ones);

  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    const AlgebraElement a = random_element(rng, n, 2);
    const AlgebraElement b = random_element(rng, n, 2);
    const AlgebraElement c = random_element(rng, n, 2);
    const AlgebraElement ab = multiply(a, b);
    CHECK(multiply(a, AlgebraElement::identity(n, 2)) == a);
    CHECK(multiply(AlgebraElement::identity(n, 2), a) == a);
    CHECK(multiply(ab, c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, b + c) == ab + multiply(a, c));
    CHECK(multiply(a * Scalar(3), b) == ab * Scalar(3));
    CHECK(ab.adjoint() == multiply(b.adjoint(), a.adjoint()));
    if (n <= 3) CHECK(to_dense(ab) == to_dense(a) * to_dense(b));
  }
  CHECK(multiply(id, id) == id);
  CHECK_THROWS(multiply(id, AlgebraElement::identity(2, 2)));
}

TEST_CASE("elementary operators") {
  CHECK(elementary(2, 1, 1, 2) == AlgebraElement::basis(unit(2, 2, 1)));
  AlgebraElement expected(2, 2);
  expected.add_term(Profile(2, {1, 0, 1, 0}), 1);
  expected.add_term(Profile(2, {0, 0, 1, 1}), 1);
  CHECK(elementary(2, 1, 2, 2) == expected);
  CHECK_THROWS(elementary(1, 1, 2, 2));

  SUBCASE("dense definition") {
    for (int n = 1; n <= 3; ++n) {
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          if (i == j) continue;
          const IntMatrix dense = to_dense(elementary(i, j, n, 3));
          for (Eigen::Index a = 0; a < dense.rows(); ++a) {
            const auto wa = word_of(a, n, 3);
            for (Eigen::Index b = 0; b < dense.cols(); ++b) {
              const auto wb = word_of(b, n, 3);
              int diffs = 0;
              bool hit = false;
              for (int k = 0; k < n; ++k) {
                if (wa[k] != wb[k]) {
                  ++diffs;
                  hit = wa[k] == i && wb[k] == j;
                }
              }
              CHECK(dense(a, b) == ((diffs == 1 && hit) ? 1 : 0));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("elementary action on the basis, both sides") {
  for (int p = 2; p <= 3; ++p) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& d : enum_profiles(n, p)) {
        const IntMatrix ad = brute_force_AD(d);
        for (int i = 1; i <= p; ++i) {
          for (int j = 1; j <= p; ++j) {
            if (i == j) continue;
            const AlgebraElement op = elementary(i, j, n, p);
            // A_{i->j} A_D = sum_{k: D(j,k) > 0} (D(i,k) + 1) A_{D - E_{j,k} + E_{i,k}}
            AlgebraElement left(n, p);
            // A_D A_{i->j} = sum_{k: D(k,i) > 0} (D(k,j) + 1) A_{D - E_{k,i} + E_{k,j}}
            AlgebraElement right(n, p);
            for (int k = 1; k <= p; ++k) {
              if (d(j, k) > 0) {
                Profile e = d;
                e(j, k) -= 1;
                e(i, k) += 1;
                left.add_term(e, d(i, k) + 1);
              }
              if (d(k, i) > 0) {
                Profile e = d;
                e(k, i) -= 1;
                e(k, j) += 1;
                right.add_term(e, d(k, j) + 1);
              }
            }
            const IntMatrix dense_op = to_dense(op);
            CHECK(from_dense(dense_op * ad, n, p) == left);
            CHECK(from_dense(ad * dense_op, n, p) == right);
            CHECK(multiply(op, AlgebraElement::basis(d)) == left);
            CHECK(multiply(AlgebraElement::basis(d), op) == right);
          }
        }
      }
    }
  }
}

TEST_CASE("weight idempotents") {
  const int n = 3, p = 2;
  AlgebraElement sum(n, p);
  const auto weights = enum_compositions(n, p);
  for (const auto& mu : weights) {
    const AlgebraElement i_mu = weight_idempotent(mu);
    CHECK(multiply(i_mu, i_mu) == i_mu);
    for (const auto& nu : weights) {
      if (nu != mu) CHECK(multiply(i_mu, weight_idempotent(nu)).is_zero());
    }
    sum += i_mu;
  }
  CHECK(sum == AlgebraElement::identity(n, p));
  CHECK_THROWS(weight_idempotent({2, -1}));
}

TEST_CASE("lower triangular decomposition") {
  const auto diag = decompose_lower_triangular(Profile::diagonal({2, 1}));
  CHECK(diag.word.empty());
  CHECK(diag.weight == std::vector<int>{2, 1});
  CHECK(diag.factor == 1);
  CHECK_THROWS(decompose_lower_triangular(Profile(2, {0, 1, 0, 0})));

  const int n = 6;
  for (int k = 0; 2 * k <= n; ++k) {
    for (int i = k; i <= n - k; ++i) {
      const auto dec = decompose_lower_triangular(Profile(2, {n - i, 0, i - k, k}));
      CHECK(dec.weight == std::vector<int>{n - k, k});
      CHECK(dec.factor == factorial(i - k));
      if (i > k) {
        REQUIRE(dec.word.size() == 1);
        CHECK(dec.word[0] == ElementaryPower{2, 1, i - k});
      }
    }
  }

  SUBCASE("word applied to I_mu reproduces factor * A_D") {
    for (const auto& [n2, p2] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
      for (const auto& d : enum_profiles(n2, p2)) {
        if (!d.is_lower_triangular()) continue;
        const auto dec = decompose_lower_triangular(d);
        const AlgebraElement expected = AlgebraElement::basis(d) * Scalar(mpq_class(dec.factor));
        CHECK(apply_word(dec.word, dec.weight) == expected);
        // Same product through dense matrices.
        IntMatrix acc = brute_force_AD(Profile::diagonal(dec.weight));
        for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) {
          const IntMatrix op = to_dense(elementary(it->i, it->j, n2, p2));
          for (int k = 0; k < it->power; ++k) acc = op * acc;
        }
        CHECK(from_dense(acc, n2, p2) == expected);
      }
    }
  }
}

TEST_CASE("dense oracles") {
  const IntMatrix ones = brute_force_AD(Profile(2, {3, 0, 0, 0}));
  CHECK(ones.sum() == 1);
  CHECK(ones(0, 0) == 1);

  IntMatrix total = IntMatrix::Zero(27, 27);
  for (const auto& d : enum_profiles(3, 3)) {
    const IntMatrix m = brute_force_AD(d);
    total += m;
    CHECK(IntMatrix(m.transpose()) == brute_force_AD(d.transpose()));
  }
  CHECK(total == IntMatrix::Ones(27, 27));
  CHECK_THROWS_AS(brute_force_AD(Profile(2, {13, 0, 0, 0})), std::length_error);
  CHECK_THROWS_AS(brute_force_AD(Profile(2, {3, 0, 0, 0}), 4), std::length_error);

  const IntVector row = brute_force_et(Tableau::row_filling(Partition({4})), 2);
  CHECK(row.sum() == 1);
  CHECK(row(0) == 1);
}

TEST_CASE("e_t support, norms and the action lemma") {
  SUBCASE("binary norms") {
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; 2 * k <= n; ++k) {
        const auto ts = enum_ssyt(Partition({n - k, k}), 2);
        for (int i = k; i <= n - k; ++i) {
          const IntVector e = brute_force_et(ts[i - k], 2);
          CHECK(mpz_class(static_cast<long>(e.squaredNorm())) == mpz_class((mpz_class(1) << k) * binomial(n - 2 * k, i - k)));
          for (Eigen::Index a = 0; a < e.size(); ++a) {
            if (e(a) == 0) continue;
            int twos = 0;
            for (int s : word_of(a, n, 2)) twos += s == 2;
            CHECK(twos == i);
          }
        }
      }
    }
  }

  SUBCASE("A_D e_lambda = e_{t(D)}") {
    for (int p = 2; p <= 3; ++p) {
      for (int n = 1; n <= 4; ++n) {
        if (p == 3 && n == 4) continue;
        for (const auto& lambda : enum_partitions(n, p)) {
          const IntVector e_lambda = brute_force_et(Tableau::row_filling(lambda), p);
          for (const auto& d : enum_profiles(n, p)) {
            const IntVector lhs = brute_force_AD(d) * e_lambda;
            std::vector<int> padded(p, 0);
            for (int r = 0; r < lambda.length(); ++r) padded[r] = lambda[r];
            const bool match = d.col_sums() == padded;
            if (match) {
              CHECK(lhs == brute_force_et(*profile_tableau(d), p));
            } else {
              CHECK(lhs.isZero());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("lowering and raising operators realize left and right multiplication") {
  for (int n = 1; n <= 4; ++n) {
    const int p = 2;
    for (const auto& d : enum_profiles(n, p)) {
      const IntMatrix ad = brute_force_AD(d);
      const Poly f = dense_generating_poly(ad, n, p);
      for (int i = 1; i <= p; ++i) {
        for (int j = 1; j <= p; ++j) {
          if (i == j) continue;
          const IntMatrix op = to_dense(elementary(i, j, n, p));
          CHECK(apply_d(f, i, j) == dense_generating_poly(op * ad, n, p));
          CHECK(apply_d_star(f, i, j) == dense_generating_poly(ad * op, n, p));
        }
      }
    }
  }
}

TEST_CASE("P_lambda is the generating polynomial of e_lambda e_lambda^T") {
  for (int p = 1; p <= 3; ++p) {
    for (int n = 0; n <= (p == 3 ? 3 : 4); ++n) {
      for (const auto& lambda : enum_partitions(n, p)) {
        const IntVector e = brute_force_et(Tableau::row_filling(lambda), p);
        const IntMatrix outer = e * e.transpose();
        CHECK(p_lambda(lambda, p) == dense_generating_poly(outer, n, p));
      }
    }
  }
}
