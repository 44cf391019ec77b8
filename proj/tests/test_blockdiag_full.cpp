#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "oracle_util.hpp"
#include "symtensor/blockdiag_full.hpp"

using namespace symtensor;
using symtensor::testing::random_element;

namespace {

Eigen::MatrixXd to_double(const IntMatrix& m) { return m.cast<double>(); }

}  // namespace

TEST_CASE("inner product tables match the dense oracle") {
  for (const auto& [n, p] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2},
                             std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 1}}) {
    for (const auto& lambda : enum_partitions(n, p)) {
      const InnerProductTable table = inner_product_table(lambda, n, p);
      std::vector<IntVector> es;
      for (const auto& t : table.basis) es.push_back(brute_force_et(t, p));
      for (const auto& d : enum_profiles(n, p)) {
        const IntMatrix ad = brute_force_AD(d);
        const auto it = table.entries.find(d);
        for (std::size_t s = 0; s < table.size(); ++s) {
          for (std::size_t t = 0; t < table.size(); ++t) {
            const long long expected = es[t].dot(ad * es[s]);
            const Scalar got = it == table.entries.end() ? Scalar(0) : it->second(s, t);
            CHECK(got == Scalar(static_cast<long>(expected)));
          }
        }
      }
    }
  }
}

TEST_CASE("gram matrices") {
  const Matrix g = gram(Partition({2, 1}), 3, 3);
  for (std::size_t r = 0; r < g.rows(); ++r) CHECK(g(r, r).sign() > 0);
  CHECK(g.is_symmetric());

  // Two symbols: e_{k,i} have disjoint supports and norm 2^k C(n-2k, i-k).
  const int n = 6;
  for (int k = 0; 2 * k <= n; ++k) {
    const Matrix gk = gram(Partition({n - k, k}), n, 2);
    for (int i = k; i <= n - k; ++i) {
      for (int j = k; j <= n - k; ++j) {
        const Scalar expected =
            i == j ? Scalar(mpq_class(mpz_class(mpz_class(1) << k) * binomial(n - 2 * k, i - k)))
                   : Scalar(0);
        CHECK(gk(i - k, j - k) == expected);
      }
    }
  }
}

TEST_CASE("orthonormalizer") {
  for (const auto& [n, p] : {std::pair{4, 3}, std::pair{5, 2}, std::pair{3, 4}}) {
    for (const auto& lambda : enum_partitions(n, p)) {
      const Matrix g = gram(lambda, n, p);
      const Orthonormalizer o = orthonormalizer(g);
      const Eigen::MatrixXd id = o.r.transpose() * g.to_eigen() * o.r;
      CHECK(max_abs(id - Eigen::MatrixXd::Identity(id.rows(), id.cols())) < 1e-12);
      for (std::size_t r = 0; r < o.lower.rows(); ++r) CHECK(o.lower(r, r) == Scalar(1));
    }
  }
}

TEST_CASE("psi' is an injective homomorphism") {
  std::mt19937 rng(23);
  for (const auto& [n, p] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const FullBlockDiagonalization bd(n, p, 2);
    // Injectivity: the images of the basis span the full dimension.
    const auto profiles = enum_profiles(n, p);
    std::size_t total = 0;
    for (std::size_t k = 0; k < bd.shapes().size(); ++k) total += bd.table(k).size() * bd.table(k).size();
    Matrix stacked(profiles.size(), total);
    for (std::size_t col = 0; col < profiles.size(); ++col) {
      std::size_t row = 0;
      for (std::size_t k = 0; k < bd.shapes().size(); ++k) {
        const Matrix b = bd.basis_image(k, profiles[col]);
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c) stacked(col, row++) = b(r, c);
      }
    }
    CHECK(rank(stacked) == profiles.size());
    CHECK(total == profiles.size());

    // Each block is G times a representation matrix, so products pick up
    // a G^{-1} in the middle.
    for (int trial = 0; trial < 4; ++trial) {
      const AlgebraElement a = random_element(rng, n, p);
      const AlgebraElement b = random_element(rng, n, p);
      const auto pa = bd.psi_prime(a), pb = bd.psi_prime(b), pab = bd.psi_prime(multiply(a, b));
      for (std::size_t k = 0; k < pa.blocks.size(); ++k) {
        const Matrix ginv = inverse(bd.gram(k));
        CHECK(pab.blocks[k] == pa.blocks[k] * ginv * pb.blocks[k]);
      }
    }
  }
}

TEST_CASE("psi is a *-homomorphism") {
  std::mt19937 rng(29);
  for (const auto& [n, p] : {std::pair{4, 2}, std::pair{3, 3}}) {
    const FullBlockDiagonalization bd(n, p);
    for (int trial = 0; trial < 5; ++trial) {
      const AlgebraElement a = random_element(rng, n, p);
      const AlgebraElement b = random_element(rng, n, p);
      const auto pa = bd.psi(a), pb = bd.psi(b), pab = bd.psi(multiply(a, b));
      const auto pstar = bd.psi(a.adjoint());
      for (std::size_t k = 0; k < pa.blocks.size(); ++k) {
        CHECK(max_abs(pab.blocks[k] - pa.blocks[k] * pb.blocks[k]) < 1e-9);
        CHECK(max_abs(pstar.blocks[k] - pa.blocks[k].transpose()) < 1e-9);
      }
    }
    const auto pid = bd.psi(AlgebraElement::identity(n, p));
    for (const auto& blk : pid.blocks)
      CHECK(max_abs(blk - Eigen::MatrixXd::Identity(blk.rows(), blk.cols())) < 1e-12);
  }
}

TEST_CASE("psi' preserves positive semidefiniteness") {
  std::mt19937 rng(31);
  const int n = 3, p = 2;
  const FullBlockDiagonalization bd(n, p);
  for (int trial = 0; trial < 10; ++trial) {
    // X X^T is PSD for any X in the algebra.
    const AlgebraElement x = random_element(rng, n, p);
    const AlgebraElement psd = multiply(x, x.adjoint());
    const Eigen::MatrixXd dense = to_double(to_dense(psd));
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense).eigenvalues().minCoeff() > -1e-9);
    for (const auto& blk : bd.psi_prime(psd).blocks) {
      const Eigen::MatrixXd m = blk.to_eigen();
      CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().minCoeff() > -1e-9);
    }
  }
  CHECK_THROWS(bd.psi_prime(AlgebraElement::identity(4, 2)));
  CHECK_THROWS(inner_product_table(Partition({1, 1, 1}), 3, 2));
}
