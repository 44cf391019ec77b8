#include <doctest.h>

#include <random>

#include "symtensor/algebra.hpp"
#include "symtensor/blockdiag_general.hpp"
#include "symtensor/terwilliger.hpp"

using namespace symtensor;

namespace {

BaseAlgebra diagonal_pair() {
  BaseAlgebra b;
  b.m = 2;
  b.basis.assign(2, Matrix(2, 2));
  b.basis[0](0, 0) = 1;
  b.basis[1](1, 1) = 1;
  b.block_sizes = {1, 1};
  b.phi.assign(2, std::vector<Matrix>(2, Matrix(1, 1)));
  b.phi[0][0](0, 0) = 1;
  b.phi[1][1](0, 0) = 1;
  return b;
}

GeneralElement random_general(std::mt19937& rng, int n, int s, double density = 0.6) {
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  std::uniform_int_distribution<int> coeff(-3, 3);
  GeneralElement a(n, s);
  for (const auto& nu : enum_compositions(n, s)) {
    if (keep(rng) < density) a.add_term(nu, coeff(rng));
  }
  return a;
}

}  // namespace

TEST_CASE("validate_base_algebra") {
  CHECK(validate_base_algebra(full_matrix_base(2)).ok());
  CHECK(validate_base_algebra(full_matrix_base(3)).ok());
  CHECK(validate_base_algebra(diagonal_pair()).ok());
  for (int q = 3; q <= 6; ++q) CHECK(validate_base_algebra(nonbinary_base(q)).ok());
  for (int t = 1; t <= 3; ++t) CHECK(validate_base_algebra(binary_tfold_base(t)).ok());

  SUBCASE("dependent basis") {
    BaseAlgebra b = full_matrix_base(2);
    b.basis[3] = b.basis[0];
    const auto r = validate_base_algebra(b);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->check == "independence");
  }
  SUBCASE("not closed") {
    BaseAlgebra b = diagonal_pair();
    b.basis[1] = Matrix(2, 2);
    b.basis[1](0, 1) = 1;
    b.basis[1](1, 0) = 1;
    b.basis[1](1, 1) = 1;
    const auto r = validate_base_algebra(b);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->check == "closure");
  }
  SUBCASE("phi not multiplicative") {
    BaseAlgebra b = full_matrix_base(2);
    b.phi[0][0](0, 0) = 2;
    const auto r = validate_base_algebra(b);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->check == "homomorphism");
  }
  SUBCASE("phi not a *-map") {
    // Conjugation by a non-orthogonal matrix keeps phi multiplicative.
    BaseAlgebra b = full_matrix_base(2);
    Matrix s(2, 2), s_inv(2, 2);
    s(0, 0) = 1; s(0, 1) = 1; s(1, 1) = 1;
    s_inv(0, 0) = 1; s_inv(0, 1) = -1; s_inv(1, 1) = 1;
    for (auto& m : b.phi[0]) m = s * m * s_inv;
    const auto r = validate_base_algebra(b);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->check == "star");
  }
  SUBCASE("dimension mismatch") {
    BaseAlgebra b = diagonal_pair();
    b.block_sizes = {2};
    b.phi = {{b.basis[0], b.basis[1]}};
    const auto r = validate_base_algebra(b);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->check == "dimension");
  }
  SUBCASE("shape") {
    BaseAlgebra b = full_matrix_base(2);
    b.phi[0].pop_back();
    CHECK(validate_base_algebra(b).failure->check == "shape");
    CHECK_THROWS(GeneralBlockDiagonalization(b, 2));
  }
}

TEST_CASE("dimension bookkeeping") {
  const std::vector<std::vector<int>> configs = {{1, 1}, {2}, {2, 1}, {1, 1, 1}, {2, 2}};
  for (const auto& sizes : configs) {
    int s = 0;
    for (int p : sizes) s += p * p;
    for (int n = 0; n <= 6; ++n) {
      mpz_class total = 0;
      for (const auto& mu : enum_compositions(n, static_cast<int>(sizes.size()))) {
        mpz_class prod = 1;
        for (std::size_t i = 0; i < sizes.size(); ++i)
          prod *= binomial(mu[i] + sizes[i] * sizes[i] - 1, sizes[i] * sizes[i] - 1);
        total += prod;
      }
      CHECK(total == binomial(n + s - 1, s - 1));
      CHECK(enum_sector_profiles(n, sizes).size() == total);
    }
  }
}

TEST_CASE("commutative base C + C") {
  const int n = 4;
  const GeneralBlockDiagonalization bd(diagonal_pair(), n);
  CHECK(bd.labels().size() == n + 1);
  for (const auto& nu : enum_compositions(n, 2)) {
    GeneralElement a(n, 2);
    a.add_term(nu, 1);
    const auto y = bd.y_coefficients(a);
    REQUIRE(y.size() == 1);
    CHECK(y.begin()->first.mu == nu);
    CHECK(y.begin()->second == Scalar(1));
    const auto image = bd.psi_prime(a);
    for (std::size_t k = 0; k < image.blocks.size(); ++k) {
      REQUIRE(image.blocks[k].rows() == 1);
      CHECK(image.blocks[k](0, 0) == Scalar(image.labels[k].mu == nu ? 1 : 0));
    }
  }
}

TEST_CASE("M_p with identity phi reproduces the full pipeline") {
  for (const auto& [n, p] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2},
                             std::pair{2, 3}}) {
    const BaseAlgebra b = full_matrix_base(p);
    const GeneralBlockDiagonalization general(b, n);
    const FullBlockDiagonalization full(n, p);
    REQUIRE(general.labels().size() == full.shapes().size());
    for (const auto& d : enum_profiles(n, p)) {
      GeneralElement a(n, p * p);
      a.add_term(d.data(), 1);
      if (n <= 3 && p == 2) {
        CHECK(general_basis_dense(d.data(), b) == [&] {
          const IntMatrix m = brute_force_AD(d);
          Matrix out(m.rows(), m.cols());
          for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = static_cast<long>(m(r, c));
          return out;
        }());
      }
      const auto g = general.psi_prime(a);
      const auto f = full.psi_prime(AlgebraElement::basis(d));
      for (std::size_t k = 0; k < f.blocks.size(); ++k) {
        CHECK(g.labels[k].shapes[0] == f.shapes[k]);
        CHECK(g.blocks[k] == f.blocks[k]);
      }
    }
  }
}

TEST_CASE("y_coefficients is injective") {
  for (int n = 1; n <= 3; ++n) {
    const GeneralBlockDiagonalization bd(nonbinary_base(3), n);
    const auto nus = enum_compositions(n, 5);
    const auto& profiles = bd.sector_profiles();
    CHECK(profiles.size() == nus.size());
    Matrix m(nus.size(), profiles.size());
    for (std::size_t r = 0; r < nus.size(); ++r) {
      GeneralElement a(n, 5);
      a.add_term(nus[r], 1);
      const auto y = bd.y_coefficients(a);
      for (std::size_t c = 0; c < profiles.size(); ++c) {
        auto it = y.find(profiles[c]);
        if (it != y.end()) m(r, c) = it->second;
      }
    }
    CHECK(rank(m) == nus.size());
  }
}

TEST_CASE("dense oracle for the symmetrized tensor power") {
  const BaseAlgebra b = nonbinary_base(3);
  std::mt19937 rng(41);
  const GeneralElement a = random_general(rng, 2, 5);
  const Matrix dense = general_to_dense(a, b);
  CHECK(dense.rows() == 9);
  CHECK(general_from_dense(dense, b, 2) == a);
  Matrix off(9, 9);
  off(0, 1) = 1;
  CHECK_FALSE(general_from_dense(off, b, 2));
  CHECK_THROWS_AS(general_basis_dense({4, 0, 0, 0, 0}, b, 27), std::length_error);
}

TEST_CASE("nonbinary pipeline is a *-isomorphism") {
  const BaseAlgebra b = nonbinary_base(3);
  std::mt19937 rng(43);
  for (int n = 1; n <= 3; ++n) {
    const GeneralBlockDiagonalization bd(b, n);
    for (int trial = 0; trial < (n == 3 ? 2 : 4); ++trial) {
      const GeneralElement x = random_general(rng, n, 5);
      const GeneralElement y = random_general(rng, n, 5);
      const Matrix dx = general_to_dense(x, b), dy = general_to_dense(y, b);
      const auto xy = general_from_dense(dx * dy, b, n);
      const auto xt = general_from_dense(dx.transpose(), b, n);
      REQUIRE(xy);
      REQUIRE(xt);
      const auto px = bd.psi(x), py = bd.psi(y), pxy = bd.psi(*xy), pxt = bd.psi(*xt);
      for (std::size_t k = 0; k < px.blocks.size(); ++k) {
        CHECK(max_abs(pxy.blocks[k] - px.blocks[k] * py.blocks[k]) < 1e-8);
        CHECK(max_abs(pxt.blocks[k] - Eigen::MatrixXd(px.blocks[k].transpose())) < 1e-8);
      }
      // Hermitian elements map to symmetric blocks, exactly.
      GeneralElement h = x;
      h += *xt;
      for (const auto& blk : bd.psi_prime(h).blocks) CHECK(blk.is_symmetric());
    }
    GeneralElement id(n, 5);
    const auto ident = general_from_dense(Matrix::identity(general_to_dense(id, b).rows()), b, n);
    REQUIRE(ident);
    for (const auto& blk : bd.psi(*ident).blocks)
      CHECK(max_abs(blk - Eigen::MatrixXd::Identity(blk.rows(), blk.cols())) < 1e-10);
  }
}

TEST_CASE("t-fold binary sectors") {
  const GeneralBlockDiagonalization bd(binary_tfold_base(2), 2);
  std::vector<std::vector<int>> sectors;
  for (const auto& label : bd.labels()) {
    if (sectors.empty() || sectors.back() != label.mu) sectors.push_back(label.mu);
  }
  CHECK(sectors == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  const GeneralBlockDiagonalization one(binary_tfold_base(1), 5);
  for (const auto& label : one.labels()) CHECK(label.shapes.size() == 2);
  CHECK(one.labels().size() == 6);
}
