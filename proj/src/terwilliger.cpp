#include "symtensor/terwilliger.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace symtensor {

namespace {

bool valid_index(int i, int j, int t, int n) {
  return t >= 0 && t <= std::min(i, j) && i + j - t <= n;
}

void check_beta_index(int i, int j, int k, int t, int n) {
  if (k < 0 || 2 * k > n || i < k || i > n - k || j < k || j > n - k || !valid_index(i, j, t, n)) {
    throw std::invalid_argument("beta: invalid index (i,j,k,t,n) = (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + "," +
                                std::to_string(t) + "," + std::to_string(n) + ")");
  }
}

mpz_class sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Profile binary_profile(int i, int j, int t, int n) {
  if (!valid_index(i, j, t, n)) {
    throw std::invalid_argument("binary_profile: invalid (i,j,t) for n = " + std::to_string(n));
  }
  return Profile(2, {n + t - i - j, i - t, j - t, t});
}

BinaryIndex binary_index(const Profile& d) {
  if (d.p() != 2) throw std::invalid_argument("binary_index: profile is not 2 x 2");
  return {d(1, 2) + d(2, 2), d(2, 1) + d(2, 2), d(2, 2)};
}

std::vector<BinaryIndex> binary_indices(int n) {
  std::vector<BinaryIndex> out;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int t = 0; t <= std::min(i, j); ++t)
        if (valid_index(i, j, t, n)) out.push_back({i, j, t});
  return out;
}

mpz_class binary_beta(int i, int j, int k, int t, int n) {
  check_beta_index(i, j, k, t, n);
  mpz_class sum = 0;
  for (int s = 0; s <= j - k; ++s) {
    sum += sign(j - t - s) * binomial(n - k - i, s) * binomial(i - k, j - k - s) *
           binomial(k, j - t - s);
  }
  return binomial(n - 2 * k, i - k) * sum;
}

mpz_class binary_beta_schrijver(int i, int j, int k, int t, int n) {
  check_beta_index(i, j, k, t, n);
  mpz_class sum = 0;
  for (int u = 0; u <= n; ++u) {
    sum += sign(u - t) * binomial(u, t) * binomial(n - 2 * k, u - k) * binomial(n - k - u, i - u) *
           binomial(n - k - u, j - u);
  }
  return sum;
}

BinaryBlockImage binary_blockdiag(const BinaryIndex& index, int n) {
  const auto [i, j, t] = index;
  if (!valid_index(i, j, t, n)) throw std::invalid_argument("binary_blockdiag: invalid index");
  BinaryBlockImage image;
  for (int k = 0; 2 * k <= n; ++k) {
    const Partition shape({n - k, k});
    const std::size_t size = static_cast<std::size_t>(n - 2 * k + 1);
    Matrix exact(size, size);
    Eigen::MatrixXd numeric = Eigen::MatrixXd::Zero(size, size);
    if (k <= std::min(i, j) && std::max(i, j) <= n - k) {
      const mpz_class beta = binary_beta(i, j, k, t, n);
      exact(j - k, i - k) = Scalar(mpq_class(beta));
      numeric(j - k, i - k) = beta.get_d() / std::sqrt(binomial(n - 2 * k, i - k).get_d() *
                                                       binomial(n - 2 * k, j - k).get_d());
    }
    image.unnormalized.shapes.push_back(shape);
    image.unnormalized.blocks.push_back(std::move(exact));
    image.normalized.shapes.push_back(shape);
    image.normalized.blocks.push_back(std::move(numeric));
  }
  return image;
}

std::map<BinaryIndex, BinaryBlockImage> binary_blockdiag(int n) {
  if (n < 0) throw std::invalid_argument("binary_blockdiag: n < 0");
  std::map<BinaryIndex, BinaryBlockImage> out;
  for (const auto& idx : binary_indices(n)) out.emplace(idx, binary_blockdiag(idx, n));
  return out;
}

BaseAlgebra nonbinary_base(int q) {
  if (q < 3) throw std::invalid_argument("nonbinary_base: q must be at least 3");
  BaseAlgebra b;
  b.m = q;
  b.basis.assign(5, Matrix(q, q));
  b.basis[0](0, 0) = 1;
  for (int a = 1; a < q; ++a) {
    b.basis[1](0, a) = 1;
    b.basis[2](a, 0) = 1;
    for (int c = 1; c < q; ++c) b.basis[a == c ? 3 : 4](a, c) = 1;
  }
  const Scalar root = Scalar::sqrt_of(q - 1);
  b.block_sizes = {2, 1};
  b.phi.assign(2, {});
  b.phi[0].assign(5, Matrix(2, 2));
  b.phi[1].assign(5, Matrix(1, 1));
  b.phi[0][0](0, 0) = 1;
  b.phi[0][1](0, 1) = root;
  b.phi[0][2](1, 0) = root;
  b.phi[0][3](1, 1) = 1;
  b.phi[0][4](1, 1) = q - 2;
  b.phi[1][3](0, 0) = 1;
  b.phi[1][4](0, 0) = -1;
  return b;
}

std::vector<NonbinaryTerm> nonbinary_psi(const std::vector<int>& nu, int n, int q) {
  if (q < 3) throw std::invalid_argument("nonbinary_psi: q must be at least 3");
  if (nu.size() != 5) throw std::invalid_argument("nonbinary_psi: nu must have 5 entries");
  int total = 0;
  for (int v : nu) {
    if (v < 0) throw std::invalid_argument("nonbinary_psi: negative entry in nu");
    total += v;
  }
  if (total != n) throw std::invalid_argument("nonbinary_psi: nu does not sum to n");

  Scalar scale(1);
  const Scalar root = Scalar::sqrt_of(q - 1);
  for (int e = 0; e < nu[1] + nu[2]; ++e) scale = scale * root;

  std::vector<NonbinaryTerm> out;
  const int rest = nu[3] + nu[4];
  for (int w = 0; w <= std::min(n, rest); ++w) {
    mpz_class sum = 0;
    for (int g = 0; g <= rest - w; ++g) {
      mpz_class qg;
      mpz_pow_ui(qg.get_mpz_t(), mpz_class(q - 2).get_mpz_t(), static_cast<unsigned long>(g));
      sum += binomial(rest - w, g) * binomial(w, nu[4] - g) * qg * sign(nu[4] - g);
    }
    if (sum == 0) continue;
    out.push_back({w, Profile(2, {nu[0], nu[1], nu[2], rest - w}), scale * Scalar(mpq_class(sum))});
  }
  return out;
}

BaseAlgebra binary_tfold_base(int t) {
  if (t < 1 || t > 10) throw std::invalid_argument("binary_tfold_base: t must be in 1..10");
  const int m = 1 << t, half = m / 2, mask = m - 1;
  BaseAlgebra b;
  b.m = m;
  b.block_sizes = {half, half};
  b.phi.assign(2, {});
  for (int x = 0; x < half; ++x) {
    for (int y = 0; y < m; ++y) {
      Matrix r(m, m);
      r(x, y) = 1;
      r(x ^ mask, y ^ mask) = 1;
      b.basis.push_back(std::move(r));
      // The block form pairs x with its complement, so y in the upper half
      // lands in B at column complement(y).
      Matrix plus(half, half), minus(half, half);
      if (y < half) {
        plus(x, y) = 1;
        minus(x, y) = 1;
      } else {
        plus(x, y ^ mask) = 1;
        minus(x, y ^ mask) = -1;
      }
      b.phi[0].push_back(std::move(plus));
      b.phi[1].push_back(std::move(minus));
    }
  }
  return b;
}

}  // namespace symtensor
