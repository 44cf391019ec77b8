#pragma once

#include <Eigen/Dense>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "symtensor/algebra.hpp"
#include "symtensor/combinatorics.hpp"
#include "symtensor/exact_matrix.hpp"

namespace symtensor {

/// For one shape lambda: the semistandard basis e_t and, for every profile
/// D with a nonzero contribution, the m x m matrix with entry (s, t) equal
/// to <A_D e_s, e_t>. Profiles absent from `entries` contribute zero.
struct InnerProductTable {
  Partition shape;
  int n = 0;
  int p = 0;
  std::vector<Tableau> basis;
  std::map<Profile, Matrix> entries;

  std::size_t size() const { return basis.size(); }
};

/// Evaluates the generating polynomial sum_D x^D <A_D e_s, e_t> for every
/// pair of semistandard tableaux by applying the lowering operators of t
/// and the raising operators of s to P_lambda, then reads off the
/// coefficients.
InnerProductTable inner_product_table(const Partition& lambda, int n, int p);

/// Memoized inner_product_table keyed by (p, n, lambda); thread safe.
std::shared_ptr<const InnerProductTable> cached_inner_product_table(const Partition& lambda,
                                                                   int n, int p);

/// Gram matrix G[s, t] = <e_s, e_t>, summed from the diagonal profiles.
Matrix gram(const InnerProductTable& table);
Matrix gram(const Partition& lambda, int n, int p);

/// Exact G^{-1} = L diag(D) L^T and the floating R = L diag(D)^{1/2}, so
/// that R^T G R = I and the columns of (e_t) R are orthonormal.
struct Orthonormalizer {
  Matrix lower;
  std::vector<Scalar> diagonal;
  Eigen::MatrixXd r;
};
Orthonormalizer orthonormalizer(const Matrix& g);

/// One matrix per shape lambda of n with at most p parts, in
/// enum_partitions order.
struct ExactBlockImage {
  std::vector<Partition> shapes;
  std::vector<Matrix> blocks;
};
struct NumericBlockImage {
  std::vector<Partition> shapes;
  std::vector<Eigen::MatrixXd> blocks;
};

/// Source of inner-product tables, e.g. a disk cache.
using TableProvider =
    std::function<std::shared_ptr<const InnerProductTable>(const Partition&, int n, int p)>;

/// Block diagonalization of the symmetrized tensor algebra of M_p.
///
/// Blocks are representation matrices: entry (r, c) of the block of A is
/// <A e_c, e_r>, the transpose of the inner-product table layout, so that
/// psi(AB) = psi(A) psi(B).
class FullBlockDiagonalization {
 public:
  /// Tables come from `provider` when given, else from the in-memory cache.
  FullBlockDiagonalization(int n, int p, int threads = 1, TableProvider provider = {});

  int n() const { return n_; }
  int p() const { return p_; }
  const std::vector<Partition>& shapes() const { return shapes_; }
  const InnerProductTable& table(std::size_t k) const { return *tables_[k]; }
  const Matrix& gram(std::size_t k) const { return grams_[k]; }
  /// Computed on first use.
  const Orthonormalizer& orthonormalizer(std::size_t k) const;

  /// Exact, PSD preserving: block = (<A e_c, e_r>)_{r,c}.
  ExactBlockImage psi_prime(const AlgebraElement& a) const;
  /// Orthonormalized *-isomorphism: R^T psi'(A) R per block.
  NumericBlockImage psi(const AlgebraElement& a) const;
  /// psi'(A_D) for one block k.
  Matrix basis_image(std::size_t k, const Profile& d) const;

 private:
  int n_;
  int p_;
  std::vector<Partition> shapes_;
  std::vector<std::shared_ptr<const InnerProductTable>> tables_;
  std::vector<Matrix> grams_;
  mutable std::vector<std::unique_ptr<Orthonormalizer>> orthonormalizers_;
  mutable std::mutex orthonormalizer_mutex_;
};

ExactBlockImage psi_prime(const AlgebraElement& a);
NumericBlockImage psi(const AlgebraElement& a);

}  // namespace symtensor
