#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symtensor/combinatorics.hpp"
#include "symtensor/scalar.hpp"

namespace symtensor {

/// Element of the algebra of S_n-invariant [p]^n x [p]^n matrices, in the
/// basis {A_D : D in P(n, p)}.
class AlgebraElement {
 public:
  AlgebraElement(int n, int p) : n_(n), p_(p) {}

  static AlgebraElement basis(const Profile& d);
  /// sum over mu of I_mu.
  static AlgebraElement identity(int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  const std::map<Profile, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(const Profile& d) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * A_D; throws if D is not in P(n, p).
  void add_term(const Profile& d, const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  /// Conjugate transpose: coefficient at D moves to D^T.
  AlgebraElement adjoint() const;
  bool is_hermitian() const { return adjoint() == *this; }

 private:
  void check_compatible(const AlgebraElement& o) const;

  int n_;
  int p_;
  std::map<Profile, Scalar> coeffs_;
};

/// Expansion A_L A_M = sum_N c_{L,M}^N A_N as (N, c) pairs with c > 0,
/// in increasing Profile order. Memoized; safe for concurrent callers.
const std::vector<std::pair<Profile, mpz_class>>& basis_product(const Profile& l,
                                                                const Profile& m);

/// c_{L,M}^N by enumerating the p x p x p count tensors with the three
/// prescribed marginals.
mpz_class structure_constant(const Profile& l, const Profile& m, const Profile& n);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// A_{i->j}: the sum of A_D over D that are diagonal except D(i, j) = 1.
AlgebraElement elementary(int i, int j, int n, int p);

/// I_mu = A_{diag(mu)}.
AlgebraElement weight_idempotent(const std::vector<int>& mu);

/// One factor A_{i->j}^power of an operator word.
struct ElementaryPower {
  int i;
  int j;
  int power;
  friend bool operator==(const ElementaryPower&, const ElementaryPower&) = default;
};

/// factor * A_D = (word) I_weight for lower triangular D; the word lists
/// factors left to right (outer j ascending, inner i ascending).
struct LowerTriangularDecomposition {
  std::vector<ElementaryPower> word;
  std::vector<int> weight;
  mpz_class factor;
};

LowerTriangularDecomposition decompose_lower_triangular(const Profile& d);

/// Evaluates (word) I_weight with multiply().
AlgebraElement apply_word(const std::vector<ElementaryPower>& word,
                          const std::vector<int>& weight);

// ---------------------------------------------------------------------------
// Dense oracles. Rows and columns are words of [p]^n in lexicographic order.

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

constexpr std::size_t kDefaultOracleCap = 4096;

/// Word with 1-based symbols for a lexicographic index.
std::vector<int> word_of(std::size_t index, int n, int p);
std::size_t index_of(const std::vector<int>& word, int p);
/// D(a, b).
Profile word_pair_profile(const std::vector<int>& a, const std::vector<int>& b, int p);

/// Dense 0/1 matrix A_D; throws std::length_error when p^n exceeds cap.
IntMatrix brute_force_AD(const Profile& d, std::size_t cap = kDefaultOracleCap);

/// Dense e_t = sum_{sigma in C_lambda} sgn(sigma) sum_{t' ~ t} chi^{sigma t'}.
IntVector brute_force_et(const Tableau& t, int p, std::size_t cap = kDefaultOracleCap);

/// Dense matrix of an element with integer coefficients.
IntMatrix to_dense(const AlgebraElement& a, std::size_t cap = kDefaultOracleCap);

/// Reads an S_n-invariant dense matrix back into the {A_D} basis. Nothing
/// when the matrix is not constant on the profile classes.
std::optional<AlgebraElement> from_dense(const IntMatrix& m, int n, int p);

}  // namespace symtensor
