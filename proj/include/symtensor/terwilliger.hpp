#pragma once

#include <map>
#include <vector>

#include "symtensor/blockdiag_full.hpp"
#include "symtensor/blockdiag_general.hpp"

namespace symtensor {

// Binary Terwilliger algebra: the case B = M_2. Basis matrices A^t_{i,j}
// with 0 <= t <= min(i, j) and i + j - t <= n.

struct BinaryIndex {
  int i = 0;
  int j = 0;
  int t = 0;
  friend auto operator<=>(const BinaryIndex&, const BinaryIndex&) = default;
};

/// [[n+t-i-j, i-t], [j-t, t]]; throws on an invalid index.
Profile binary_profile(int i, int j, int t, int n);
/// Inverse of binary_profile for a 2 x 2 profile.
BinaryIndex binary_index(const Profile& d);
/// All valid (i, j, t), ordered by (i, j, t).
std::vector<BinaryIndex> binary_indices(int n);

/// sum_s (-1)^{j-t-s} C(n-2k, i-k) C(n-k-i, s) C(i-k, j-k-s) C(k, j-t-s).
mpz_class binary_beta(int i, int j, int k, int t, int n);
/// sum_u (-1)^{u-t} C(u, t) C(n-2k, u-k) C(n-k-u, i-u) C(n-k-u, j-u).
mpz_class binary_beta_schrijver(int i, int j, int k, int t, int n);

/// Image of one A^t_{i,j}: block k (shape (n-k, k)) is indexed by
/// i', j' = k..n-k and has a single entry. Blocks are representation
/// matrices, so the entry sits at row j - k, column i - k.
///   unnormalized: beta (psi' of the generic pipeline is 2^k beta)
///   normalized:   C(n-2k, i-k)^{-1/2} C(n-2k, j-k)^{-1/2} beta
struct BinaryBlockImage {
  ExactBlockImage unnormalized;
  NumericBlockImage normalized;
};
std::map<BinaryIndex, BinaryBlockImage> binary_blockdiag(int n);
BinaryBlockImage binary_blockdiag(const BinaryIndex& index, int n);

// Nonbinary Terwilliger algebra: B is the 5-dimensional algebra of q x q
// matrices invariant under permutations of the symbols 1..q-1.

/// B_1..B_5 and phi into M_2 + M_1 over Q(sqrt(q-1)); throws for q < 3.
BaseAlgebra nonbinary_base(int q);

struct NonbinaryTerm {
  int w = 0;
  Profile d;  // 2 x 2, the M_1 factor is (w)
  Scalar coeff;
};
/// Closed form for the image of R_nu: one term per sector w with a
/// nonnegative profile and a nonzero coefficient.
std::vector<NonbinaryTerm> nonbinary_psi(const std::vector<int>& nu, int n, int q);

/// S_2-invariant matrices on {0,1}^t (S_2 complements all bits), with
/// phi = (A + B) + (A - B) for the block form [[A, B], [B, A]].
/// Basis: orbit (x, y) for x < 2^{t-1}, all y, ordered by (x, y).
BaseAlgebra binary_tfold_base(int t);

}  // namespace symtensor
