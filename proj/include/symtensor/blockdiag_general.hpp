#pragma once

#include <Eigen/Dense>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symtensor/blockdiag_full.hpp"
#include "symtensor/combinatorics.hpp"
#include "symtensor/exact_matrix.hpp"
#include "symtensor/poly.hpp"

namespace symtensor {

/// A matrix *-algebra B in M_m given by a basis R_1..R_s, together with a
/// *-isomorphism phi onto M_{p_1} + ... + M_{p_t}.
struct BaseAlgebra {
  int m = 0;
  std::vector<Matrix> basis;
  std::vector<int> block_sizes;
  /// phi[j][i] = phi_j(R_i): block j applied to basis element i.
  std::vector<std::vector<Matrix>> phi;

  int s() const { return static_cast<int>(basis.size()); }
  int t() const { return static_cast<int>(block_sizes.size()); }
};

bool operator==(const BaseAlgebra& a, const BaseAlgebra& b);

struct ValidationFailure {
  /// One of "shape", "independence", "closure", "homomorphism",
  /// "star", "dimension".
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::optional<ValidationFailure> failure;
  bool ok() const { return !failure; }
};

/// Checks the premises exactly and reports the first violation.
ValidationReport validate_base_algebra(const BaseAlgebra& b);

/// Coordinates of an m x m matrix in the basis R_1..R_s; nothing when
/// outside the span.
std::optional<std::vector<Scalar>> base_coordinates(const BaseAlgebra& b, const Matrix& x);

/// Element of (B^{(x)n})^{S_n} in the basis R_nu = sum over words x of
/// weight nu of R_{x_1} (x) ... (x) R_{x_n}.
class GeneralElement {
 public:
  GeneralElement(int n, int s) : n_(n), s_(s) {}

  int n() const { return n_; }
  int s() const { return s_; }
  const std::map<std::vector<int>, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(const std::vector<int>& nu) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * R_nu; throws unless nu has length s, entries >= 0, sum n.
  void add_term(const std::vector<int>& nu, const Scalar& c);

  GeneralElement& operator+=(const GeneralElement& o);
  friend bool operator==(const GeneralElement& a, const GeneralElement& b) {
    return a.n_ == b.n_ && a.s_ == b.s_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int n_;
  int s_;
  std::map<std::vector<int>, Scalar> coeffs_;
};

/// Index of the basis element (x) A_{D_i} in the sector mu.
struct SectorProfile {
  std::vector<int> mu;
  std::vector<Profile> d;

  std::string to_string() const;
  friend auto operator<=>(const SectorProfile&, const SectorProfile&) = default;
};

/// Every SectorProfile for block sizes p_1..p_t and total n; sectors in
/// decreasing lex order, profiles in product order.
std::vector<SectorProfile> enum_sector_profiles(int n, const std::vector<int>& block_sizes);

/// Label of one output block: sector mu and a shape lambda_i |- mu_i with
/// at most p_i parts per factor.
struct SectorBlockLabel {
  std::vector<int> mu;
  std::vector<Partition> shapes;

  std::string to_string() const;
};

struct GeneralExactImage {
  std::vector<SectorBlockLabel> labels;
  std::vector<Matrix> blocks;
};

struct GeneralNumericImage {
  std::vector<SectorBlockLabel> labels;
  std::vector<Eigen::MatrixXd> blocks;
};

/// The map A -> (+)_mu (+)_{lambda} (x)_i M_{m_{lambda_i}} for a fixed base
/// algebra and n. Construction validates B and expands the y polynomials
/// once per sector profile.
class GeneralBlockDiagonalization {
 public:
  GeneralBlockDiagonalization(BaseAlgebra b, int n, int threads = 1);

  const BaseAlgebra& base() const { return base_; }
  int n() const { return n_; }
  const std::vector<SectorProfile>& sector_profiles() const { return profiles_; }
  const std::vector<SectorBlockLabel>& labels() const { return labels_; }

  /// y_D = sum_nu y_nu [x^nu] prod_j prod_{k,l} (sum_i x_i phi_j(R_i)_{k,l})^{(D_j)_{k,l}},
  /// zero entries omitted.
  std::map<SectorProfile, Scalar> y_coefficients(const GeneralElement& a) const;

  /// Kronecker products of the per-factor exact images.
  GeneralExactImage psi_prime(const GeneralElement& a) const;
  /// Same with each factor orthonormalized.
  GeneralNumericImage psi(const GeneralElement& a) const;

 private:
  struct LabelData {
    std::size_t sector;                 // index into sectors_
    std::vector<std::size_t> shape_idx;  // per factor, into that factor's shapes
    Eigen::MatrixXd r;                   // Kronecker product of orthonormalizers
  };

  const FullBlockDiagonalization& factor(int mu_i, int p_i) const;

  BaseAlgebra base_;
  int n_;
  std::vector<std::vector<int>> sectors_;
  std::vector<SectorProfile> profiles_;
  std::vector<Poly> expansions_;
  std::vector<SectorBlockLabel> labels_;
  std::vector<LabelData> label_data_;
  std::map<std::pair<int, int>, std::unique_ptr<FullBlockDiagonalization>> factors_;
};

std::map<SectorProfile, Scalar> y_coefficients(const GeneralElement& a, const BaseAlgebra& b);
GeneralExactImage compose_blockdiag(const GeneralElement& a, const BaseAlgebra& b);
GeneralNumericImage compose_blockdiag_orthonormal(const GeneralElement& a, const BaseAlgebra& b);

/// M_p with the matrix units E_{k,l} in row-major order and phi = identity.
BaseAlgebra full_matrix_base(int p);

/// Dense oracles on the m^n x m^n tensor power. Words are read with the
/// first tensor factor most significant. Throw std::length_error when m^n
/// exceeds the cap.
Matrix general_basis_dense(const std::vector<int>& nu, const BaseAlgebra& b,
                           std::size_t cap = 1024);
Matrix general_to_dense(const GeneralElement& a, const BaseAlgebra& b, std::size_t cap = 1024);
/// Coordinates of a dense matrix in the R_nu basis; nothing when it is not
/// in the symmetrized algebra.
std::optional<GeneralElement> general_from_dense(const Matrix& x, const BaseAlgebra& b, int n,
                                                 std::size_t cap = 1024);

}  // namespace symtensor
