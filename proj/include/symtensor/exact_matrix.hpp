#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

#include "symtensor/scalar.hpp"

namespace symtensor {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_symmetric() const;

  Matrix transpose() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  /// this += c * o
  void add_scaled(const Matrix& o, const Scalar& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Eigen::MatrixXd to_eigen() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);

/// Exact rank by Gaussian elimination over the scalar field.
std::size_t rank(Matrix m);

/// Solves a x = b exactly; nothing when the system is inconsistent. Free
/// variables are set to zero.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

/// Exact inverse; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// m = L * diag(D) * L^T with L unit lower triangular, no pivoting.
/// Throws std::domain_error on a nonpositive pivot (m not positive definite).
struct LdltFactors {
  Matrix lower;
  std::vector<Scalar> diagonal;
};
LdltFactors ldlt(const Matrix& m);

/// Largest absolute entry.
double max_abs(const Eigen::MatrixXd& m);

}  // namespace symtensor
