#pragma once

#include <map>
#include <vector>

#include "symtensor/combinatorics.hpp"
#include "symtensor/scalar.hpp"

namespace symtensor {

/// Exponent vector; for the matrix variables x_{i,j} it is the row-major
/// flattening of a p x p exponent matrix, so it coincides with Profile::data().
using Monomial = std::vector<int>;

/// Sparse polynomial with exact coefficients in a fixed number of
/// variables. No zero coefficient is ever stored.
class Poly {
 public:
  explicit Poly(int num_vars) : num_vars_(num_vars) {}

  static Poly constant(int num_vars, const Scalar& c);
  static Poly variable(int num_vars, int index);
  static Poly term(Monomial m, const Scalar& c);

  int num_vars() const { return num_vars_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;
  /// Max total degree over terms; -1 for the zero polynomial.
  int degree() const;

  /// Adds c * x^m.
  void add_term(const Monomial& m, const Scalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  Poly operator-() const;

  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Poly f, const Scalar& c) { return f *= c; }
  friend bool operator==(const Poly& f, const Poly& g) {
    return f.num_vars_ == g.num_vars_ && f.terms_ == g.terms_;
  }

  Poly pow(int k) const;

 private:
  void check_compatible(const Poly& o) const;

  int num_vars_;
  std::map<Monomial, Scalar> terms_;
};

// Exact ring operations; throw std::invalid_argument on mismatched
// variable counts.
Poly poly_add(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_scale(const Poly& f, const Scalar& c);

/// x_{i,j} in the ring of p x p matrix variables (1-based i, j).
Poly matrix_variable(int p, int i, int j);

/// Q_k = k! det of the leading k x k block of (x_{i,j}); Q_0 = 1.
Poly q_poly(int k, int p);

/// P_lambda = prod over columns of Q_{column length}.
Poly p_lambda(const Partition& lambda, int p);

/// d_{i->j} f = sum_s x_{i,s} df/dx_{j,s}.
Poly apply_d(const Poly& f, int i, int j);
/// d*_{i->j} f = sum_s x_{s,j} df/dx_{s,i}.
Poly apply_d_star(const Poly& f, int i, int j);

/// Coefficient of x^D.
Scalar coefficient(const Poly& f, const Profile& d);

}  // namespace symtensor
