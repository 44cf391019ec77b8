#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace symtensor {

/// Exact element a + b*sqrt(d) of the real field Q(sqrt(d)).
///
/// The radicand d is a square-free integer >= 2, or 0 for plain rationals
/// (in which case b is always 0). A rational scalar combines with any
/// ring; combining two scalars with different nonzero radicands throws
/// std::domain_error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value) : a_(std::move(value)) {  // NOLINT
    a_.canonicalize();
  }

  /// a + b*sqrt(d). d must be square-free and >= 2 (or 0 with b == 0).
  static Scalar quadratic(mpq_class a, mpq_class b, long d);

  /// sqrt(n) for a nonnegative integer n, reduced to f*sqrt(d') with d'
  /// square-free; rational when n is a perfect square.
  static Scalar sqrt_of(long n);

  /// Parses "num/den" or an integer literal.
  static Scalar parse_rational(const std::string& text);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt_coeff() const { return b_; }
  long radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Exact sign of a + b*sqrt(d): -1, 0 or 1.
  int sign() const;
  double to_double() const;

  /// Complex conjugate. Every ring here is real, so this is the identity.
  const Scalar& conj() const { return *this; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// "a" for rationals, "a + b*sqrt(d)" otherwise; a and b as num/den.
  std::string to_string() const;

 private:
  // Radicand shared by *this and o; throws on conflicting rings.
  long common_radicand(const Scalar& o) const;
  void normalize();

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Formats a rational as "num/den", or "num" when the denominator is 1.
std::string rational_to_string(const mpq_class& q);

/// binomial(a, b), zero when b < 0 or b > a (and for a < 0).
mpz_class binomial(long a, long b);
mpz_class factorial(long k);

/// n! / (k_1! ... k_r!) for nonnegative k summing to n.
template <typename Range>
mpz_class multinomial(const Range& ks) {
  long total = 0;
  mpz_class denom = 1;
  for (long k : ks) {
    total += k;
    denom *= factorial(k);
  }
  return factorial(total) / denom;
}

}  // namespace symtensor
