#include "symtensor/scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace symtensor {

namespace {

bool is_square_free(long d) {
  for (long f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

}  // namespace

Scalar Scalar::quadratic(mpq_class a, mpq_class b, long d) {
  if (d == 0) {
    if (sgn(b) != 0) {
      throw std::domain_error("Scalar: nonzero sqrt coefficient with radicand 0");
    }
  } else if (d < 2 || !is_square_free(d)) {
    throw std::domain_error("Scalar: radicand " + std::to_string(d) +
                            " is not a square-free integer >= 2");
  }
  Scalar s;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.a_.canonicalize();
  s.b_.canonicalize();
  s.d_ = d;
  return s;
}

Scalar Scalar::sqrt_of(long n) {
  if (n < 0) throw std::domain_error("Scalar::sqrt_of: negative argument");
  if (n == 0) return Scalar();
  long outside = 1;
  long inside = n;
  for (long f = 2; f * f <= inside; ++f) {
    while (inside % (f * f) == 0) {
      inside /= f * f;
      outside *= f;
    }
  }
  if (inside == 1) return Scalar(outside);
  return quadratic(0, outside, inside);
}

Scalar Scalar::parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: \"" + text + "\"");
  }
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("zero denominator: \"" + text + "\"");
  }
  q.canonicalize();
  return Scalar(q);
}

long Scalar::common_radicand(const Scalar& o) const {
  if (d_ == o.d_) return d_;
  if (d_ == 0) return o.d_;
  if (o.d_ == 0) return d_;
  throw std::domain_error("Scalar: mixing Q(sqrt(" + std::to_string(d_) +
                          ")) with Q(sqrt(" + std::to_string(o.d_) + "))");
}

void Scalar::normalize() {
  a_.canonicalize();
  b_.canonicalize();
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = b_ * b_ * d_;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

double Scalar::to_double() const {
  if (sgn(b_) == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (sgn(b_) == 0) {
    Scalar r(mpq_class(1) / a_);
    r.d_ = d_;
    return r;
  }
  // (a - b sqrt d) / (a^2 - b^2 d); the norm is nonzero since d is not a square.
  const mpq_class norm = a_ * a_ - b_ * b_ * d_;
  return quadratic(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const long d = common_radicand(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
  } else {
    mpq_class a = a_ * o.a_ + b_ * o.b_ * d;
    mpq_class b = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  d_ = d;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  common_radicand(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  // Equal parts; a nonzero sqrt part must also agree on the radicand.
  return sgn(x.b_) == 0 || x.d_ == y.d_;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return rational_to_string(a_);
  std::string out;
  if (sgn(a_) != 0) out = rational_to_string(a_) + (sgn(b_) > 0 ? " + " : " - ");
  else if (sgn(b_) < 0) out = "-";
  out += rational_to_string(abs(b_)) + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.to_string();
}

mpz_class binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

mpz_class factorial(long k) {
  if (k < 0) throw std::domain_error("factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace symtensor
