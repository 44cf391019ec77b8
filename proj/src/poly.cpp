#include "symtensor/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symtensor {

Poly Poly::constant(int num_vars, const Scalar& c) {
  Poly f(num_vars);
  f.add_term(Monomial(num_vars, 0), c);
  return f;
}

Poly Poly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw std::out_of_range("Poly::variable: bad index");
  Monomial m(num_vars, 0);
  m[index] = 1;
  return term(std::move(m), 1);
}

Poly Poly::term(Monomial m, const Scalar& c) {
  Poly f(static_cast<int>(m.size()));
  f.add_term(m, c);
  return f;
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0));
  return deg;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (static_cast<int>(m.size()) != num_vars_) {
    throw std::invalid_argument("Poly: monomial has " + std::to_string(m.size()) +
                                " exponents, ring has " + std::to_string(num_vars_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (num_vars_ != o.num_vars_) {
    throw std::invalid_argument("Poly: mismatched variable counts " + std::to_string(num_vars_) +
                                " and " + std::to_string(o.num_vars_));
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, x] : r.terms_) x = -x;
  return r;
}

Poly operator*(const Poly& f, const Poly& g) {
  f.check_compatible(g);
  Poly r(f.num_vars_);
  Monomial m(f.num_vars_);
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) {
      for (int v = 0; v < f.num_vars_; ++v) m[v] = mf[v] + mg[v];
      r.add_term(m, cf * cg);
    }
  }
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly result = constant(num_vars_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly poly_add(const Poly& f, const Poly& g) { return f + g; }
Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }
Poly poly_scale(const Poly& f, const Scalar& c) { return f * c; }

namespace {

int side_of(const Poly& f) {
  const int p = static_cast<int>(std::lround(std::sqrt(static_cast<double>(f.num_vars()))));
  if (p * p != f.num_vars()) {
    throw std::invalid_argument("polynomial is not over p x p matrix variables");
  }
  return p;
}

void check_symbol(int i, int p) {
  if (i < 1 || i > p) throw std::out_of_range("symbol " + std::to_string(i) + " outside [p]");
}

}  // namespace

Poly matrix_variable(int p, int i, int j) {
  check_symbol(i, p);
  check_symbol(j, p);
  return Poly::variable(p * p, (i - 1) * p + (j - 1));
}

Poly q_poly(int k, int p) {
  if (k < 0 || k > p) throw std::invalid_argument("q_poly: k must lie in 0..p");
  Poly q(p * p);
  const Scalar scale(mpq_class(factorial(k)));
  // k! * sum_sigma sgn(sigma) prod_i x_{sigma(i), i}
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    int inversions = 0;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) inversions += sigma[a] > sigma[b] ? 1 : 0;
    }
    Monomial m(p * p, 0);
    for (int i = 0; i < k; ++i) ++m[sigma[i] * p + i];
    q.add_term(m, inversions % 2 ? -scale : scale);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return q;
}

Poly p_lambda(const Partition& lambda, int p) {
  if (lambda.length() > p) {
    throw std::invalid_argument("p_lambda: " + lambda.to_string() + " has more than " +
                                std::to_string(p) + " parts");
  }
  Poly result = Poly::constant(p * p, 1);
  for (int k = 1; k <= p; ++k) {
    const int exponent = lambda[k - 1] - lambda[k];
    if (exponent > 0) result = result * q_poly(k, p).pow(exponent);
  }
  return result;
}

Poly apply_d(const Poly& f, int i, int j) {
  const int p = side_of(f);
  check_symbol(i, p);
  check_symbol(j, p);
  Poly r(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    for (int s = 0; s < p; ++s) {
      const int from = (j - 1) * p + s;
      const int e = m[from];
      if (e == 0) continue;
      Monomial out = m;
      --out[from];
      ++out[(i - 1) * p + s];
      r.add_term(out, c * Scalar(e));
    }
  }
  return r;
}

Poly apply_d_star(const Poly& f, int i, int j) {
  const int p = side_of(f);
  check_symbol(i, p);
  check_symbol(j, p);
  Poly r(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    for (int s = 0; s < p; ++s) {
      const int from = s * p + (i - 1);
      const int e = m[from];
      if (e == 0) continue;
      Monomial out = m;
      --out[from];
      ++out[s * p + (j - 1)];
      r.add_term(out, c * Scalar(e));
    }
  }
  return r;
}

Scalar coefficient(const Poly& f, const Profile& d) {
  if (static_cast<int>(d.data().size()) != f.num_vars()) {
    throw std::invalid_argument("coefficient: profile size does not match the ring");
  }
  return f.coefficient(d.data());
}

}  // namespace symtensor
