#include "symtensor/blockdiag_full.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "symtensor/parallel.hpp"
#include "symtensor/poly.hpp"

namespace symtensor {

namespace {

void check_shape(const Partition& lambda, int n, int p) {
  if (lambda.size() != n) {
    throw std::invalid_argument("shape " + lambda.to_string() + " is not a partition of " +
                                std::to_string(n));
  }
  if (lambda.length() > p) {
    throw std::invalid_argument("shape " + lambda.to_string() + " has more than " +
                                std::to_string(p) + " parts");
  }
}

// Applies the factors of a lowering word right to left.
Poly apply_lowering(Poly f, const std::vector<ElementaryPower>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    for (int k = 0; k < it->power; ++k) f = apply_d(f, it->i, it->j);
  }
  return f;
}

// Right multiplication by the transposed word: d*_{j->i} for each A_{i->j}.
Poly apply_raising(Poly f, const std::vector<ElementaryPower>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    for (int k = 0; k < it->power; ++k) f = apply_d_star(f, it->j, it->i);
  }
  return f;
}

}  // namespace

InnerProductTable inner_product_table(const Partition& lambda, int n, int p) {
  check_shape(lambda, n, p);
  InnerProductTable table{lambda, n, p, enum_ssyt(lambda, p), {}};
  const std::size_t m = table.basis.size();
  const Poly base = p_lambda(lambda, p);

  std::vector<LowerTriangularDecomposition> words;
  words.reserve(m);
  for (const auto& t : table.basis) words.push_back(decompose_lower_triangular(tableau_profile(t, p)));

  for (std::size_t s = 0; s < m; ++s) {
    const Poly raised = apply_raising(base, words[s].word);
    for (std::size_t t = 0; t < m; ++t) {
      const Poly q = apply_lowering(raised, words[t].word);
      const Scalar norm(mpq_class(1, 1) / mpq_class(words[s].factor * words[t].factor));
      for (const auto& [mono, c] : q.terms()) {
        Profile d(p, mono);
        auto [it, inserted] = table.entries.try_emplace(d, m, m);
        it->second(s, t) = c * norm;
      }
    }
  }
  return table;
}

std::shared_ptr<const InnerProductTable> cached_inner_product_table(const Partition& lambda,
                                                                   int n, int p) {
  using Key = std::tuple<int, int, Partition>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const InnerProductTable>> cache;
  const Key key{p, n, lambda};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto computed = std::make_shared<const InnerProductTable>(inner_product_table(lambda, n, p));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(computed)).first->second;
}

Matrix gram(const InnerProductTable& table) {
  Matrix g(table.size(), table.size());
  for (const auto& [d, mat] : table.entries) {
    bool diagonal = true;
    for (int i = 1; i <= d.p() && diagonal; ++i) {
      for (int j = 1; j <= d.p(); ++j) {
        if (i != j && d(i, j) != 0) {
          diagonal = false;
          break;
        }
      }
    }
    if (diagonal) g += mat;
  }
  return g;
}

Matrix gram(const Partition& lambda, int n, int p) {
  return gram(*cached_inner_product_table(lambda, n, p));
}

Orthonormalizer orthonormalizer(const Matrix& g) {
  if (!g.is_symmetric()) throw std::domain_error("orthonormalizer: Gram matrix not symmetric");
  auto factors = ldlt(inverse(g));
  Eigen::MatrixXd r = factors.lower.to_eigen();
  for (std::size_t c = 0; c < factors.diagonal.size(); ++c) {
    r.col(static_cast<Eigen::Index>(c)) *= std::sqrt(factors.diagonal[c].to_double());
  }
  return {std::move(factors.lower), std::move(factors.diagonal), std::move(r)};
}

FullBlockDiagonalization::FullBlockDiagonalization(int n, int p, int threads,
                                                   TableProvider provider)
    : n_(n), p_(p), shapes_(enum_partitions(n, p)) {
  if (n < 0 || p < 1) throw std::invalid_argument("FullBlockDiagonalization: need n >= 0, p >= 1");
  tables_.resize(shapes_.size());
  parallel_for(shapes_.size(), threads, [&](std::size_t k) {
    tables_[k] = provider ? provider(shapes_[k], n_, p_)
                          : cached_inner_product_table(shapes_[k], n_, p_);
  });
  for (const auto& t : tables_) grams_.push_back(symtensor::gram(*t));
  orthonormalizers_.resize(shapes_.size());
}

const Orthonormalizer& FullBlockDiagonalization::orthonormalizer(std::size_t k) const {
  std::lock_guard lock(orthonormalizer_mutex_);
  if (!orthonormalizers_[k]) {
    orthonormalizers_[k] = std::make_unique<Orthonormalizer>(symtensor::orthonormalizer(grams_[k]));
  }
  return *orthonormalizers_[k];
}

Matrix FullBlockDiagonalization::basis_image(std::size_t k, const Profile& d) const {
  const auto& t = *tables_[k];
  auto it = t.entries.find(d);
  if (it == t.entries.end()) return Matrix(t.size(), t.size());
  return it->second.transpose();
}

ExactBlockImage FullBlockDiagonalization::psi_prime(const AlgebraElement& a) const {
  if (a.n() != n_ || a.p() != p_) throw std::invalid_argument("psi_prime: mismatched (n, p)");
  ExactBlockImage image{shapes_, {}};
  for (const auto& t : tables_) {
    Matrix acc(t->size(), t->size());
    for (const auto& [d, c] : a.coeffs()) {
      auto it = t->entries.find(d);
      if (it != t->entries.end()) acc.add_scaled(it->second, c);
    }
    image.blocks.push_back(acc.transpose());
  }
  return image;
}

NumericBlockImage FullBlockDiagonalization::psi(const AlgebraElement& a) const {
  const ExactBlockImage exact = psi_prime(a);
  NumericBlockImage image{shapes_, {}};
  for (std::size_t k = 0; k < shapes_.size(); ++k) {
    const Eigen::MatrixXd& r = orthonormalizer(k).r;
    image.blocks.push_back(r.transpose() * exact.blocks[k].to_eigen() * r);
  }
  return image;
}

ExactBlockImage psi_prime(const AlgebraElement& a) {
  return FullBlockDiagonalization(a.n(), a.p()).psi_prime(a);
}

NumericBlockImage psi(const AlgebraElement& a) {
  return FullBlockDiagonalization(a.n(), a.p()).psi(a);
}

}  // namespace symtensor
