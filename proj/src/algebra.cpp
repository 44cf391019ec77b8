#include "symtensor/algebra.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace symtensor {

Scalar AlgebraElement::coeff(const Profile& d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void AlgebraElement::add_term(const Profile& d, const Scalar& c) {
  if (d.p() != p_ || d.total() != n_) {
    throw std::invalid_argument("AlgebraElement: profile " + d.to_string() + " not in P(" +
                                std::to_string(n_) + "," + std::to_string(p_) + ")");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

AlgebraElement AlgebraElement::basis(const Profile& d) {
  AlgebraElement a(d.total(), d.p());
  a.add_term(d, 1);
  return a;
}

AlgebraElement AlgebraElement::identity(int n, int p) {
  AlgebraElement a(n, p);
  for (const auto& mu : enum_compositions(n, p)) a.add_term(Profile::diagonal(mu), 1);
  return a;
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (n_ != o.n_ || p_ != o.p_) {
    throw std::invalid_argument("AlgebraElement: mismatched (n, p)");
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.coeffs_) add_term(d, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.coeffs_) add_term(d, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [d, x] : coeffs_) x *= c;
  return *this;
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement t(n_, p_);
  for (const auto& [d, c] : coeffs_) t.add_term(d.transpose(), c.conj());
  return t;
}

namespace {

// Nonnegative r x c tables with the given row and column sums, row-major.
std::vector<std::vector<int>> contingency_tables(const std::vector<int>& row_sums,
                                                 const std::vector<int>& col_sums) {
  const int rows = static_cast<int>(row_sums.size());
  const int cols = static_cast<int>(col_sums.size());
  std::vector<std::vector<int>> out;
  if (std::accumulate(row_sums.begin(), row_sums.end(), 0) !=
      std::accumulate(col_sums.begin(), col_sums.end(), 0)) {
    return out;
  }
  std::vector<int> table(static_cast<std::size_t>(rows) * cols, 0);
  std::vector<int> col_left = col_sums;
  std::function<void(int, int, int)> rec = [&](int r, int c, int row_left) {
    if (r == rows) {
      out.push_back(table);
      return;
    }
    if (c == cols - 1) {
      if (row_left > col_left[c]) return;
      table[r * cols + c] = row_left;
      col_left[c] -= row_left;
      rec(r + 1, 0, r + 1 < rows ? row_sums[r + 1] : 0);
      col_left[c] += row_left;
      return;
    }
    for (int v = std::min(row_left, col_left[c]); v >= 0; --v) {
      table[r * cols + c] = v;
      col_left[c] -= v;
      rec(r, c + 1, row_left - v);
      col_left[c] += v;
    }
  };
  rec(0, 0, rows > 0 ? row_sums[0] : 0);
  return out;
}

using Expansion = std::vector<std::pair<Profile, mpz_class>>;

Expansion compute_basis_product(const Profile& l, const Profile& m) {
  const int p = l.p();
  // Slice s of the count tensor: B(r, s, t) for r, t in [p], with row sums
  // L(r, s) and column sums M(s, t).
  std::vector<std::vector<std::vector<int>>> slices(p);
  for (int s = 1; s <= p; ++s) {
    std::vector<int> rows(p), cols(p);
    for (int k = 1; k <= p; ++k) {
      rows[k - 1] = l(k, s);
      cols[k - 1] = m(s, k);
    }
    slices[s - 1] = contingency_tables(rows, cols);
    if (slices[s - 1].empty()) return {};
  }
  std::map<Profile, mpz_class> acc;
  std::vector<std::size_t> choice(p, 0);
  while (true) {
    Profile n(p);
    mpz_class denom = 1;
    for (int s = 0; s < p; ++s) {
      const auto& t = slices[s][choice[s]];
      for (int r = 1; r <= p; ++r) {
        for (int c = 1; c <= p; ++c) {
          const int v = t[(r - 1) * p + (c - 1)];
          n(r, c) += v;
          denom *= factorial(v);
        }
      }
    }
    mpz_class num = 1;
    for (int v : n.data()) num *= factorial(v);
    acc[n] += num / denom;

    int s = 0;
    while (s < p && ++choice[s] == slices[s].size()) choice[s++] = 0;
    if (s == p) break;
  }
  return Expansion(acc.begin(), acc.end());
}

struct ProductCache {
  std::shared_mutex mutex;
  std::map<std::pair<Profile, Profile>, std::unique_ptr<const Expansion>> table;
};

ProductCache& product_cache() {
  static ProductCache cache;
  return cache;
}

}  // namespace

const std::vector<std::pair<Profile, mpz_class>>& basis_product(const Profile& l,
                                                                const Profile& m) {
  if (l.p() != m.p() || l.total() != m.total()) {
    throw std::invalid_argument("basis_product: profiles from different P(n, p)");
  }
  auto& cache = product_cache();
  const auto key = std::make_pair(l, m);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return *it->second;
  }
  auto computed = std::make_unique<const Expansion>(compute_basis_product(l, m));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.table.try_emplace(key, std::move(computed));
  return *it->second;
}

mpz_class structure_constant(const Profile& l, const Profile& m, const Profile& n) {
  if (n.p() != l.p() || n.total() != l.total()) {
    throw std::invalid_argument("structure_constant: profiles from different P(n, p)");
  }
  for (const auto& [profile, c] : basis_product(l, m)) {
    if (profile == n) return c;
  }
  return 0;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n() || a.p() != b.p()) {
    throw std::invalid_argument("multiply: mismatched (n, p)");
  }
  std::map<Profile, Scalar> acc;
  for (const auto& [l, x] : a.coeffs()) {
    for (const auto& [m, y] : b.coeffs()) {
      const Scalar xy = x * y;
      for (const auto& [n, c] : basis_product(l, m)) acc[n] += xy * Scalar(mpq_class(c));
    }
  }
  AlgebraElement r(a.n(), a.p());
  for (const auto& [d, c] : acc) r.add_term(d, c);
  return r;
}

AlgebraElement elementary(int i, int j, int n, int p) {
  if (i < 1 || i > p || j < 1 || j > p) throw std::out_of_range("elementary: symbol outside [p]");
  if (i == j) throw std::invalid_argument("elementary: requires i != j");
  if (n < 1) throw std::invalid_argument("elementary: requires n >= 1");
  AlgebraElement a(n, p);
  for (const auto& mu : enum_compositions(n - 1, p)) {
    Profile d = Profile::diagonal(mu);
    d(i, j) += 1;
    a.add_term(d, 1);
  }
  return a;
}

AlgebraElement weight_idempotent(const std::vector<int>& mu) {
  for (int x : mu) {
    if (x < 0) throw std::invalid_argument("weight_idempotent: negative weight");
  }
  if (mu.empty()) throw std::invalid_argument("weight_idempotent: empty weight");
  return AlgebraElement::basis(Profile::diagonal(mu));
}

LowerTriangularDecomposition decompose_lower_triangular(const Profile& d) {
  if (!d.is_lower_triangular()) {
    throw std::invalid_argument("decompose_lower_triangular: " + d.to_string() +
                                " is not lower triangular");
  }
  LowerTriangularDecomposition out{{}, d.col_sums(), 1};
  for (int j = 1; j < d.p(); ++j) {
    for (int i = j + 1; i <= d.p(); ++i) {
      if (d(i, j) == 0) continue;
      out.word.push_back({i, j, d(i, j)});
      out.factor *= factorial(d(i, j));
    }
  }
  return out;
}

AlgebraElement apply_word(const std::vector<ElementaryPower>& word,
                          const std::vector<int>& weight) {
  AlgebraElement acc = weight_idempotent(weight);
  const int n = acc.n();
  const int p = acc.p();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const AlgebraElement op = elementary(it->i, it->j, n, p);
    for (int k = 0; k < it->power; ++k) acc = multiply(op, acc);
  }
  return acc;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t checked_rows(int n, int p, std::size_t cap) {
  std::size_t rows = 1;
  for (int k = 0; k < n; ++k) {
    rows *= static_cast<std::size_t>(p);
    if (rows > cap) {
      throw std::length_error("oracle: p^n = " + std::to_string(p) + "^" + std::to_string(n) +
                              " exceeds the cap of " + std::to_string(cap) + " rows");
    }
  }
  return rows;
}

}  // namespace

std::vector<int> word_of(std::size_t index, int n, int p) {
  std::vector<int> w(n);
  for (int k = n - 1; k >= 0; --k) {
    w[k] = static_cast<int>(index % static_cast<std::size_t>(p)) + 1;
    index /= static_cast<std::size_t>(p);
  }
  return w;
}

std::size_t index_of(const std::vector<int>& word, int p) {
  std::size_t idx = 0;
  for (int s : word) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(s - 1);
  return idx;
}

Profile word_pair_profile(const std::vector<int>& a, const std::vector<int>& b, int p) {
  Profile d(p);
  for (std::size_t k = 0; k < a.size(); ++k) ++d(a[k], b[k]);
  return d;
}

IntMatrix brute_force_AD(const Profile& d, std::size_t cap) {
  const int n = d.total();
  const int p = d.p();
  const std::size_t rows = checked_rows(n, p, cap);
  IntMatrix m = IntMatrix::Zero(rows, rows);
  for (std::size_t a = 0; a < rows; ++a) {
    const auto wa = word_of(a, n, p);
    for (std::size_t b = 0; b < rows; ++b) {
      if (word_pair_profile(wa, word_of(b, n, p), p) == d) m(a, b) = 1;
    }
  }
  return m;
}

IntVector brute_force_et(const Tableau& t, int p, std::size_t cap) {
  const Partition& shape = t.shape();
  if (shape.length() > p) throw std::invalid_argument("brute_force_et: shape has more than p rows");
  const int n = shape.size();
  const std::size_t rows = checked_rows(n, p, cap);
  IntVector e = IntVector::Zero(rows);

  // Distinct row rearrangements t' of t.
  std::vector<std::vector<int>> row_contents(shape.length());
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape[r]; ++c) row_contents[r].push_back(t.at(r, c));
    std::sort(row_contents[r].begin(), row_contents[r].end());
  }
  const Partition cols = dual_partition(shape);
  std::vector<int> filling(n);

  std::vector<std::vector<int>> col_perm(cols.length());
  std::function<void(int, int)> over_column_group = [&](int c, int sign) {
    if (c == cols.length()) {
      std::vector<int> word(n);
      for (int col = 0; col < cols.length(); ++col) {
        for (int r = 0; r < cols[col]; ++r) {
          word[t.row_start(r) + col] = filling[t.row_start(col_perm[col][r]) + col];
        }
      }
      e(static_cast<Eigen::Index>(index_of(word, p))) += sign;
      return;
    }
    auto& perm = col_perm[c];
    perm.resize(cols[c]);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b] ? 1 : 0;
      }
      over_column_group(c + 1, inversions % 2 ? -sign : sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };

  std::function<void(int)> over_rows = [&](int r) {
    if (r == shape.length()) {
      over_column_group(0, 1);
      return;
    }
    auto row = row_contents[r];
    do {
      std::copy(row.begin(), row.end(), filling.begin() + t.row_start(r));
      over_rows(r + 1);
    } while (std::next_permutation(row.begin(), row.end()));
  };
  over_rows(0);
  return e;
}

IntMatrix to_dense(const AlgebraElement& a, std::size_t cap) {
  const std::size_t rows = checked_rows(a.n(), a.p(), cap);
  IntMatrix m = IntMatrix::Zero(rows, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto wr = word_of(r, a.n(), a.p());
    for (std::size_t c = 0; c < rows; ++c) {
      const Scalar x = a.coeff(word_pair_profile(wr, word_of(c, a.n(), a.p()), a.p()));
      if (x.is_zero()) continue;
      if (!x.is_rational() || x.rational_part().get_den() != 1 ||
          !x.rational_part().get_num().fits_slong_p()) {
        throw std::invalid_argument("to_dense: coefficients must be machine integers");
      }
      m(r, c) = x.rational_part().get_num().get_si();
    }
  }
  return m;
}

std::optional<AlgebraElement> from_dense(const IntMatrix& m, int n, int p) {
  std::map<Profile, long long> seen;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const auto wr = word_of(static_cast<std::size_t>(r), n, p);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Profile d = word_pair_profile(wr, word_of(static_cast<std::size_t>(c), n, p), p);
      auto [it, inserted] = seen.try_emplace(d, m(r, c));
      if (!inserted && it->second != m(r, c)) return std::nullopt;
    }
  }
  AlgebraElement a(n, p);
  for (const auto& [d, v] : seen) a.add_term(d, Scalar(static_cast<long>(v)));
  return a;
}

}  // namespace symtensor
