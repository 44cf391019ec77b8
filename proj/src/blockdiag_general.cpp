#include "symtensor/blockdiag_general.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "symtensor/parallel.hpp"

namespace symtensor {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Matrix column_stack(const BaseAlgebra& b) {
  const std::size_t mm = static_cast<std::size_t>(b.m) * b.m;
  Matrix out(mm, b.basis.size());
  for (std::size_t i = 0; i < b.basis.size(); ++i) {
    for (std::size_t r = 0; r < mm; ++r) out(r, i) = b.basis[i](r / b.m, r % b.m);
  }
  return out;
}

Matrix combine(const std::vector<Matrix>& images, const std::vector<Scalar>& c) {
  Matrix out(images.front().rows(), images.front().cols());
  for (std::size_t l = 0; l < c.size(); ++l) {
    if (!c[l].is_zero()) out.add_scaled(images[l], c[l]);
  }
  return out;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::size_t checked_power(int m, int n, std::size_t cap) {
  std::size_t size = 1;
  for (int k = 0; k < n; ++k) {
    size *= static_cast<std::size_t>(m);
    if (size > cap) throw std::length_error("dense oracle: m^n exceeds cap");
  }
  return size;
}

void check_nu(const std::vector<int>& nu, int n, int s) {
  if (static_cast<int>(nu.size()) != s) throw std::invalid_argument("nu has wrong length");
  int total = 0;
  for (int v : nu) {
    if (v < 0) throw std::invalid_argument("nu has a negative entry");
    total += v;
  }
  if (total != n) throw std::invalid_argument("nu " + join(nu) + " does not sum to n");
}

}  // namespace

bool operator==(const BaseAlgebra& a, const BaseAlgebra& b) {
  return a.m == b.m && a.basis == b.basis && a.block_sizes == b.block_sizes && a.phi == b.phi;
}

std::optional<std::vector<Scalar>> base_coordinates(const BaseAlgebra& b, const Matrix& x) {
  std::vector<Scalar> rhs;
  rhs.reserve(static_cast<std::size_t>(b.m) * b.m);
  for (int r = 0; r < b.m; ++r)
    for (int c = 0; c < b.m; ++c) rhs.push_back(x(r, c));
  return solve(column_stack(b), rhs);
}

ValidationReport validate_base_algebra(const BaseAlgebra& b) {
  auto fail = [](std::string check, std::string detail) {
    return ValidationReport{ValidationFailure{std::move(check), std::move(detail)}};
  };
  const std::size_t s = b.basis.size();
  if (b.m < 1 || s == 0) return fail("shape", "empty basis or m < 1");
  for (std::size_t i = 0; i < s; ++i) {
    if (b.basis[i].rows() != static_cast<std::size_t>(b.m) ||
        b.basis[i].cols() != static_cast<std::size_t>(b.m))
      return fail("shape", "basis[" + std::to_string(i) + "] is not m x m");
  }
  if (b.phi.size() != b.block_sizes.size())
    return fail("shape", "phi has " + std::to_string(b.phi.size()) + " blocks, expected " +
                             std::to_string(b.block_sizes.size()));
  for (std::size_t j = 0; j < b.phi.size(); ++j) {
    const int pj = b.block_sizes[j];
    if (pj < 1) return fail("shape", "block_sizes[" + std::to_string(j) + "] < 1");
    if (b.phi[j].size() != s)
      return fail("shape", "phi[" + std::to_string(j) + "] does not have one image per basis element");
    for (std::size_t i = 0; i < s; ++i) {
      if (b.phi[j][i].rows() != static_cast<std::size_t>(pj) ||
          b.phi[j][i].cols() != static_cast<std::size_t>(pj))
        return fail("shape", "phi[" + std::to_string(j) + "][" + std::to_string(i) +
                                 "] is not p_j x p_j");
    }
  }

  if (rank(column_stack(b)) != s) return fail("independence", "basis matrices are linearly dependent");

  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < s; ++k) {
      const auto c = base_coordinates(b, b.basis[i] * b.basis[k]);
      const std::string where = "R_" + std::to_string(i + 1) + " R_" + std::to_string(k + 1);
      if (!c) return fail("closure", where + " is outside the span");
      for (std::size_t j = 0; j < b.phi.size(); ++j) {
        if (combine(b.phi[j], *c) != b.phi[j][i] * b.phi[j][k])
          return fail("homomorphism", "block " + std::to_string(j + 1) + " differs on " + where);
      }
    }
  }

  for (std::size_t i = 0; i < s; ++i) {
    const auto c = base_coordinates(b, b.basis[i].transpose());
    const std::string where = "R_" + std::to_string(i + 1) + "^T";
    if (!c) return fail("star", where + " is outside the span");
    for (std::size_t j = 0; j < b.phi.size(); ++j) {
      if (combine(b.phi[j], *c) != b.phi[j][i].transpose())
        return fail("star", "block " + std::to_string(j + 1) + " differs on " + where);
    }
  }

  std::size_t dim = 0;
  for (int pj : b.block_sizes) dim += static_cast<std::size_t>(pj) * pj;
  if (dim != s)
    return fail("dimension", "sum of p_i^2 is " + std::to_string(dim) + " but s is " + std::to_string(s));
  return {};
}

Scalar GeneralElement::coeff(const std::vector<int>& nu) const {
  auto it = coeffs_.find(nu);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void GeneralElement::add_term(const std::vector<int>& nu, const Scalar& c) {
  check_nu(nu, n_, s_);
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(nu, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

GeneralElement& GeneralElement::operator+=(const GeneralElement& o) {
  if (o.n_ != n_ || o.s_ != s_) throw std::invalid_argument("GeneralElement: mismatched (n, s)");
  for (const auto& [nu, c] : o.coeffs_) add_term(nu, c);
  return *this;
}

std::string SectorProfile::to_string() const {
  std::string out = join(mu) + ":";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + d[i].to_string();
  return out;
}

std::string SectorBlockLabel::to_string() const {
  std::string out = join(mu) + ":";
  for (std::size_t i = 0; i < shapes.size(); ++i) out += (i ? "," : "") + shapes[i].to_string();
  return out;
}

std::vector<SectorProfile> enum_sector_profiles(int n, const std::vector<int>& block_sizes) {
  std::vector<SectorProfile> out;
  const int t = static_cast<int>(block_sizes.size());
  for (const auto& mu : enum_compositions(n, t)) {
    std::vector<std::vector<Profile>> per(t);
    for (int i = 0; i < t; ++i) per[i] = enum_profiles(mu[i], block_sizes[i]);
    std::vector<std::size_t> idx(t, 0);
    while (true) {
      SectorProfile sp{mu, {}};
      for (int i = 0; i < t; ++i) sp.d.push_back(per[i][idx[i]]);
      out.push_back(std::move(sp));
      int pos = t - 1;
      while (pos >= 0 && ++idx[pos] == per[pos].size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

GeneralBlockDiagonalization::GeneralBlockDiagonalization(BaseAlgebra b, int n, int threads)
    : base_(std::move(b)), n_(n) {
  if (n < 0) throw std::invalid_argument("GeneralBlockDiagonalization: n < 0");
  const auto report = validate_base_algebra(base_);
  if (!report.ok()) {
    throw std::invalid_argument("invalid base algebra (" + report.failure->check +
                                "): " + report.failure->detail);
  }
  const int s = base_.s(), t = base_.t();
  sectors_ = enum_compositions(n, t);
  profiles_ = enum_sector_profiles(n, base_.block_sizes);

  // Linear forms L_{j,k,l} = sum_i phi_j(R_i)_{k,l} x_i.
  std::vector<std::vector<Poly>> forms(t);
  for (int j = 0; j < t; ++j) {
    const int pj = base_.block_sizes[j];
    for (int k = 0; k < pj; ++k) {
      for (int l = 0; l < pj; ++l) {
        Poly form(s);
        for (int i = 0; i < s; ++i) {
          Monomial mono(s, 0);
          mono[i] = 1;
          form.add_term(mono, base_.phi[j][i](k, l));
        }
        forms[j].push_back(std::move(form));
      }
    }
  }
  expansions_.assign(profiles_.size(), Poly(s));
  parallel_for(profiles_.size(), threads, [&](std::size_t idx) {
    Poly f = Poly::constant(s, 1);
    for (int j = 0; j < t; ++j) {
      const auto& data = profiles_[idx].d[j].data();
      for (std::size_t e = 0; e < data.size(); ++e) {
        if (data[e] > 0) f = f * forms[j][e].pow(data[e]);
      }
    }
    expansions_[idx] = std::move(f);
  });

  for (const auto& mu : sectors_) {
    for (int j = 0; j < t; ++j) {
      auto key = std::make_pair(mu[j], base_.block_sizes[j]);
      if (!factors_.count(key)) {
        factors_.emplace(key, std::make_unique<FullBlockDiagonalization>(mu[j], key.second, threads));
      }
    }
  }

  for (std::size_t si = 0; si < sectors_.size(); ++si) {
    const auto& mu = sectors_[si];
    std::vector<std::size_t> counts(t);
    for (int j = 0; j < t; ++j) counts[j] = factor(mu[j], base_.block_sizes[j]).shapes().size();
    std::vector<std::size_t> idx(t, 0);
    while (true) {
      SectorBlockLabel label{mu, {}};
      Eigen::MatrixXd r = Eigen::MatrixXd::Identity(1, 1);
      for (int j = 0; j < t; ++j) {
        const auto& f = factor(mu[j], base_.block_sizes[j]);
        label.shapes.push_back(f.shapes()[idx[j]]);
        r = kron(r, f.orthonormalizer(idx[j]).r);
      }
      labels_.push_back(std::move(label));
      label_data_.push_back({si, idx, std::move(r)});
      int pos = t - 1;
      while (pos >= 0 && ++idx[pos] == counts[pos]) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
}

const FullBlockDiagonalization& GeneralBlockDiagonalization::factor(int mu_i, int p_i) const {
  return *factors_.at({mu_i, p_i});
}

std::map<SectorProfile, Scalar> GeneralBlockDiagonalization::y_coefficients(
    const GeneralElement& a) const {
  if (a.n() != n_ || a.s() != base_.s())
    throw std::invalid_argument("y_coefficients: element does not match (n, s)");
  std::map<SectorProfile, Scalar> out;
  for (std::size_t idx = 0; idx < profiles_.size(); ++idx) {
    Scalar y(0);
    for (const auto& [nu, c] : a.coeffs()) y = y + c * expansions_[idx].coefficient(nu);
    if (!y.is_zero()) out.emplace(profiles_[idx], y);
  }
  return out;
}

GeneralExactImage GeneralBlockDiagonalization::psi_prime(const GeneralElement& a) const {
  const auto y = y_coefficients(a);
  GeneralExactImage image{labels_, {}};
  const int t = base_.t();
  for (const auto& ld : label_data_) {
    const auto& mu = sectors_[ld.sector];
    std::size_t size = 1;
    for (int j = 0; j < t; ++j)
      size *= factor(mu[j], base_.block_sizes[j]).table(ld.shape_idx[j]).size();
    Matrix acc(size, size);
    for (const auto& [sp, c] : y) {
      if (sp.mu != mu) continue;
      Matrix term = Matrix::identity(1);
      for (int j = 0; j < t; ++j) {
        term = kronecker(term, factor(mu[j], base_.block_sizes[j]).basis_image(ld.shape_idx[j], sp.d[j]));
      }
      acc.add_scaled(term, c);
    }
    image.blocks.push_back(std::move(acc));
  }
  return image;
}

GeneralNumericImage GeneralBlockDiagonalization::psi(const GeneralElement& a) const {
  const auto exact = psi_prime(a);
  GeneralNumericImage image{labels_, {}};
  for (std::size_t k = 0; k < exact.blocks.size(); ++k) {
    const auto& r = label_data_[k].r;
    image.blocks.push_back(r.transpose() * exact.blocks[k].to_eigen() * r);
  }
  return image;
}

std::map<SectorProfile, Scalar> y_coefficients(const GeneralElement& a, const BaseAlgebra& b) {
  return GeneralBlockDiagonalization(b, a.n()).y_coefficients(a);
}

GeneralExactImage compose_blockdiag(const GeneralElement& a, const BaseAlgebra& b) {
  return GeneralBlockDiagonalization(b, a.n()).psi_prime(a);
}

GeneralNumericImage compose_blockdiag_orthonormal(const GeneralElement& a, const BaseAlgebra& b) {
  return GeneralBlockDiagonalization(b, a.n()).psi(a);
}

BaseAlgebra full_matrix_base(int p) {
  if (p < 1) throw std::invalid_argument("full_matrix_base: p < 1");
  BaseAlgebra b;
  b.m = p;
  b.block_sizes = {p};
  b.phi.resize(1);
  for (int k = 0; k < p; ++k) {
    for (int l = 0; l < p; ++l) {
      Matrix e(p, p);
      e(k, l) = 1;
      b.basis.push_back(e);
      b.phi[0].push_back(e);
    }
  }
  return b;
}

Matrix general_basis_dense(const std::vector<int>& nu, const BaseAlgebra& b, std::size_t cap) {
  const int n = std::accumulate(nu.begin(), nu.end(), 0);
  check_nu(nu, n, b.s());
  const std::size_t size = checked_power(b.m, n, cap);
  std::vector<int> word;
  for (std::size_t i = 0; i < nu.size(); ++i) word.insert(word.end(), nu[i], static_cast<int>(i));
  Matrix out(size, size);
  do {
    Matrix term = Matrix::identity(1);
    for (int x : word) term = kronecker(term, b.basis[x]);
    out += term;
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Matrix general_to_dense(const GeneralElement& a, const BaseAlgebra& b, std::size_t cap) {
  const std::size_t size = checked_power(b.m, a.n(), cap);
  Matrix out(size, size);
  for (const auto& [nu, c] : a.coeffs()) out.add_scaled(general_basis_dense(nu, b, cap), c);
  return out;
}

std::optional<GeneralElement> general_from_dense(const Matrix& x, const BaseAlgebra& b, int n,
                                                 std::size_t cap) {
  const std::size_t size = checked_power(b.m, n, cap);
  if (x.rows() != size || x.cols() != size) throw std::invalid_argument("general_from_dense: wrong size");
  const auto nus = enum_compositions(n, b.s());
  Matrix system(size * size, nus.size());
  for (std::size_t k = 0; k < nus.size(); ++k) {
    const Matrix r = general_basis_dense(nus[k], b, cap);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) system(i * size + j, k) = r(i, j);
  }
  std::vector<Scalar> rhs;
  rhs.reserve(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) rhs.push_back(x(i, j));
  const auto coords = solve(system, rhs);
  if (!coords) return std::nullopt;
  GeneralElement out(n, b.s());
  for (std::size_t k = 0; k < nus.size(); ++k) out.add_term(nus[k], (*coords)[k]);
  return out;
}

}  // namespace symtensor
