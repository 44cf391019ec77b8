#include "symtensor/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "symtensor/algebra.hpp"
#include "symtensor/blockdiag_full.hpp"

namespace symtensor {

namespace {

constexpr std::size_t kMaxMismatches = 5;

void record(CheckResult& check, bool ok, const std::string& what) {
  ++check.compared;
  if (ok) return;
  check.passed = false;
  if (check.mismatches.size() < kMaxMismatches) check.mismatches.push_back(what);
}

AlgebraElement random_element(std::mt19937& rng, int n, int p) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  AlgebraElement a(n, p);
  for (const auto& d : enum_profiles(n, p)) a.add_term(d, coeff(rng));
  return a;
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerifyReport::to_string() const {
  std::ostringstream os;
  os << "verify p=" << p << " n=" << n << "\n";
  for (const auto& c : checks) {
    os << (c.passed ? "  ok    " : "  FAIL  ") << c.name << " (" << c.compared << " comparisons)\n";
    for (const auto& m : c.mismatches) os << "        " << m << "\n";
  }
  os << (passed() ? "all checks passed\n" : "verification failed\n");
  return os.str();
}

VerifyReport run_verification(int p, int n, std::size_t cap, double tol, int threads) {
  if (p < 1 || n < 0) throw std::invalid_argument("verify: need p >= 1 and n >= 0");
  std::size_t words = 1;
  for (int k = 0; k < n; ++k) {
    words *= static_cast<std::size_t>(p);
    if (words > cap) throw std::length_error("verify: p^n exceeds the oracle cap");
  }

  VerifyReport report{n, p, {}};
  const auto profiles = enum_profiles(n, p);
  const FullBlockDiagonalization bd(n, p, threads);

  {
    CheckResult c{"dimension: sum of squared SSYT counts"};
    mpz_class total = 0;
    for (std::size_t k = 0; k < bd.shapes().size(); ++k) {
      const auto m = bd.table(k).size();
      total += mpz_class(m * m);
    }
    record(c, total == binomial(n + p * p - 1, p * p - 1) && total == profiles.size(),
           "sum is " + total.get_str());
    report.checks.push_back(std::move(c));
  }

  std::vector<IntMatrix> dense;
  dense.reserve(profiles.size());
  for (const auto& d : profiles) dense.push_back(brute_force_AD(d, cap));

  {
    CheckResult c{"inner-product tables against the dense oracle"};
    for (std::size_t k = 0; k < bd.shapes().size(); ++k) {
      const auto& table = bd.table(k);
      std::vector<IntVector> es;
      for (const auto& t : table.basis) es.push_back(brute_force_et(t, p, cap));
      for (std::size_t di = 0; di < profiles.size(); ++di) {
        const auto it = table.entries.find(profiles[di]);
        for (std::size_t s = 0; s < table.size(); ++s) {
          const IntVector image = dense[di] * es[s];
          for (std::size_t t = 0; t < table.size(); ++t) {
            const Scalar expected(static_cast<long>(es[t].dot(image)));
            const Scalar got = it == table.entries.end() ? Scalar(0) : it->second(s, t);
            record(c, got == expected,
                   "shape " + table.shape.to_string() + " D=" + profiles[di].to_string() + " (" +
                       std::to_string(s) + "," + std::to_string(t) + "): got " + got.to_string() +
                       ", oracle " + expected.to_string());
          }
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"structure constants against dense products"};
    for (std::size_t li = 0; li < profiles.size(); ++li) {
      for (std::size_t mi = 0; mi < profiles.size(); ++mi) {
        const auto product = from_dense(dense[li] * dense[mi], n, p);
        const AlgebraElement exact = multiply(AlgebraElement::basis(profiles[li]), AlgebraElement::basis(profiles[mi]));
        record(c, product && *product == exact,
               "A_L A_M differs for L=" + profiles[li].to_string() + " M=" + profiles[mi].to_string());
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"elementary operators acting on both sides"};
    for (int i = 1; i <= p; ++i) {
      for (int j = 1; j <= p; ++j) {
        if (i == j || n == 0) continue;
        const AlgebraElement op = elementary(i, j, n, p);
        const IntMatrix dense_op = to_dense(op, cap);
        for (std::size_t di = 0; di < profiles.size(); ++di) {
          const Profile& d = profiles[di];
          AlgebraElement left(n, p), right(n, p);
          for (int k = 1; k <= p; ++k) {
            if (d(j, k) > 0) {
              Profile e = d;
              e(j, k) -= 1;
              e(i, k) += 1;
              left.add_term(e, d(i, k) + 1);
            }
            if (d(k, i) > 0) {
              Profile e = d;
              e(k, i) -= 1;
              e(k, j) += 1;
              right.add_term(e, d(k, j) + 1);
            }
          }
          const std::string tag = "A_{" + std::to_string(i) + "->" + std::to_string(j) + "}, D=" + d.to_string();
          record(c, from_dense(dense_op * dense[di], n, p) == left, "left action " + tag);
          record(c, from_dense(dense[di] * dense_op, n, p) == right, "right action " + tag);
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"lower triangular factorization"};
    for (std::size_t di = 0; di < profiles.size(); ++di) {
      const Profile& d = profiles[di];
      if (!d.is_lower_triangular()) continue;
      const auto dec = decompose_lower_triangular(d);
      IntMatrix acc = brute_force_AD(Profile::diagonal(dec.weight), cap);
      for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) {
        const IntMatrix op = to_dense(elementary(it->i, it->j, n, p), cap);
        for (int k = 0; k < it->power; ++k) acc = op * acc;
      }
      const IntMatrix expected = dense[di] * dec.factor.get_si();
      record(c, acc == expected, "D=" + d.to_string());
    }
    report.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"psi is a *-homomorphism on random elements"};
    std::mt19937 rng(20240229u + static_cast<unsigned>(97 * p + n));
    for (int trial = 0; trial < 10; ++trial) {
      const AlgebraElement a = random_element(rng, n, p);
      const AlgebraElement b = random_element(rng, n, p);
      const auto pa = bd.psi(a), pb = bd.psi(b), pab = bd.psi(multiply(a, b)), pt = bd.psi(a.adjoint());
      for (std::size_t k = 0; k < pa.blocks.size(); ++k) {
        const double scale = std::max(1.0, max_abs(pa.blocks[k]) * max_abs(pb.blocks[k]));
        const double err = max_abs(pab.blocks[k] - pa.blocks[k] * pb.blocks[k]) / scale;
        record(c, err <= tol, "trial " + std::to_string(trial) + " block " + std::to_string(k) +
                                  ": relative error " + std::to_string(err));
        const double star = max_abs(pt.blocks[k] - Eigen::MatrixXd(pa.blocks[k].transpose()));
        record(c, star <= tol * std::max(1.0, max_abs(pa.blocks[k])),
               "trial " + std::to_string(trial) + " block " + std::to_string(k) + ": adjoint error " +
                   std::to_string(star));
      }
    }
    const auto id = bd.psi(AlgebraElement::identity(n, p));
    for (const auto& blk : id.blocks) {
      record(c, max_abs(blk - Eigen::MatrixXd::Identity(blk.rows(), blk.cols())) <= tol,
             "identity does not map to identity blocks");
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace symtensor
