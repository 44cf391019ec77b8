#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace symtensor {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t compared = 0;
  /// First few mismatches, one per line.
  std::vector<std::string> mismatches;
};

struct VerifyReport {
  int n = 0;
  int p = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
  std::string to_string() const;
};

/// Compares the exact pipeline against the dense word-indexed oracle for
/// one (n, p): dimension count, inner-product tables, structure
/// constants, the elementary-operator actions, the lower triangular
/// factorization, and psi on seeded random elements within `tol`.
/// Throws std::length_error if p^n exceeds `cap`.
VerifyReport run_verification(int p, int n, std::size_t cap, double tol, int threads = 1);

}  // namespace symtensor
