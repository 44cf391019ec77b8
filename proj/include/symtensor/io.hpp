#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "symtensor/blockdiag_full.hpp"
#include "symtensor/blockdiag_general.hpp"

namespace symtensor {

using Json = nlohmann::ordered_json;

/// Bumped whenever the on-disk table layout changes; stale cache files are
/// recomputed.
inline constexpr int kTableFormatVersion = 1;

/// Input that does not match the expected layout. `pointer` is the JSON
/// pointer of the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::runtime_error(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// Scalars: "num/den" strings for rationals, or
// {"rational": "a", "sqrt_coeff": "b", "radicand": d} for a + b sqrt(d).
Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j, const std::string& pointer = "");

// Matrices are row-major arrays of scalars; profiles are p x p integer
// arrays.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& pointer = "");
Json numeric_matrix_to_json(const Eigen::MatrixXd& m);
Json profile_to_json(const Profile& d);
Profile profile_from_json(const Json& j, const std::string& pointer = "");

Json base_algebra_to_json(const BaseAlgebra& b);
BaseAlgebra base_algebra_from_json(const Json& j, const std::string& pointer = "");
BaseAlgebra load_base_algebra(const std::filesystem::path& path);
void save_base_algebra(const BaseAlgebra& b, const std::filesystem::path& path);

Json table_to_json(const InnerProductTable& t);
InnerProductTable table_from_json(const Json& j, const std::string& pointer = "");

/// Per-shape dump of a full block diagonalization: basis tableaux, Gram
/// matrix and psi'(A_D) for every profile with a nonzero block; with
/// `orthonormal`, also R and psi(A_D).
Json full_blockdiag_to_json(const FullBlockDiagonalization& bd, bool orthonormal);
/// Sector labels, y coefficients and nonzero psi' blocks of every R_nu.
Json general_blockdiag_to_json(const GeneralBlockDiagonalization& bd, bool orthonormal);

/// Reads a JSON document; parse errors become SchemaError at "".
Json read_json(const std::filesystem::path& path);
/// Writes text through a temporary file and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

/// On-disk cache of inner-product tables keyed by (p, n, lambda) and the
/// table format version. Safe for concurrent use within one process;
/// concurrent processes at worst recompute the same file.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const Partition& lambda, int n, int p) const;
  /// Cached table, or nothing if absent, stale or unreadable.
  std::optional<InnerProductTable> load(const Partition& lambda, int n, int p) const;
  void store(const InnerProductTable& t) const;
  std::shared_ptr<const InnerProductTable> get(const Partition& lambda, int n, int p) const;
  TableProvider provider() const;

 private:
  std::filesystem::path dir_;
};

/// Cache directory from SYMTENSOR_CACHE_DIR, if set and nonempty.
std::optional<std::filesystem::path> default_cache_dir();

// SDP programs over the invariant algebra. The variable is X in the
// algebra with X PSD; each constraint reads <A_i, X> (relation) b_i and
// the objective is <C, X>, all with the trace inner product.

enum class Relation { kEqual, kLessEqual, kGreaterEqual };

struct SdpConstraint {
  std::vector<std::pair<std::vector<int>, Scalar>> terms;
  Relation relation = Relation::kEqual;
  mpq_class rhs;
};

struct SdpProgram {
  int n = 0;
  /// Full case: p set and terms keyed by row-major profiles. General case:
  /// base set and terms keyed by nu.
  int p = 0;
  std::optional<BaseAlgebra> base;
  bool maximize = true;
  std::vector<std::pair<std::vector<int>, Scalar>> objective;
  std::vector<SdpConstraint> constraints;
};

SdpProgram sdp_program_from_json(const Json& j, const std::filesystem::path& base_dir = {});
SdpProgram load_sdp_program(const std::filesystem::path& path);

/// SDPA sparse text for the reduced program: one SDP block per output
/// block of psi', plus a diagonal block of slacks when there are
/// inequalities. Entries are psi' images symmetrized as (M + M^T) / 2,
/// upper triangle only, 17 significant digits.
std::string export_sdpa(const SdpProgram& program, int threads = 1,
                        const TableCache* cache = nullptr);

}  // namespace symtensor
