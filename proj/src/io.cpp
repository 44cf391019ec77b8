#include "symtensor/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace symtensor {

namespace fs = std::filesystem;

namespace {

std::string at(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string at(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

const Json& require(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(pointer, key), "missing required field");
  return *it;
}

const Json& require_array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array");
  return j;
}

int int_from_json(const Json& j, const std::string& pointer, int min_value = 0) {
  if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer");
  const auto v = j.get<long long>();
  if (v < min_value || v > 1'000'000) throw SchemaError(pointer, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list_from_json(const Json& j, const std::string& pointer) {
  require_array(j, pointer);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_from_json(j[i], at(pointer, i)));
  return out;
}

mpq_class rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) throw SchemaError(pointer, "expected a rational string \"num/den\"");
  try {
    return Scalar::parse_rational(j.get<std::string>()).rational_part();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(pointer, e.what());
  }
}

Json tableau_to_json(const Tableau& t) {
  Json rows = Json::array();
  for (int r = 0; r < t.shape().length(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < t.shape()[r]; ++c) row.push_back(t.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Tableau tableau_from_json(const Json& j, const std::string& pointer) {
  require_array(j, pointer);
  std::vector<int> parts, entries;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto row = int_list_from_json(j[r], at(pointer, r));
    parts.push_back(static_cast<int>(row.size()));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  try {
    return Tableau(Partition(parts), entries);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(pointer, e.what());
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::kEqual: return "=";
    case Relation::kLessEqual: return "<=";
    case Relation::kGreaterEqual: return ">=";
  }
  return "?";
}

}  // namespace

Json scalar_to_json(const Scalar& x) {
  if (x.is_rational()) return rational_to_string(x.rational_part());
  return Json{{"rational", rational_to_string(x.rational_part())},
              {"sqrt_coeff", rational_to_string(x.sqrt_coeff())},
              {"radicand", x.radicand()}};
}

Scalar scalar_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_object()) return Scalar(rational_from_json(j, pointer));
  const mpq_class a = rational_from_json(require(j, "rational", pointer), at(pointer, "rational"));
  const mpq_class b = rational_from_json(require(j, "sqrt_coeff", pointer), at(pointer, "sqrt_coeff"));
  const int d = int_from_json(require(j, "radicand", pointer), at(pointer, "radicand"));
  try {
    return sgn(b) == 0 ? Scalar(a) : Scalar::quadratic(a, b, d);
  } catch (const std::domain_error& e) {
    throw SchemaError(at(pointer, "radicand"), e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& pointer) {
  require_array(j, pointer);
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? require_array(j[0], at(pointer, std::size_t{0})).size() : 0;
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = at(pointer, r);
    require_array(j[r], rp);
    if (j[r].size() != cols) throw SchemaError(rp, "row length differs from row 0");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], at(rp, c));
  }
  return m;
}

Json numeric_matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json profile_to_json(const Profile& d) {
  Json rows = Json::array();
  for (int i = 1; i <= d.p(); ++i) {
    Json row = Json::array();
    for (int k = 1; k <= d.p(); ++k) row.push_back(d(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Profile profile_from_json(const Json& j, const std::string& pointer) {
  require_array(j, pointer);
  const int p = static_cast<int>(j.size());
  if (p == 0) throw SchemaError(pointer, "empty profile");
  std::vector<int> data;
  for (int i = 0; i < p; ++i) {
    const auto row = int_list_from_json(j[i], at(pointer, static_cast<std::size_t>(i)));
    if (static_cast<int>(row.size()) != p) throw SchemaError(at(pointer, i), "profile must be square");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Profile(p, data);
}

Json base_algebra_to_json(const BaseAlgebra& b) {
  Json basis = Json::array();
  for (const auto& r : b.basis) basis.push_back(matrix_to_json(r));
  Json phi = Json::array();
  for (const auto& block : b.phi) {
    Json images = Json::array();
    for (const auto& m : block) images.push_back(matrix_to_json(m));
    phi.push_back(std::move(images));
  }
  return Json{{"format", "symtensor-base-algebra"}, {"version", 1},          {"m", b.m},
              {"basis", std::move(basis)},          {"block_sizes", b.block_sizes}, {"phi", std::move(phi)}};
}

BaseAlgebra base_algebra_from_json(const Json& j, const std::string& pointer) {
  BaseAlgebra b;
  b.m = int_from_json(require(j, "m", pointer), at(pointer, "m"), 1);
  const std::string bp = at(pointer, "basis");
  const Json& basis = require_array(require(j, "basis", pointer), bp);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Matrix r = matrix_from_json(basis[i], at(bp, i));
    if (r.rows() != static_cast<std::size_t>(b.m) || r.cols() != static_cast<std::size_t>(b.m))
      throw SchemaError(at(bp, i), "basis matrix is not m x m");
    b.basis.push_back(std::move(r));
  }
  b.block_sizes = int_list_from_json(require(j, "block_sizes", pointer), at(pointer, "block_sizes"));
  const std::string pp = at(pointer, "phi");
  const Json& phi = require_array(require(j, "phi", pointer), pp);
  if (phi.size() != b.block_sizes.size()) throw SchemaError(pp, "need one entry per block");
  for (std::size_t k = 0; k < phi.size(); ++k) {
    const std::string kp = at(pp, k);
    require_array(phi[k], kp);
    if (phi[k].size() != b.basis.size()) throw SchemaError(kp, "need one image per basis matrix");
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < phi[k].size(); ++i) {
      Matrix m = matrix_from_json(phi[k][i], at(kp, i));
      const auto pk = static_cast<std::size_t>(b.block_sizes[k]);
      if (m.rows() != pk || m.cols() != pk) throw SchemaError(at(kp, i), "image is not p_k x p_k");
      images.push_back(std::move(m));
    }
    b.phi.push_back(std::move(images));
  }
  return b;
}

BaseAlgebra load_base_algebra(const fs::path& path) { return base_algebra_from_json(read_json(path)); }

void save_base_algebra(const BaseAlgebra& b, const fs::path& path) {
  write_atomic(path, dump_json(base_algebra_to_json(b)));
}

Json table_to_json(const InnerProductTable& t) {
  Json basis = Json::array();
  for (const auto& tab : t.basis) basis.push_back(tableau_to_json(tab));
  Json entries = Json::array();
  for (const auto& [d, m] : t.entries)
    entries.push_back(Json{{"profile", profile_to_json(d)}, {"matrix", matrix_to_json(m)}});
  return Json{{"format_version", kTableFormatVersion},
              {"p", t.p},
              {"n", t.n},
              {"shape", t.shape.parts()},
              {"basis", std::move(basis)},
              {"entries", std::move(entries)}};
}

InnerProductTable table_from_json(const Json& j, const std::string& pointer) {
  InnerProductTable t;
  t.p = int_from_json(require(j, "p", pointer), at(pointer, "p"), 1);
  t.n = int_from_json(require(j, "n", pointer), at(pointer, "n"));
  try {
    t.shape = Partition(int_list_from_json(require(j, "shape", pointer), at(pointer, "shape")));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(at(pointer, "shape"), e.what());
  }
  const std::string bp = at(pointer, "basis");
  const Json& basis = require_array(require(j, "basis", pointer), bp);
  for (std::size_t i = 0; i < basis.size(); ++i) t.basis.push_back(tableau_from_json(basis[i], at(bp, i)));
  const std::string ep = at(pointer, "entries");
  const Json& entries = require_array(require(j, "entries", pointer), ep);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string ip = at(ep, i);
    Profile d = profile_from_json(require(entries[i], "profile", ip), at(ip, "profile"));
    t.entries.emplace(std::move(d), matrix_from_json(require(entries[i], "matrix", ip), at(ip, "matrix")));
  }
  return t;
}

Json full_blockdiag_to_json(const FullBlockDiagonalization& bd, bool orthonormal) {
  const auto profiles = enum_profiles(bd.n(), bd.p());
  Json blocks = Json::array();
  for (std::size_t k = 0; k < bd.shapes().size(); ++k) {
    const auto& table = bd.table(k);
    Json basis = Json::array();
    for (const auto& t : table.basis) basis.push_back(tableau_to_json(t));
    Json images = Json::array();
    Json orthonormal_images = Json::array();
    for (const auto& d : profiles) {
      const Matrix img = bd.basis_image(k, d);
      if (img.is_zero()) continue;
      images.push_back(Json{{"profile", profile_to_json(d)}, {"matrix", matrix_to_json(img)}});
      if (orthonormal) {
        const auto& r = bd.orthonormalizer(k).r;
        orthonormal_images.push_back(Json{{"profile", profile_to_json(d)},
                                          {"matrix", numeric_matrix_to_json(r.transpose() * img.to_eigen() * r)}});
      }
    }
    Json block{{"shape", table.shape.parts()},
               {"size", table.size()},
               {"basis", std::move(basis)},
               {"gram", matrix_to_json(bd.gram(k))},
               {"images", std::move(images)}};
    if (orthonormal) {
      block["orthonormalizer"] = numeric_matrix_to_json(bd.orthonormalizer(k).r);
      block["orthonormal_images"] = std::move(orthonormal_images);
    }
    blocks.push_back(std::move(block));
  }
  return Json{{"format", "symtensor-blockdiag-full"},
              {"version", 1},
              {"n", bd.n()},
              {"p", bd.p()},
              {"orthonormal", orthonormal},
              {"block_layout", "entry (r, c) of the block of A_D is <A_D e_c, e_r>"},
              {"blocks", std::move(blocks)}};
}

Json general_blockdiag_to_json(const GeneralBlockDiagonalization& bd, bool orthonormal) {
  const auto& b = bd.base();
  Json labels = Json::array();
  for (const auto& label : bd.labels()) {
    Json shapes = Json::array();
    std::size_t size = 1;
    for (std::size_t i = 0; i < label.shapes.size(); ++i) {
      shapes.push_back(label.shapes[i].parts());
      size *= enum_ssyt(label.shapes[i], b.block_sizes[i]).size();
    }
    labels.push_back(Json{{"sector", label.mu}, {"shapes", std::move(shapes)}, {"size", size}});
  }
  Json images = Json::array();
  for (const auto& nu : enum_compositions(bd.n(), b.s())) {
    GeneralElement a(bd.n(), b.s());
    a.add_term(nu, 1);
    Json y = Json::array();
    for (const auto& [sp, c] : bd.y_coefficients(a)) {
      Json profiles = Json::array();
      for (const auto& d : sp.d) profiles.push_back(profile_to_json(d));
      y.push_back(Json{{"sector", sp.mu}, {"profiles", std::move(profiles)}, {"coeff", scalar_to_json(c)}});
    }
    const auto exact = bd.psi_prime(a);
    std::optional<GeneralNumericImage> numeric;
    if (orthonormal) numeric = bd.psi(a);
    Json blocks = Json::array();
    for (std::size_t k = 0; k < exact.blocks.size(); ++k) {
      if (exact.blocks[k].is_zero()) continue;
      Json entry{{"label", k}, {"matrix", matrix_to_json(exact.blocks[k])}};
      if (numeric) entry["orthonormal_matrix"] = numeric_matrix_to_json(numeric->blocks[k]);
      blocks.push_back(std::move(entry));
    }
    images.push_back(Json{{"nu", nu}, {"y", std::move(y)}, {"blocks", std::move(blocks)}});
  }
  return Json{{"format", "symtensor-blockdiag-general"},
              {"version", 1},
              {"n", bd.n()},
              {"s", b.s()},
              {"block_sizes", b.block_sizes},
              {"orthonormal", orthonormal},
              {"labels", std::move(labels)},
              {"images", std::move(images)}};
}

Json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", path.string() + ": " + e.what());
  }
}

void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  fs::path tmp = path;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

TableCache::TableCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path TableCache::path_for(const Partition& lambda, int n, int p) const {
  std::string shape;
  for (int part : lambda.parts()) shape += (shape.empty() ? "" : "-") + std::to_string(part);
  if (shape.empty()) shape = "empty";
  return dir_ / ("table_v" + std::to_string(kTableFormatVersion) + "_p" + std::to_string(p) + "_n" +
                 std::to_string(n) + "_" + shape + ".json");
}

std::optional<InnerProductTable> TableCache::load(const Partition& lambda, int n, int p) const {
  const fs::path path = path_for(lambda, n, p);
  if (!fs::exists(path)) return std::nullopt;
  try {
    const Json j = read_json(path);
    if (!j.is_object() || j.value("format_version", -1) != kTableFormatVersion) return std::nullopt;
    InnerProductTable t = table_from_json(j);
    if (t.p != p || t.n != n || t.shape != lambda) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TableCache::store(const InnerProductTable& t) const {
  write_atomic(path_for(t.shape, t.n, t.p), dump_json(table_to_json(t)));
}

std::shared_ptr<const InnerProductTable> TableCache::get(const Partition& lambda, int n, int p) const {
  if (auto cached = load(lambda, n, p)) return std::make_shared<const InnerProductTable>(std::move(*cached));
  auto computed = cached_inner_product_table(lambda, n, p);
  store(*computed);
  return computed;
}

TableProvider TableCache::provider() const {
  return [this](const Partition& lambda, int n, int p) { return get(lambda, n, p); };
}

std::optional<fs::path> default_cache_dir() {
  const char* env = std::getenv("SYMTENSOR_CACHE_DIR");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return fs::path(env);
}

namespace {

std::vector<std::pair<std::vector<int>, Scalar>> terms_from_json(const Json& j, const std::string& pointer,
                                                                 const SdpProgram& prog) {
  require_array(j, pointer);
  std::vector<std::pair<std::vector<int>, Scalar>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ip = at(pointer, i);
    std::vector<int> key;
    if (prog.base) {
      key = int_list_from_json(require(j[i], "nu", ip), at(ip, "nu"));
      int total = 0;
      for (int v : key) total += v;
      if (static_cast<int>(key.size()) != prog.base->s() || total != prog.n)
        throw SchemaError(at(ip, "nu"), "nu must have s entries summing to n");
    } else {
      const Profile d = profile_from_json(require(j[i], "profile", ip), at(ip, "profile"));
      if (d.p() != prog.p || d.total() != prog.n)
        throw SchemaError(at(ip, "profile"), "profile is not in P(n, p)");
      key = d.data();
    }
    out.emplace_back(std::move(key), scalar_from_json(require(j[i], "coeff", ip), at(ip, "coeff")));
  }
  return out;
}

}  // namespace

SdpProgram sdp_program_from_json(const Json& j, const fs::path& base_dir) {
  SdpProgram prog;
  prog.n = int_from_json(require(j, "n", ""), "/n");
  if (j.contains("base")) {
    const Json& base = j["base"];
    if (base.is_string()) {
      fs::path path = base.get<std::string>();
      if (path.is_relative()) path = base_dir / path;
      prog.base = load_base_algebra(path);
    } else {
      prog.base = base_algebra_from_json(base, "/base");
    }
    const auto report = validate_base_algebra(*prog.base);
    if (!report.ok()) throw SchemaError("/base", report.failure->check + ": " + report.failure->detail);
  } else {
    prog.p = int_from_json(require(j, "p", ""), "/p", 1);
  }
  if (j.contains("sense")) {
    const Json& sense = j["sense"];
    if (sense == "maximize") prog.maximize = true;
    else if (sense == "minimize") prog.maximize = false;
    else throw SchemaError("/sense", "expected \"maximize\" or \"minimize\"");
  }
  prog.objective = terms_from_json(require(j, "objective", ""), "/objective", prog);
  const Json& constraints = require_array(require(j, "constraints", ""), "/constraints");
  if (constraints.empty()) throw SchemaError("/constraints", "at least one constraint is required");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const std::string cp = at("/constraints", i);
    SdpConstraint c;
    c.terms = terms_from_json(require(constraints[i], "terms", cp), at(cp, "terms"), prog);
    const Json& rel = require(constraints[i], "relation", cp);
    if (rel == "=") c.relation = Relation::kEqual;
    else if (rel == "<=") c.relation = Relation::kLessEqual;
    else if (rel == ">=") c.relation = Relation::kGreaterEqual;
    else throw SchemaError(at(cp, "relation"), "expected \"=\", \"<=\" or \">=\"");
    c.rhs = rational_from_json(require(constraints[i], "rhs", cp), at(cp, "rhs"));
    prog.constraints.push_back(std::move(c));
  }
  return prog;
}

SdpProgram load_sdp_program(const fs::path& path) {
  return sdp_program_from_json(read_json(path), path.parent_path());
}

std::string export_sdpa(const SdpProgram& program, int threads, const TableCache* cache) {
  using Terms = std::vector<std::pair<std::vector<int>, Scalar>>;
  std::vector<std::string> block_names;
  std::function<std::vector<Matrix>(const Terms&)> image;

  std::unique_ptr<FullBlockDiagonalization> full;
  std::unique_ptr<GeneralBlockDiagonalization> general;
  if (program.base) {
    general = std::make_unique<GeneralBlockDiagonalization>(*program.base, program.n, threads);
    for (const auto& label : general->labels()) block_names.push_back(label.to_string());
    image = [&](const Terms& terms) {
      GeneralElement a(program.n, program.base->s());
      for (const auto& [nu, c] : terms) a.add_term(nu, c);
      return general->psi_prime(a).blocks;
    };
  } else {
    full = std::make_unique<FullBlockDiagonalization>(program.n, program.p, threads,
                                                      cache ? cache->provider() : TableProvider{});
    for (const auto& shape : full->shapes()) block_names.push_back(shape.to_string());
    image = [&](const Terms& terms) {
      AlgebraElement a(program.n, program.p);
      for (const auto& [key, c] : terms) a.add_term(Profile(program.p, key), c);
      return full->psi_prime(a).blocks;
    };
  }

  std::vector<std::size_t> inequalities;
  for (std::size_t i = 0; i < program.constraints.size(); ++i) {
    if (program.constraints[i].relation != Relation::kEqual) inequalities.push_back(i);
  }

  std::ostringstream out;
  out << "* symtensor reduced SDP in SDPA sparse format\n";
  out << "* dual form: maximize <F0, Y> subject to <Fi, Y> = ci, Y PSD\n";
  out << "* n = " << program.n;
  if (program.base) out << ", base algebra with s = " << program.base->s();
  else out << ", p = " << program.p;
  out << ", sense = " << (program.maximize ? "maximize" : "minimize (F0 negated)") << "\n";
  out << "* blocks:";
  for (const auto& name : block_names) out << " " << name;
  if (!inequalities.empty()) out << " slack";
  out << "\n";
  for (std::size_t i = 0; i < program.constraints.size(); ++i) {
    out << "* constraint " << i + 1 << ": " << relation_name(program.constraints[i].relation) << " "
        << rational_to_string(program.constraints[i].rhs) << "\n";
  }

  std::vector<std::vector<Matrix>> images;
  images.push_back(image(program.objective));
  for (const auto& c : program.constraints) images.push_back(image(c.terms));

  out << program.constraints.size() << "\n";
  out << block_names.size() + (inequalities.empty() ? 0 : 1) << "\n";
  for (std::size_t k = 0; k < images[0].size(); ++k) out << (k ? " " : "") << images[0][k].rows();
  if (!inequalities.empty()) out << " -" << inequalities.size();
  out << "\n";
  for (std::size_t i = 0; i < program.constraints.size(); ++i)
    out << (i ? " " : "") << format_double(program.constraints[i].rhs.get_d());
  out << "\n";

  const Scalar half(mpq_class(1, 2));
  for (std::size_t mat = 0; mat < images.size(); ++mat) {
    const Scalar sign = (mat == 0 && !program.maximize) ? Scalar(-1) : Scalar(1);
    for (std::size_t k = 0; k < images[mat].size(); ++k) {
      const Matrix& m = images[mat][k];
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
          const Scalar v = (m(r, c) + m(c, r)) * half * sign;
          if (v.is_zero()) continue;
          out << mat << " " << k + 1 << " " << r + 1 << " " << c + 1 << " " << format_double(v.to_double())
              << "\n";
        }
      }
    }
    if (mat > 0 && !inequalities.empty()) {
      const auto& c = program.constraints[mat - 1];
      if (c.relation == Relation::kEqual) continue;
      const std::size_t slot =
          std::find(inequalities.begin(), inequalities.end(), mat - 1) - inequalities.begin() + 1;
      out << mat << " " << block_names.size() + 1 << " " << slot << " " << slot << " "
          << (c.relation == Relation::kLessEqual ? "1" : "-1") << "\n";
    }
  }
  return out.str();
}

}  // namespace symtensor
