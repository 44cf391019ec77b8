#include "symtensor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "symtensor/io.hpp"
#include "symtensor/terwilliger.hpp"
#include "symtensor/verify.hpp"

namespace symtensor {

namespace {

struct Options {
  std::string cache;
  double tol = 1e-9;
  int threads = 1;
  std::string out;
  int n = -1;
  int p = -1;
  int q = -1;
  bool orthonormal = false;
  bool schrijver = false;
  std::string format = "json";
  std::string base;
  std::string program;
  std::size_t cap = 1024;
};

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) out << text;
  else write_atomic(opt.out, text);
}

std::optional<TableCache> make_cache(const Options& opt) {
  if (!opt.cache.empty()) return TableCache(opt.cache);
  if (auto dir = default_cache_dir()) return TableCache(*dir);
  return std::nullopt;
}

std::string cmd_blockdiag_full(const Options& opt) {
  const auto cache = make_cache(opt);
  const FullBlockDiagonalization bd(opt.n, opt.p, opt.threads,
                                    cache ? cache->provider() : TableProvider{});
  return dump_json(full_blockdiag_to_json(bd, opt.orthonormal));
}

std::string cmd_blockdiag_general(const Options& opt) {
  const GeneralBlockDiagonalization bd(load_base_algebra(opt.base), opt.n, opt.threads);
  return dump_json(general_blockdiag_to_json(bd, opt.orthonormal));
}

std::string cmd_terwilliger_binary(const Options& opt) {
  Json entries = Json::array();
  for (const auto& [idx, image] : binary_blockdiag(opt.n)) {
    Json blocks = Json::array();
    for (int k = 0; 2 * k <= opt.n; ++k) {
      if (k > std::min(idx.i, idx.j) || std::max(idx.i, idx.j) > opt.n - k) continue;
      const int row = idx.j - k, col = idx.i - k;
      blocks.push_back(Json{{"k", k},
                            {"shape", image.unnormalized.shapes[k].parts()},
                            {"row", row},
                            {"col", col},
                            {"beta", scalar_to_json(image.unnormalized.blocks[k](row, col))},
                            {"normalized", image.normalized.blocks[k](row, col)}});
    }
    entries.push_back(Json{{"i", idx.i},
                           {"j", idx.j},
                           {"t", idx.t},
                           {"profile", profile_to_json(binary_profile(idx.i, idx.j, idx.t, opt.n))},
                           {"blocks", std::move(blocks)}});
  }
  Json doc{{"format", "symtensor-terwilliger-binary"},
           {"version", 1},
           {"n", opt.n},
           {"convention",
            "block k has size n-2k+1 with 0-based rows and columns; A^t_{i,j} has the single entry beta "
            "at row j-k, column i-k; normalized = beta / sqrt(C(n-2k,i-k) C(n-2k,j-k)); psi' = 2^k beta"},
           {"entries", std::move(entries)}};
  return dump_json(doc);
}

std::string cmd_terwilliger_nonbinary(const Options& opt) {
  Json images = Json::array();
  for (const auto& nu : enum_compositions(opt.n, 5)) {
    Json terms = Json::array();
    for (const auto& term : nonbinary_psi(nu, opt.n, opt.q)) {
      terms.push_back(Json{{"w", term.w}, {"profile", profile_to_json(term.d)}, {"coeff", scalar_to_json(term.coeff)}});
    }
    images.push_back(Json{{"nu", nu}, {"terms", std::move(terms)}});
  }
  Json doc{{"format", "symtensor-terwilliger-nonbinary"},
           {"version", 1},
           {"q", opt.q},
           {"n", opt.n},
           {"base", base_algebra_to_json(nonbinary_base(opt.q))},
           {"images", std::move(images)}};
  return dump_json(doc);
}

std::string cmd_beta(const Options& opt) {
  auto beta = opt.schrijver ? binary_beta_schrijver : binary_beta;
  std::ostringstream csv;
  Json rows = Json::array();
  csv << "i,j,k,t,beta\n";
  for (const auto& idx : binary_indices(opt.n)) {
    for (int k = 0; k <= std::min({idx.i, idx.j, opt.n - idx.i, opt.n - idx.j}); ++k) {
      const std::string value = beta(idx.i, idx.j, k, idx.t, opt.n).get_str();
      csv << idx.i << "," << idx.j << "," << k << "," << idx.t << "," << value << "\n";
      rows.push_back(Json{{"i", idx.i}, {"j", idx.j}, {"k", k}, {"t", idx.t}, {"beta", value}});
    }
  }
  if (opt.format == "csv") return csv.str();
  Json doc{{"format", "symtensor-beta"},
           {"version", 1},
           {"n", opt.n},
           {"formula", opt.schrijver ? "schrijver" : "operator"},
           {"rows", std::move(rows)}};
  return dump_json(doc);
}

std::string cmd_export_sdpa(const Options& opt) {
  const auto cache = make_cache(opt);
  return export_sdpa(load_sdp_program(opt.program), opt.threads, cache ? &*cache : nullptr);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Block diagonalization of symmetrized tensor algebras", "symtensor"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--cache", opt.cache, "Directory for cached inner-product tables (default: $SYMTENSOR_CACHE_DIR)");
  app.add_option("--tol", opt.tol, "Numeric tolerance for verification")->check(CLI::PositiveNumber);
  app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 256));

  auto* blockdiag = app.add_subcommand("blockdiag", "Block diagonalizations");
  blockdiag->require_subcommand(1);
  blockdiag->fallthrough();
  auto* full = blockdiag->add_subcommand("full", "Symmetrized tensor powers of M_p");
  full->add_option("--p", opt.p, "Matrix size p")->required()->check(CLI::Range(1, 16));
  full->add_option("--n", opt.n, "Tensor power n")->required()->check(CLI::Range(0, 64));
  full->add_flag("--orthonormal", opt.orthonormal, "Also emit orthonormalized blocks");
  full->add_option("--out", opt.out, "Output file (default: stdout)");
  auto* general = blockdiag->add_subcommand("general", "Symmetrized tensor powers of a base algebra");
  general->add_option("--base", opt.base, "Base algebra JSON file")->required()->check(CLI::ExistingFile);
  general->add_option("--n", opt.n, "Tensor power n")->required()->check(CLI::Range(0, 64));
  general->add_flag("--orthonormal", opt.orthonormal, "Also emit orthonormalized blocks");
  general->add_option("--out", opt.out, "Output file (default: stdout)");

  auto* terwilliger = app.add_subcommand("terwilliger", "Closed forms for the Terwilliger algebras");
  terwilliger->require_subcommand(1);
  terwilliger->fallthrough();
  auto* binary = terwilliger->add_subcommand("binary", "Binary Hamming scheme");
  binary->add_option("--n", opt.n, "Length n")->required()->check(CLI::Range(0, 64));
  binary->add_option("--out", opt.out, "Output file (default: stdout)");
  auto* nonbinary = terwilliger->add_subcommand("nonbinary", "Nonbinary Hamming scheme");
  nonbinary->add_option("--q", opt.q, "Alphabet size q >= 3")->required()->check(CLI::Range(3, 1 << 20));
  nonbinary->add_option("--n", opt.n, "Length n")->required()->check(CLI::Range(0, 32));
  nonbinary->add_option("--out", opt.out, "Output file (default: stdout)");

  auto* beta = app.add_subcommand("beta", "Table of beta^t_{i,j,k}");
  beta->add_option("--n", opt.n, "Length n")->required()->check(CLI::Range(0, 200));
  beta->add_flag("--schrijver", opt.schrijver, "Use the alternating sum over u");
  beta->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  beta->add_option("--out", opt.out, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Compare against the dense oracle");
  verify->add_option("--p", opt.p, "Matrix size p")->required()->check(CLI::Range(1, 16));
  verify->add_option("--n", opt.n, "Tensor power n")->required()->check(CLI::Range(0, 64));
  verify->add_option("--cap", opt.cap, "Largest allowed p^n");

  auto* exporter = app.add_subcommand("export", "Export reduced programs");
  exporter->require_subcommand(1);
  exporter->fallthrough();
  auto* sdpa = exporter->add_subcommand("sdpa", "SDPA sparse format");
  sdpa->add_option("--program", opt.program, "Program JSON file")->required()->check(CLI::ExistingFile);
  sdpa->add_option("--out", opt.out, "Output file (default: stdout)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (full->parsed()) emit(opt, cmd_blockdiag_full(opt), out);
    else if (general->parsed()) emit(opt, cmd_blockdiag_general(opt), out);
    else if (binary->parsed()) emit(opt, cmd_terwilliger_binary(opt), out);
    else if (nonbinary->parsed()) emit(opt, cmd_terwilliger_nonbinary(opt), out);
    else if (beta->parsed()) emit(opt, cmd_beta(opt), out);
    else if (sdpa->parsed()) emit(opt, cmd_export_sdpa(opt), out);
    else if (verify->parsed()) {
      const VerifyReport report = run_verification(opt.p, opt.n, opt.cap, opt.tol, opt.threads);
      out << report.to_string();
      return report.passed() ? 0 : 1;
    }
  } catch (const SchemaError& e) {
    err << (e.pointer().empty() ? "error: " : "error: invalid input at ") << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace symtensor
