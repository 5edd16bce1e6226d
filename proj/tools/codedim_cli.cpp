// codedim command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "codedim/codedim.h"

namespace {

constexpr int kDefaultMaxN = 20;
constexpr int kUnacknowledgedMaxN = 24;

struct InputOptions {
  std::string generator;
  std::string code_file;
  std::string complex_file;
  std::string codewords;
  int i = -1;
  int r = -1;
  int m = -1;
  int n = -1;
  double density = 0.5;
  std::uint64_t seed = 1;
};

struct RunConfig {
  std::uint32_t field = 2;
  std::optional<int> max_n;
  bool allow_large = false;
  std::string format = "text";
  InputOptions input;
};

struct ComplexDeleter {
  void operator()(codedim_complex* c) const { codedim_complex_free(c); }
};
struct TableDeleter {
  void operator()(codedim_table* t) const { codedim_table_free(t); }
};
struct ReportDeleter {
  void operator()(codedim_report* r) const { codedim_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { codedim_string_free(s); }
};
using ComplexPtr = std::unique_ptr<codedim_complex, ComplexDeleter>;
using TablePtr = std::unique_ptr<codedim_table, TableDeleter>;
using ReportPtr = std::unique_ptr<codedim_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown inside a subcommand; carries the process exit status.
struct CommandFailure {
  int status;
};

void check(codedim_status status) {
  if (status == CODEDIM_OK) return;
  std::cerr << "codedim: " << codedim_status_name(status) << ": " << codedim_last_error()
            << "\n";
  throw CommandFailure{static_cast<int>(status)};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "codedim: " << message << "\n";
  throw CommandFailure{static_cast<int>(CODEDIM_ERR_INVALID_ARGUMENT)};
}

int resolve_max_n(const RunConfig& cfg) {
  int max_n = kDefaultMaxN;
  if (const char* env = std::getenv("CODEDIM_MAX_N"); env != nullptr && *env != '\0') {
    try {
      max_n = std::stoi(env);
    } catch (const std::exception&) {
      usage_error(std::string("CODEDIM_MAX_N is not an integer: '") + env + "'");
    }
  }
  if (cfg.max_n) max_n = *cfg.max_n;
  if (max_n < 1) usage_error("the vertex guard must be positive");
  if (max_n > kUnacknowledgedMaxN && !cfg.allow_large) {
    usage_error("a vertex guard above " + std::to_string(kUnacknowledgedMaxN) +
                " needs --allow-large (the sweep visits 2^n subsets)");
  }
  return max_n;
}

codedim_format resolve_format(const std::string& name) {
  if (name == "json") return CODEDIM_FORMAT_JSON;
  if (name == "text") return CODEDIM_FORMAT_TEXT;
  return CODEDIM_FORMAT_M2;
}

ComplexPtr load_complex(const InputOptions& in) {
  const int sources = (in.generator.empty() ? 0 : 1) + (in.code_file.empty() ? 0 : 1) +
                      (in.complex_file.empty() ? 0 : 1) + (in.codewords.empty() ? 0 : 1);
  if (sources != 1) {
    usage_error("give exactly one of --generator, --code-file, --complex-file, --codewords");
  }
  codedim_complex* raw = nullptr;
  if (!in.generator.empty()) {
    codedim_generator_params params = codedim_generator_defaults();
    params.i = in.i;
    params.r = in.r;
    params.m = in.m;
    params.n = in.n;
    params.density = in.density;
    params.seed = in.seed;
    check(codedim_complex_generate(in.generator.c_str(), &params, &raw));
  } else if (!in.code_file.empty()) {
    check(codedim_complex_from_code_file(in.code_file.c_str(), &raw));
  } else if (!in.complex_file.empty()) {
    check(codedim_complex_from_facet_file(in.complex_file.c_str(), &raw));
  } else {
    check(codedim_complex_from_codewords(in.codewords.c_str(), in.n, &raw));
  }
  ComplexPtr complex(raw);
  if (codedim_complex_is_void(complex.get())) {
    usage_error("the input describes the void complex (no codewords)");
  }
  return complex;
}

void add_common_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--field", cfg.field, "Prime characteristic of the coefficient field")
      ->default_val(2);
  cmd.add_option("--max-n", cfg.max_n,
                 "Largest vertex count to sweep (default 20, or $CODEDIM_MAX_N)");
  cmd.add_flag("--allow-large", cfg.allow_large, "Accept a guard above 24");
  cmd.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "m2"}))
      ->default_val("text");
  auto& in = cfg.input;
  cmd.add_option("--generator", in.generator,
                 "Named fixture: cross-polytope, cone-cross-polytope, octahedron, square, "
                 "cone-square, complete-bipartite, hollow-simplex, full-simplex, l26, random");
  cmd.add_option("--i", in.i, "Cross-polytope index");
  cmd.add_option("--r", in.r, "Side size of K_{r,r}");
  cmd.add_option("--m", in.m, "Hollow simplex vertex count");
  cmd.add_option("--n", in.n, "Vertex count (full-simplex, random, inline codewords)");
  cmd.add_option("--density", in.density, "Vertex probability for --generator random");
  cmd.add_option("--seed", in.seed, "Seed for --generator random");
  cmd.add_option("--code-file", in.code_file, "Code file, one codeword per line")
      ->check(CLI::ExistingFile);
  cmd.add_option("--complex-file", in.complex_file, "Facet file, one facet per line")
      ->check(CLI::ExistingFile);
  cmd.add_option("--codewords", in.codewords, "Inline codewords, e.g. \"1100 1010 {3,4}\"");
}

int cmd_analyze(const RunConfig& cfg) {
  const int max_n = resolve_max_n(cfg);
  auto complex = load_complex(cfg.input);
  codedim_report* raw = nullptr;
  check(codedim_report_compute(complex.get(), cfg.field, max_n, &raw));
  ReportPtr report(raw);
  char* text = nullptr;
  check(codedim_report_format(report.get(), resolve_format(cfg.format), &text));
  StringPtr owned(text);
  std::cout << owned.get();
  return 0;
}

int cmd_betti(const RunConfig& cfg) {
  const int max_n = resolve_max_n(cfg);
  auto complex = load_complex(cfg.input);
  codedim_table* raw = nullptr;
  check(codedim_table_compute(complex.get(), cfg.field, max_n, &raw));
  TablePtr table(raw);
  char* text = nullptr;
  check(codedim_table_format(table.get(), resolve_format(cfg.format), &text));
  StringPtr owned(text);
  std::cout << owned.get();
  return 0;
}

struct OracleOptions {
  std::uint32_t field = 2;
  std::optional<int> max_n;
  int n = 6;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  bool corrupt = false;
};

int cmd_oracle_check(const OracleOptions& opt) {
  RunConfig guard_cfg;
  guard_cfg.max_n = opt.max_n;
  const int max_n = resolve_max_n(guard_cfg);
  if (opt.n > max_n) {
    usage_error("--n " + std::to_string(opt.n) + " exceeds the vertex guard " +
                std::to_string(max_n));
  }
  codedim_oracle_summary summary{};
  char* text = nullptr;
  check(codedim_oracle_check(opt.n, opt.trials, opt.seed, opt.field,
                             opt.corrupt ? CODEDIM_CHECK_CORRUPT_TABLE : 0U, &summary, &text));
  StringPtr owned(text);
  std::cout << owned.get();
  return summary.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leray, Helly and homological dimension bounds of combinatorial codes"};
  app.set_version_flag("--version", std::string(codedim_version()));
  app.require_subcommand(1);

  RunConfig analyze_cfg;
  auto* analyze = app.add_subcommand("analyze", "Report d_L, d_H and d_hom of a code or complex");
  add_common_options(*analyze, analyze_cfg);

  RunConfig betti_cfg;
  auto* betti = app.add_subcommand("betti", "Print the multigraded Betti table of S/I_Delta");
  add_common_options(*betti, betti_cfg);

  OracleOptions oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle-check", "Run the invariant suite on random complexes");
  oracle_cmd->add_option("--field", oracle.field, "Prime characteristic")->default_val(2);
  oracle_cmd->add_option("--max-n", oracle.max_n, "Vertex guard");
  oracle_cmd->add_option("--n", oracle.n, "Vertices per random complex (at most 8)")
      ->default_val(6);
  oracle_cmd->add_option("--trials", oracle.trials, "Number of random complexes")
      ->default_val(100);
  oracle_cmd->add_option("--seed", oracle.seed, "Seed")->default_val(1);
  // Test hook: the suite must report failures on a perturbed table.
  oracle_cmd->add_flag("--corrupt-table", oracle.corrupt)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_cfg);
    if (betti->parsed()) return cmd_betti(betti_cfg);
    if (oracle_cmd->parsed()) return cmd_oracle_check(oracle);
  } catch (const CommandFailure& failure) {
    return failure.status;
  }
  return 0;
}
