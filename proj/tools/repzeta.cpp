// repzeta: experiment runner.
// exit 0 = all checks passed, 1 = mathematical check failed, 2 = budget, IO or usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "repzeta/error.hpp"
#include "repzeta/expcli/experiment.hpp"
#include "repzeta/expcli/selftest.hpp"

using namespace repzeta;
using namespace repzeta::expcli;

namespace {

struct Output {
  std::string format = "text";
  bool no_cache = false;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  out << content;
  if (!out) throw IoError("cannot write " + path.string());
}

void add_group_flags(CLI::App* cmd, ExperimentSpec& spec, std::string& scheme, bool with_p, bool with_k) {
  cmd->add_option("--scheme", scheme, "gl, sl, u, heisenberg, diagonal")->default_val(scheme);
  cmd->add_option("--n", spec.n, "matrix size")->default_val(spec.n);
  if (with_p) cmd->add_option("--p", spec.p, "residue characteristic")->required();
  if (with_k) cmd->add_option("--k", spec.k, "truncation length")->required();
  cmd->add_option("--f", spec.f, "residue degree")->default_val(spec.f);
}

void add_common_flags(CLI::App* cmd, ExperimentSpec& spec, Output& o) {
  cmd->add_option("--out", spec.out, "write the JSON report here");
  cmd->add_option("--text", spec.text, "write the text rendering here");
  cmd->add_option("--format", o.format, "stdout format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val(o.format);
  cmd->add_flag("--no-cache", o.no_cache, "ignore $REPZETA_CACHE_DIR");
  cmd->add_option("--element-budget", spec.budgets.elements)->default_val(spec.budgets.elements);
  cmd->add_option("--sweep-budget", spec.budgets.sweep)->default_val(spec.budgets.sweep);
  cmd->add_option("--algebra-budget", spec.budgets.algebra)->default_val(spec.budgets.algebra);
  cmd->add_option("--max-classes", spec.budgets.max_classes)->default_val(spec.budgets.max_classes);
  cmd->add_option("--functional-budget", spec.budgets.functionals)->default_val(spec.budgets.functionals);
}

int emit(const ExperimentSpec& spec, const Report& report, const Output& o) {
  const std::string json = report.to_json().dump(2) + "\n";
  const std::string text = report.to_text();
  if (spec.out) write_file(*spec.out, json);
  if (spec.text) write_file(*spec.text, text);
  if (spec.csv) write_file(*spec.csv, report.to_csv());
  std::cout << (o.format == "json" ? json : text);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation-zeta experiments over finite local rings"};
  app.require_subcommand(1);

  ExperimentSpec spec;
  Output output;
  std::string scheme_verify = "sl", scheme_ntable = "sl", scheme_count = "sl", scheme_unipotent = "u";
  std::string selftest_dir;

  auto* verify = app.add_subcommand("verify", "compare G(F_q[t]/t^k) and G(W_k(F_q))");
  add_group_flags(verify, spec, scheme_verify, true, true);
  verify->add_option("--mode", spec.mode, "direct, prop21 or both")->default_val(spec.mode);
  add_common_flags(verify, spec, output);

  auto* ntable = app.add_subcommand("ntable", "N(G(F_p)) across primes");
  add_group_flags(ntable, spec, scheme_ntable, false, false);
  ntable->add_option("--primes", spec.primes, "comma-separated primes")->delimiter(',')->required();
  ntable->add_option("--csv", spec.csv, "write the table as CSV here");
  add_common_flags(ntable, spec, output);

  auto* pointcount = app.add_subcommand("pointcount", "orders and commuting pairs on both sides");
  add_group_flags(pointcount, spec, scheme_count, true, true);
  add_common_flags(pointcount, spec, output);

  auto* unipotent = app.add_subcommand("unipotent", "Dixon, zeta inversion and coadjoint orbits on U_n(F_q)");
  add_group_flags(unipotent, spec, scheme_unipotent, true, false);
  add_common_flags(unipotent, spec, output);

  auto* probe = app.add_subcommand("probe-q2", "SL_2 over F_2[t]/t^4 and Z/16");
  add_common_flags(probe, spec, output);

  auto* selftest = app.add_subcommand("selftest", "quick end-to-end checks");
  selftest->add_option("--scratch", selftest_dir, "directory for the cache round trip");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (selftest->parsed()) {
      std::filesystem::path dir = selftest_dir.empty()
                                      ? std::filesystem::temp_directory_path() / "repzeta-selftest"
                                      : std::filesystem::path(selftest_dir);
      std::filesystem::remove_all(dir);
      const bool ok = run_selftest(std::cout, dir);
      std::filesystem::remove_all(dir);
      return ok ? 0 : 1;
    }
    std::string scheme = "sl";
    if (verify->parsed()) {
      spec.kind = ExperimentKind::VerifyEquivalence;
      scheme = scheme_verify;
    } else if (ntable->parsed()) {
      spec.kind = ExperimentKind::NTable;
      scheme = scheme_ntable;
    } else if (pointcount->parsed()) {
      spec.kind = ExperimentKind::PointCount;
      scheme = scheme_count;
    } else if (unipotent->parsed()) {
      spec.kind = ExperimentKind::UnipotentCrossCheck;
      scheme = scheme_unipotent;
      spec.k = 1;
    } else {
      spec.kind = ExperimentKind::CounterexampleProbe;
    }
    spec.scheme = groups::scheme_from_string(scheme);

    RunContext ctx;
    if (!output.no_cache) ctx = RunContext::from_environment();
    return emit(spec, run_experiment(spec, ctx), output);
  } catch (const MathError& e) {
    std::cerr << "mathematical check failed: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
