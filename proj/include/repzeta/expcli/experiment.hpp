#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "repzeta/chartab/dimension_multiset.hpp"
#include "repzeta/expcli/cache.hpp"
#include "repzeta/groups/group_spec.hpp"

namespace repzeta::expcli {

enum class ExperimentKind { VerifyEquivalence, NTable, PointCount, UnipotentCrossCheck, CounterexampleProbe };

std::string to_string(ExperimentKind k);
ExperimentKind experiment_kind_from_string(const std::string& s);

struct Budgets {
  std::uint64_t elements = groups::kDefaultElementBudget;
  std::uint64_t sweep = groups::kDefaultSweepBudget;
  std::uint64_t algebra = groups::kDefaultSweepBudget;
  std::uint64_t max_classes = 4096;
  std::uint64_t functionals = 5'000'000;
  bool operator==(const Budgets&) const = default;
};

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::VerifyEquivalence;
  groups::Scheme scheme = groups::Scheme::SL;
  std::uint32_t n = 2;
  std::uint32_t p = 3;
  std::uint32_t f = 1;
  std::uint32_t k = 2;
  std::vector<std::uint32_t> primes;  // n-table only
  std::string mode = "both";          // direct | prop21 | both
  Budgets budgets;
  std::optional<std::filesystem::path> out;  // JSON report
  std::optional<std::filesystem::path> text;  // aligned text rendering
  std::optional<std::filesystem::path> csv;   // n-table rows

  /// std::invalid_argument on parameters no runner accepts.
  void validate() const;
};

/// Echo of the parameters that determine the report content (paths excluded).
void to_json(nlohmann::json& j, const ExperimentSpec& s);

struct Report {
  /// Deterministic content: schema, version, spec echo, groups, verdicts, checks.
  nlohmann::json body;
  /// Timings and cache statuses; excluded from comparisons.
  nlohmann::json run = nlohmann::json::object();

  bool passed() const;
  std::vector<std::string> failed_checks() const;
  /// body plus {"run": run}.
  nlohmann::json to_json() const;
  std::string to_text() const;
  /// Only meaningful for n-table reports; empty otherwise.
  std::string to_csv() const;
};

/// Shared state for a sequence of experiments.
struct RunContext {
  std::optional<ConjugacyCache> cache;  // defaults to $REPZETA_CACHE_DIR
  static RunContext from_environment();
};

Report run_verify_equivalence(const ExperimentSpec& spec, RunContext& ctx);
Report run_n_table(const ExperimentSpec& spec, RunContext& ctx);
Report run_point_count(const ExperimentSpec& spec, RunContext& ctx);
Report run_unipotent_cross_check(const ExperimentSpec& spec, RunContext& ctx);
/// SL_2 over F_2[t]/(t^4) and Z/16. The equality verdict is recorded, not asserted.
Report run_counterexample_probe(const ExperimentSpec& spec, RunContext& ctx);

Report run_experiment(const ExperimentSpec& spec, RunContext& ctx);

/// Columns padded to their widest cell, two spaces apart.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace repzeta::expcli
