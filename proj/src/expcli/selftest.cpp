#include "repzeta/expcli/selftest.hpp"

#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "repzeta/expcli/experiment.hpp"
#include "repzeta/groups/finite_group.hpp"

namespace repzeta::expcli {

namespace {

ExperimentSpec make(ExperimentKind kind, groups::Scheme scheme, std::uint32_t n, std::uint32_t p, std::uint32_t k) {
  ExperimentSpec s;
  s.kind = kind;
  s.scheme = scheme;
  s.n = n;
  s.p = p;
  s.k = k;
  return s;
}

bool cache_checks(const std::filesystem::path& dir) {
  using groups::GroupSpec;
  const GroupSpec spec{groups::Scheme::SL, 2, rings::RingDescriptor::field(3)};
  const auto group = groups::enumerate_group(spec);
  const auto data = groups::conjugacy_classes(group);
  ConjugacyCache cache(dir);
  const auto back = cache_roundtrip(data, cache);
  if (back.class_of_element() != data.class_of_element() || back.num_classes() != data.num_classes()) return false;

  // a different version never sees the entry
  ConjugacyCache other(dir, "selftest-other-version");
  if (other.load(group).status != CacheStatus::Miss) return false;

  // truncation is caught by the checksum
  const auto path = cache.path_for(spec);
  std::filesystem::resize_file(path, std::filesystem::file_size(path) - 7);
  CacheStatus status{};
  const auto again = load_or_compute(&cache, group, {}, &status);
  if (status != CacheStatus::Corrupt || again.class_of_element() != data.class_of_element()) return false;
  return cache.load(group).status == CacheStatus::Hit;
}

}  // namespace

bool run_selftest(std::ostream& out, const std::filesystem::path& scratch) {
  using groups::Scheme;
  std::vector<std::pair<std::string, std::function<bool()>>> items;
  RunContext ctx;

  auto experiment = [&](std::string name, ExperimentSpec spec, std::function<bool(const Report&)> extra) {
    items.emplace_back(std::move(name), [&ctx, spec, extra] {
      const Report r = run_experiment(spec, ctx);
      return r.passed() && extra(r);
    });
  };
  experiment("verify SL_2 p=3 k=2", make(ExperimentKind::VerifyEquivalence, Scheme::SL, 2, 3, 2),
             [](const Report& r) { return r.body["equal"].get<bool>(); });
  experiment("verify GL_1 p=5 k=3", make(ExperimentKind::VerifyEquivalence, Scheme::GL, 1, 5, 3),
             [](const Report& r) { return r.body["groups"][0]["degrees_text"] == "{1:100}"; });
  experiment("pointcount SL_2 p=3 k=2", make(ExperimentKind::PointCount, Scheme::SL, 2, 3, 2),
             [](const Report& r) { return r.body["orders_equal"].get<bool>(); });
  {
    auto s = make(ExperimentKind::NTable, Scheme::U, 3, 0, 1);
    s.primes = {3, 5};
    experiment("ntable U_3 p in {3,5}", s, [](const Report& r) {
      return r.body["constant"].get<bool>() && r.body["max_N"] == 2;
    });
  }
  experiment("unipotent U_3 p=3", make(ExperimentKind::UnipotentCrossCheck, Scheme::U, 3, 3, 1),
             [](const Report&) { return true; });
  items.emplace_back("deterministic report body", [&ctx] {
    const auto s = make(ExperimentKind::VerifyEquivalence, Scheme::SL, 2, 3, 2);
    return run_experiment(s, ctx).body == run_experiment(s, ctx).body;
  });
  items.emplace_back("cache round trip", [&scratch] { return cache_checks(scratch); });

  bool all = true;
  for (const auto& [name, fn] : items) {
    bool ok = false;
    std::string why;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      why = e.what();
    }
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << name << (why.empty() ? "" : " (" + why + ")") << "\n";
  }
  return all;
}

}  // namespace repzeta::expcli
