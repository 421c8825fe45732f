#include "repzeta/expcli/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "repzeta/chartab/class_algebra.hpp"
#include "repzeta/chartab/dixon.hpp"
#include "repzeta/chartab/frobenius.hpp"
#include "repzeta/error.hpp"
#include "repzeta/groups/conjugacy.hpp"
#include "repzeta/groups/finite_group.hpp"
#include "repzeta/kirillov/lie_algebra.hpp"
#include "repzeta/kirillov/orbits.hpp"
#include "repzeta/rings/modular.hpp"
#include "repzeta/zetatool/zeta.hpp"

namespace repzeta::expcli {

using chartab::DimensionMultiset;
using groups::GroupSpec;
using groups::Scheme;
using nlohmann::json;
using rings::RingDescriptor;

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::VerifyEquivalence: return "verify-equivalence";
    case ExperimentKind::NTable: return "n-table";
    case ExperimentKind::PointCount: return "point-count";
    case ExperimentKind::UnipotentCrossCheck: return "unipotent-cross-check";
    case ExperimentKind::CounterexampleProbe: return "counterexample-probe";
  }
  return "?";
}

ExperimentKind experiment_kind_from_string(const std::string& s) {
  for (auto k : {ExperimentKind::VerifyEquivalence, ExperimentKind::NTable, ExperimentKind::PointCount,
                 ExperimentKind::UnipotentCrossCheck, ExperimentKind::CounterexampleProbe}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown experiment kind: " + s);
}

void ExperimentSpec::validate() const {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
  };
  need(n >= 1, "n must be at least 1");
  need(f >= 1, "f must be at least 1");
  need(k >= 1, "k must be at least 1");
  need(mode == "direct" || mode == "prop21" || mode == "both", "mode must be direct, prop21 or both");
  switch (kind) {
    case ExperimentKind::NTable:
      need(!primes.empty(), "n-table needs at least one prime");
      for (auto q : primes) need(rings::is_prime(q), "not a prime: " + std::to_string(q));
      break;
    case ExperimentKind::UnipotentCrossCheck:
      need(scheme == Scheme::U || scheme == Scheme::Heisenberg, "unipotent cross-check needs scheme u or heisenberg");
      need(rings::is_prime(p), "p must be prime");
      break;
    case ExperimentKind::CounterexampleProbe:
      break;
    default:
      need(rings::is_prime(p), "p must be prime");
  }
}

void to_json(json& j, const ExperimentSpec& s) {
  j = json{{"kind", to_string(s.kind)}};
  if (s.kind != ExperimentKind::CounterexampleProbe) {
    j["scheme"] = groups::to_string(s.scheme);
    j["n"] = s.n;
    j["f"] = s.f;
  }
  switch (s.kind) {
    case ExperimentKind::VerifyEquivalence:
      j["p"] = s.p;
      j["k"] = s.k;
      j["mode"] = s.mode;
      break;
    case ExperimentKind::PointCount:
      j["p"] = s.p;
      j["k"] = s.k;
      break;
    case ExperimentKind::UnipotentCrossCheck:
      j["p"] = s.p;
      break;
    case ExperimentKind::NTable:
      j["primes"] = s.primes;
      break;
    case ExperimentKind::CounterexampleProbe:
      break;
  }
  j["budgets"] = json{{"elements", s.budgets.elements},
                      {"sweep", s.budgets.sweep},
                      {"algebra", s.budgets.algebra},
                      {"max_classes", s.budgets.max_classes},
                      {"functionals", s.budgets.functionals}};
}

RunContext RunContext::from_environment() { return RunContext{ConjugacyCache::from_environment()}; }

namespace {

using Clock = std::chrono::steady_clock;

struct Analysis {
  GroupSpec spec;
  groups::GroupPtr group;
  std::optional<groups::ConjugacyData> data;
  std::optional<DimensionMultiset> dixon, zeta, orbit;
  std::vector<kirillov::CoadjointOrbit> orbits;
};

class Runner {
 public:
  Runner(const ExperimentSpec& spec, RunContext& ctx) : spec_(spec), ctx_(ctx) {
    spec.validate();
    report_.body = json{{"schema", 1},
                        {"version", std::string(kCodeVersion)},
                        {"experiment", to_string(spec.kind)},
                        {"spec", spec},
                        {"groups", json::array()},
                        {"checks", json::array()}};
    report_.run = json{{"timings", json::array()}, {"cache", json::object()}};
    report_.run["cache_dir"] = ctx.cache ? json(ctx.cache->dir().string()) : json(nullptr);
  }

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    json c{{"name", name}, {"ok", ok}};
    if (!detail.empty()) c["detail"] = detail;
    report_.body["checks"].push_back(std::move(c));
  }

  template <class F>
  auto timed(const std::string& stage, const std::string& label, F&& fn) {
    const auto start = Clock::now();
    auto result = fn();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    report_.run["timings"].push_back(json{{"stage", stage}, {"group", label}, {"ms", ms}});
    return result;
  }

  /// Enumeration and classes; degrees and orbits on request.
  Analysis analyse(const GroupSpec& spec, bool degrees, bool orbits = false) {
    Analysis a;
    a.spec = spec;
    const std::string label = spec.label();
    a.group = timed("enumerate", label, [&] { return groups::enumerate_group(spec, spec_.budgets.elements); });
    const std::uint64_t predicted = groups::predicted_order(spec);
    check(label + ": order matches the lift formula", a.group->order() == predicted,
          std::to_string(a.group->order()) + " vs " + std::to_string(predicted));

    CacheStatus status = CacheStatus::Disabled;
    std::string why;
    groups::ConjugacyOptions copt;
    copt.sweep_budget = spec_.budgets.sweep;
    a.data.emplace(timed("classes", label, [&] {
      return load_or_compute(ctx_.cache ? &*ctx_.cache : nullptr, a.group, copt, &status, &why);
    }));
    report_.run["cache"][label] = why.empty() ? to_string(status) : to_string(status) + ": " + why;

    if (degrees) {
      chartab::AlgebraOptions aopt;
      aopt.budget = spec_.budgets.algebra;
      aopt.max_classes = spec_.budgets.max_classes;
      const chartab::ClassAlgebra algebra(*a.data, aopt);
      a.dixon = timed("dixon", label, [&] { return chartab::dixon_degrees(algebra); });
      a.zeta = timed("zeta-inversion", label, [&] {
        auto dist = chartab::commutator_distribution(*a.data, spec_.budgets.sweep);
        return chartab::degrees_from_zeta(algebra, dist);
      });
      check(label + ": Dixon degrees = zeta inversion", *a.dixon == *a.zeta,
            a.dixon->to_string() + " vs " + a.zeta->to_string());
      structural(label, *a.dixon, *a.data);
    }
    if (orbits) {
      const auto lie = kirillov::lie_algebra_of(spec);
      a.orbits = timed("orbits", label,
                       [&] { return kirillov::coadjoint_orbits(lie, *a.group, spec_.budgets.functionals); });
      a.orbit = kirillov::orbit_method_degrees(a.orbits);
    }
    return a;
  }

  void structural(const std::string& label, const DimensionMultiset& m, const groups::ConjugacyData& data) {
    check(label + ": sum m_d d^2 = |G|", m.sum_of_squares() == data.order(),
          std::to_string(m.sum_of_squares()) + " vs " + std::to_string(data.order()));
    check(label + ": sum m_d = #classes", m.sum_of_multiplicities() == data.num_classes(),
          std::to_string(m.sum_of_multiplicities()) + " vs " + std::to_string(data.num_classes()));
    bool divides = true;
    for (const auto& [d, mult] : m.degrees) divides = divides && data.order() % d == 0;
    check(label + ": every degree divides |G|", divides);
  }

  json group_json(const Analysis& a) const {
    json g{{"label", a.spec.label()},
           {"spec", a.spec},
           {"order", a.group->order()},
           {"classes", a.data->num_classes()},
           {"exponent", a.data->exponent()},
           {"commuting_pairs", groups::commuting_pair_count(*a.data)}};
    if (a.dixon) {
      g["degrees"] = *a.dixon;
      g["degrees_text"] = a.dixon->to_string();
      g["N"] = a.dixon->distinct();
      g["zeta_inversion"] = *a.zeta;
    }
    if (a.orbit) {
      g["orbit_method"] = *a.orbit;
      std::map<std::uint64_t, std::uint64_t> sizes;
      for (const auto& o : a.orbits) sizes[o.size()]++;
      json s = json::array();
      for (const auto& [size, count] : sizes) s.push_back({size, count});
      g["orbit_sizes"] = s;
    }
    return g;
  }

  void add_group(const Analysis& a) { report_.body["groups"].push_back(group_json(a)); }

  /// Runs the requested modes; returns the verdict of the first one run.
  bool compare(const DimensionMultiset& z1, const DimensionMultiset& z2) {
    json verdicts = json::array();
    std::optional<zetatool::Verdict> direct, prop21;
    if (spec_.mode != "prop21") direct = zetatool::check_equivalence(z1, z2, zetatool::Mode::Direct);
    if (spec_.mode != "direct") prop21 = zetatool::check_equivalence(z1, z2, zetatool::Mode::Prop21);
    if (direct) verdicts.push_back(*direct);
    if (prop21) verdicts.push_back(*prop21);
    if (direct && prop21) check("prop21 verdict = direct verdict", direct->equal == prop21->equal);
    report_.body["verdicts"] = verdicts;
    const bool equal = direct ? direct->equal : prop21->equal;
    report_.body["equal"] = equal;
    return equal;
  }

  Report finish() {
    report_.body["passed"] = report_.passed();
    return std::move(report_);
  }

  const ExperimentSpec& spec() const { return spec_; }
  json& body() { return report_.body; }

 private:
  const ExperimentSpec& spec_;
  RunContext& ctx_;
  Report report_;
};

GroupSpec group_spec(Scheme scheme, std::uint32_t n, RingDescriptor ring) { return GroupSpec{scheme, n, std::move(ring)}; }

bool is_power_of(std::uint64_t x, std::uint64_t q, bool even_exponent) {
  unsigned e = 0;
  while (x > 1 && x % q == 0) {
    x /= q;
    ++e;
  }
  return x == 1 && (!even_exponent || e % 2 == 0);
}

}  // namespace

Report run_verify_equivalence(const ExperimentSpec& spec, RunContext& ctx) {
  Runner r(spec, ctx);
  const auto a = r.analyse(group_spec(spec.scheme, spec.n, RingDescriptor::truncated_poly(spec.p, spec.k, spec.f)), true);
  const auto b = r.analyse(group_spec(spec.scheme, spec.n, RingDescriptor::galois_ring(spec.p, spec.k, spec.f)), true);
  r.add_group(a);
  r.add_group(b);
  const bool equal = r.compare(*a.dixon, *b.dixon);
  r.check("degree multisets of the two sides are equal", equal, a.dixon->to_string() + " vs " + b.dixon->to_string());
  return r.finish();
}

Report run_n_table(const ExperimentSpec& spec, RunContext& ctx) {
  Runner r(spec, ctx);
  json rows = json::array();
  std::size_t max_n = 0;
  std::set<std::size_t> values;
  for (auto q : spec.primes) {
    const auto a = r.analyse(group_spec(spec.scheme, spec.n, RingDescriptor::field(q, spec.f)), true);
    r.add_group(a);
    const std::size_t n = a.dixon->distinct();
    max_n = std::max(max_n, n);
    values.insert(n);
    json degrees = json::array();
    for (const auto& [d, m] : a.dixon->degrees) degrees.push_back(d);
    rows.push_back(json{{"p", q}, {"label", a.spec.label()}, {"order", a.group->order()},
                        {"classes", a.data->num_classes()}, {"N", n}, {"dimirr", degrees}});
  }
  json at_max = json::array();
  for (const auto& row : rows) {
    if (row["N"] == max_n) at_max.push_back(row["p"]);
  }
  r.body()["table"] = rows;
  r.body()["max_N"] = max_n;
  r.body()["primes_at_max"] = at_max;
  r.body()["constant"] = values.size() == 1;
  return r.finish();
}

Report run_point_count(const ExperimentSpec& spec, RunContext& ctx) {
  Runner r(spec, ctx);
  const auto a = r.analyse(group_spec(spec.scheme, spec.n, RingDescriptor::truncated_poly(spec.p, spec.k, spec.f)), false);
  const auto b = r.analyse(group_spec(spec.scheme, spec.n, RingDescriptor::galois_ring(spec.p, spec.k, spec.f)), false);
  r.add_group(a);
  r.add_group(b);
  for (const auto* x : {&a, &b}) {
    r.check(x->spec.label() + ": commuting pairs = |G| * #classes",
            groups::commuting_pair_count(*x->data) == x->group->order() * x->data->num_classes());
  }
  r.body()["orders_equal"] = a.group->order() == b.group->order();
  r.body()["commuting_pairs_equal"] = groups::commuting_pair_count(*a.data) == groups::commuting_pair_count(*b.data);
  return r.finish();
}

Report run_unipotent_cross_check(const ExperimentSpec& spec, RunContext& ctx) {
  Runner r(spec, ctx);
  const auto a = r.analyse(group_spec(spec.scheme, spec.n, RingDescriptor::field(spec.p, spec.f)), true, true);
  r.add_group(a);
  const std::string label = a.spec.label();
  r.check(label + ": orbit method degrees = Dixon degrees", *a.orbit == *a.dixon,
          a.orbit->to_string() + " vs " + a.dixon->to_string());
  r.check(label + ": #coadjoint orbits = #classes", a.orbits.size() == a.data->num_classes(),
          std::to_string(a.orbits.size()) + " vs " + std::to_string(a.data->num_classes()));
  const std::uint64_t q = a.group->ring().size();
  bool powers = true, even = true;
  for (const auto& [d, m] : a.dixon->degrees) powers = powers && is_power_of(d, q, false);
  for (const auto& o : a.orbits) even = even && is_power_of(o.size(), q, true);
  r.check(label + ": degrees are powers of q", powers);
  r.check(label + ": orbit sizes are even powers of q", even);
  return r.finish();
}

Report run_counterexample_probe(const ExperimentSpec& spec, RunContext& ctx) {
  ExperimentSpec fixed = spec;
  fixed.kind = ExperimentKind::CounterexampleProbe;
  fixed.scheme = Scheme::SL;
  fixed.n = 2;
  fixed.p = 2;
  fixed.k = 4;
  fixed.f = 1;
  fixed.mode = "both";
  Runner r(fixed, ctx);
  const auto a = r.analyse(group_spec(Scheme::SL, 2, RingDescriptor::truncated_poly(2, 4)), true);
  const auto b = r.analyse(group_spec(Scheme::SL, 2, RingDescriptor::galois_ring(2, 4)), true);
  r.add_group(a);
  r.add_group(b);
  for (const auto* x : {&a, &b}) {
    r.check(x->spec.label() + ": order is 3072", x->group->order() == 3072, std::to_string(x->group->order()));
  }
  r.compare(*a.dixon, *b.dixon);
  r.body()["note"] = "equality verdict recorded as an observation";
  return r.finish();
}

Report run_experiment(const ExperimentSpec& spec, RunContext& ctx) {
  switch (spec.kind) {
    case ExperimentKind::VerifyEquivalence: return run_verify_equivalence(spec, ctx);
    case ExperimentKind::NTable: return run_n_table(spec, ctx);
    case ExperimentKind::PointCount: return run_point_count(spec, ctx);
    case ExperimentKind::UnipotentCrossCheck: return run_unipotent_cross_check(spec, ctx);
    case ExperimentKind::CounterexampleProbe: return run_counterexample_probe(spec, ctx);
  }
  throw std::invalid_argument("unknown experiment kind");
}

}  // namespace repzeta::expcli
