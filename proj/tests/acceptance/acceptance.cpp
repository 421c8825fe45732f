// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "repzeta/chartab/class_algebra.hpp"
#include "repzeta/chartab/dixon.hpp"
#include "repzeta/chartab/frobenius.hpp"
#include "repzeta/expcli/experiment.hpp"
#include "repzeta/groups/conjugacy.hpp"
#include "repzeta/groups/finite_group.hpp"
#include "repzeta/kirillov/cyclotomic.hpp"
#include "repzeta/kirillov/lie_algebra.hpp"
#include "repzeta/kirillov/orbits.hpp"
#include "repzeta/rings/field.hpp"
#include "repzeta/rings/galois_ring.hpp"
#include "repzeta/rings/witt.hpp"
#include "repzeta/zetatool/zeta.hpp"

using namespace repzeta;
using chartab::DimensionMultiset;
using expcli::ExperimentKind;
using expcli::ExperimentSpec;
using expcli::Report;
using groups::GroupSpec;
using groups::Scheme;
using nlohmann::json;
using rings::RingDescriptor;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

/// Every group whose degree multiset was computed during the run.
struct SuiteEntry {
  std::string label;
  GroupSpec spec;
  std::uint64_t order = 0;
  std::uint64_t classes = 0;
  DimensionMultiset dixon, zeta;
  std::optional<DimensionMultiset> orbit;
};

std::map<std::string, SuiteEntry> suite;

void collect(const Report& r) {
  for (const auto& g : r.body["groups"]) {
    if (!g.contains("degrees")) continue;
    SuiteEntry e;
    e.label = g["label"];
    e.spec = g["spec"];
    e.order = g["order"];
    e.classes = g["classes"];
    e.dixon = g["degrees"];
    e.zeta = g["zeta_inversion"];
    if (g.contains("orbit_method")) e.orbit = g["orbit_method"].get<DimensionMultiset>();
    suite[e.label] = e;
  }
}

Report run(const ExperimentSpec& s) {
  expcli::RunContext ctx;  // no cache: every number is computed here
  Report r = expcli::run_experiment(s, ctx);
  collect(r);
  require(r.passed(), "report checks failed: " + (r.failed_checks().empty() ? "" : r.failed_checks().front()));
  return r;
}

ExperimentSpec make(ExperimentKind kind, Scheme scheme, std::uint32_t n, std::uint32_t p, std::uint32_t k) {
  ExperimentSpec s;
  s.kind = kind;
  s.scheme = scheme;
  s.n = n;
  s.p = p;
  s.k = k;
  return s;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool power_of(std::uint64_t x, std::uint64_t q, bool even) {
  unsigned e = 0;
  while (x > 1 && x % q == 0) {
    x /= q;
    ++e;
  }
  return x == 1 && (!even || e % 2 == 0);
}

// ---- criteria ----

std::string equivalence_k2() {
  std::ostringstream info;
  const std::vector<std::pair<Scheme, std::uint32_t>> cases{
      {Scheme::SL, 3}, {Scheme::SL, 5}, {Scheme::SL, 7}, {Scheme::GL, 3}, {Scheme::GL, 5}};
  for (auto [scheme, p] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const Report r = run(make(ExperimentKind::VerifyEquivalence, scheme, 2, p, 2));
    const auto& v = r.body["verdicts"];
    require(v.size() == 2 && v[0]["mode"] == "direct" && v[1]["mode"] == "prop21", "both modes must run");
    const std::string label = r.body["groups"][1]["label"];
    require(v[0]["equal"] == true, label + ": direct verdict unequal");
    require(v[1]["equal"] == true, label + ": prop21 verdict unequal");
    require(r.body["groups"][0]["degrees"] == r.body["groups"][1]["degrees"], label + ": multisets differ");
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(sec <= 600, label + ": exceeded 10 minutes");
    info << "  " << label << " " << r.body["groups"][1]["degrees_text"].get<std::string>() << "\n";
  }
  return info.str();
}

std::uint64_t brute_commuting_pairs(const groups::FiniteGroup& g) {
  const auto& ops = g.ops();
  std::vector<groups::Elem> xy(ops.entries()), yx(ops.entries());
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      ops.multiply(g.entries(x), g.entries(y), xy.data());
      ops.multiply(g.entries(y), g.entries(x), yx.data());
      count += xy == yx;
    }
  }
  return count;
}

std::string point_counts() {
  std::ostringstream info;
  for (std::uint32_t p : {3u, 5u}) {
    for (std::uint32_t k : {2u, 3u}) {
      const Report r = run(make(ExperimentKind::PointCount, Scheme::SL, 2, p, k));
      const auto& a = r.body["groups"][0];
      const auto& b = r.body["groups"][1];
      const std::uint64_t expected = std::uint64_t{p} * (p * p - 1) * ipow(p, 3 * (k - 1));
      require(a["order"] == expected && b["order"] == expected, a["label"].get<std::string>() + ": order");
      require(r.body["orders_equal"] == true, "orders differ");
      require(r.body["commuting_pairs_equal"] == true, "commuting pairs differ");
      if (expected <= 20000) {
        for (const auto* g : {&a, &b}) {
          const auto group = groups::enumerate_group(g->at("spec").get<GroupSpec>());
          require(brute_commuting_pairs(*group) == g->at("commuting_pairs").get<std::uint64_t>(),
                  g->at("label").get<std::string>() + ": brute-force commuting pairs differ");
        }
      }
      info << "  p=" << p << " k=" << k << "  |G| = " << a["order"] << "  commuting pairs = " << a["commuting_pairs"]
           << "\n";
    }
  }
  return info.str();
}

void small_groups() {
  const std::vector<GroupSpec> specs{
      {Scheme::SL, 2, RingDescriptor::field(2)},          {Scheme::GL, 2, RingDescriptor::field(2)},
      {Scheme::SL, 2, RingDescriptor::field(3)},          {Scheme::GL, 2, RingDescriptor::field(3)},
      {Scheme::SL, 2, RingDescriptor::field(5)},          {Scheme::SL, 2, RingDescriptor::truncated_poly(2, 2)},
      {Scheme::SL, 2, RingDescriptor::galois_ring(2, 2)}, {Scheme::GL, 1, RingDescriptor::galois_ring(3, 3)},
      {Scheme::Heisenberg, 3, RingDescriptor::field(3)},  {Scheme::Diagonal, 2, RingDescriptor::field(7)},
      {Scheme::GL, 2, RingDescriptor::truncated_poly(2, 2)}, {Scheme::GL, 2, RingDescriptor::galois_ring(2, 2)}};
  for (const auto& spec : specs) {
    const auto data = groups::conjugacy_classes(groups::enumerate_group(spec));
    const chartab::ClassAlgebra algebra(data);
    SuiteEntry e;
    e.label = spec.label();
    e.spec = spec;
    e.order = data.order();
    e.classes = data.num_classes();
    e.dixon = chartab::dixon_degrees(algebra);
    e.zeta = chartab::degrees_from_zeta(algebra, chartab::commutator_distribution(data));
    suite[e.label] = e;
  }
}

std::string frobenius_identity() {
  std::ostringstream info;
  std::size_t checked = 0;
  for (const auto& [label, e] : suite) {
    if (e.order > 200) continue;
    const auto group = groups::enumerate_group(e.spec);
    const auto& g = *group;
    const std::size_t n = g.order();
    // histogram of [x, y] over all pairs, then N_2 = sum_g h(g) h(g^-1)
    std::vector<std::uint64_t> h(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xi = *g.inverse(x);
      for (std::size_t y = 0; y < n; ++y) {
        h[g.product(g.product(xi, *g.inverse(y)), g.product(x, y))]++;
      }
    }
    mpz_class brute = 0;
    for (std::size_t z = 0; z < n; ++z) brute += mpz_class(static_cast<unsigned long>(h[z])) * h[*g.inverse(z)];

    const auto data = groups::conjugacy_classes(group);
    const chartab::ClassAlgebra algebra(data);
    const mpq_class z2 = chartab::frobenius_zeta(algebra, chartab::commutator_distribution(data), 1);
    const mpz_class nn = static_cast<unsigned long>(n);
    const mpq_class predicted = z2 * nn * nn * nn;
    require(predicted == mpq_class(brute), label + ": " + brute.get_str() + " vs " + predicted.get_str());
    info << "  " << label << "  N_2 = " << brute.get_str() << "\n";
    ++checked;
  }
  require(checked >= 10, "too few groups of order <= 200 in the suite");
  return info.str();
}

std::string method_triangle() {
  std::ostringstream info;
  for (const auto& [label, e] : suite) {
    require(e.dixon == e.zeta, label + ": Dixon " + e.dixon.to_string() + " vs zeta inversion " + e.zeta.to_string());
  }
  std::size_t orbit_groups = 0;
  for (auto n : {3u, 4u}) {
    for (auto p : {3u, 5u, 7u}) {
      const std::string label = GroupSpec{Scheme::U, n, RingDescriptor::field(p)}.label();
      require(suite.count(label) && suite[label].orbit, label + ": orbit method not run");
      require(*suite[label].orbit == suite[label].dixon, label + ": orbit method differs");
      ++orbit_groups;
    }
  }
  info << "  " << suite.size() << " groups, " << orbit_groups << " with orbit method\n";
  return info.str();
}

std::string structural() {
  std::size_t multisets = 0;
  for (const auto& [label, e] : suite) {
    std::vector<const DimensionMultiset*> all{&e.dixon, &e.zeta};
    if (e.orbit) all.push_back(&*e.orbit);
    for (const auto* m : all) {
      std::uint64_t sq = 0, cnt = 0;
      for (const auto& [d, mult] : m->degrees) {
        sq += mult * d * d;
        cnt += mult;
        require(e.order % d == 0, label + ": degree " + std::to_string(d) + " does not divide |G|");
      }
      require(sq == e.order, label + ": sum m_d d^2 = " + std::to_string(sq));
      require(cnt == e.classes, label + ": sum m_d = " + std::to_string(cnt));
      ++multisets;
    }
  }
  return "  " + std::to_string(multisets) + " multisets\n";
}

std::string unipotent_runs() {
  for (auto n : {3u, 4u}) {
    for (auto p : {3u, 5u, 7u}) run(make(ExperimentKind::UnipotentCrossCheck, Scheme::U, n, p, 1));
  }
  return {};
}

std::string kirillov_exactness() {
  using kirillov::CyclotomicValue;
  std::ostringstream info;
  for (std::uint32_t p : {3u, 5u}) {
    const GroupSpec spec{Scheme::U, 3, RingDescriptor::field(p)};
    const auto group = groups::enumerate_group(spec);
    const auto data = groups::conjugacy_classes(group);
    const auto alg = kirillov::lie_algebra_of(spec);
    const auto orbits = kirillov::coadjoint_orbits(alg, *group);
    require(orbits.size() == data.num_classes(), spec.label() + ": #orbits != #classes");
    const kirillov::AdditiveCharacter phi(alg.field_ptr());
    std::vector<std::vector<CyclotomicValue>> table;
    for (const auto& o : orbits) {
      std::vector<CyclotomicValue> row;
      for (std::size_t x = 0; x < group->order(); ++x) {
        row.push_back(kirillov::kirillov_character(alg, o, group->element(x), phi));
      }
      table.push_back(std::move(row));
    }
    const mpq_class order(static_cast<unsigned long>(group->order()));
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < orbits.size(); ++a) {
      for (std::size_t b = 0; b < orbits.size(); ++b) {
        CyclotomicValue s(p);
        for (std::size_t x = 0; x < group->order(); ++x) s = s + table[a][x] * table[b][x].conj();
        require(s == CyclotomicValue::rational(p, a == b ? order : mpq_class(0)),
                spec.label() + ": rows " + std::to_string(a) + ", " + std::to_string(b) + " give " + s.to_string());
        ++pairs;
      }
    }
    info << "  " << spec.label() << "  " << orbits.size() << " orbits = classes, " << pairs << " pairs\n";
  }
  return info.str();
}

std::string unipotent_shape() {
  const std::string label = GroupSpec{Scheme::U, 4, RingDescriptor::field(3)}.label();
  ExperimentSpec s = make(ExperimentKind::UnipotentCrossCheck, Scheme::U, 4, 3, 1);
  const Report r = run(s);
  const auto& g = r.body["groups"][0];
  for (const auto& dm : g["degrees"]["degrees"]) {
    require(power_of(dm[0].get<std::uint64_t>(), 3, false), label + ": degree " + dm[0].dump());
  }
  for (const auto& sc : g["orbit_sizes"]) {
    require(power_of(sc[0].get<std::uint64_t>(), 3, true), label + ": orbit size " + sc[0].dump());
  }
  return "  degrees " + g["degrees_text"].get<std::string>() + ", orbit sizes " + g["orbit_sizes"].dump() + "\n";
}

std::string prop21_property() {
  using zetatool::Mode;
  auto ms = [](std::map<std::uint64_t, std::uint64_t> d) {
    DimensionMultiset m;
    m.degrees = std::move(d);
    m.classes = m.sum_of_multiplicities();
    m.order = m.sum_of_squares();
    return m;
  };
  std::mt19937_64 rng(0x5eed2101);
  auto random_multiset = [&] {
    std::map<std::uint64_t, std::uint64_t> d;
    const std::size_t n = 1 + rng() % 3;
    while (d.size() < n) d[1 + rng() % 64] = 1 + rng() % 6;
    return ms(d);
  };
  // {a:x, b:y} -> {c:x+y} with x a^2 + y b^2 = (x+y) c^2 keeps order and class count
  struct Move { std::uint64_t a, x, b, y, c; };
  std::vector<Move> moves;
  for (std::uint64_t a = 1; a <= 64; ++a)
    for (std::uint64_t c = a + 1; c <= 64; ++c)
      for (std::uint64_t b = c + 1; b <= 64; ++b)
        for (std::uint64_t x = 1; x <= 6; ++x)
          for (std::uint64_t y = 1; y <= 6; ++y)
            if (x * a * a + y * b * b == (x + y) * c * c) moves.push_back({a, x, b, y, c});

  const auto start = std::chrono::steady_clock::now();
  std::size_t equal = 0, unequal = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    DimensionMultiset a = random_multiset(), b;
    switch (trial % 3) {
      case 0: b = a; break;
      case 1: b = random_multiset(); break;
      default: {
        const Move& mv = moves[rng() % moves.size()];
        std::map<std::uint64_t, std::uint64_t> lhs{{mv.a, mv.x}, {mv.b, mv.y}}, rhs{{mv.c, mv.x + mv.y}};
        if (rng() % 2) {
          const std::uint64_t extra = 1 + rng() % 64, mult = 1 + rng() % 6;
          lhs[extra] += mult;
          rhs[extra] += mult;
        }
        a = ms(lhs);
        b = ms(rhs);
        if (rng() % 2) std::swap(a, b);
      }
    }
    require(a.distinct() <= 3 && b.distinct() <= 3, "generator produced more than 3 distinct degrees");
    const bool d = zetatool::check_equivalence(a, b, Mode::Direct).equal;
    const bool p = zetatool::check_equivalence(a, b, Mode::Prop21).equal;
    require(d == p, "trial " + std::to_string(trial) + ": " + a.to_string() + " vs " + b.to_string());
    (d ? equal : unequal)++;
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(sec <= 60, "property suite took longer than a minute");
  return "  10000 trials, " + std::to_string(equal) + " equal, " + std::to_string(unequal) + " unequal\n";
}

std::string witt_isomorphism() {
  std::ostringstream info;
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    const auto w = rings::make_witt_ring(rings::make_field(p), k);
    const auto z = rings::build_galois_ring(p, k, 1);
    const std::uint64_t n = z->order();
    std::vector<std::uint64_t> image(n);
    std::vector<bool> hit(n, false);
    for (std::uint64_t i = 0; i < n; ++i) {
      image[i] = rings::witt_to_padic(rings::WittVector::from_index(w, i), z).index();
      hit[image[i]] = true;
    }
    require(std::count(hit.begin(), hit.end(), true) == static_cast<long>(n), "map is not bijective");
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto a = rings::WittVector::from_index(w, i);
      for (std::uint64_t j = 0; j < n; ++j) {
        const auto b = rings::WittVector::from_index(w, j);
        require(image[(a + b).index()] == (image[i] + image[j]) % n, "addition not preserved");
        require(image[(a * b).index()] == (image[i] * image[j]) % n, "multiplication not preserved");
      }
    }
    info << "  (" << p << "," << k << ") " << n * n << " pairs\n";
  }
  return info.str();
}

std::string n_boundedness() {
  auto sl = make(ExperimentKind::NTable, Scheme::SL, 2, 0, 1);
  sl.primes = {5, 7, 11};
  const Report a = run(sl);
  std::set<std::uint64_t> values;
  std::ostringstream info;
  info << "  SL_2:";
  for (const auto& row : a.body["table"]) {
    values.insert(row["N"].get<std::uint64_t>());
    info << " N(F_" << row["p"] << ")=" << row["N"];
  }
  require(values.size() == 1, "N(SL_2(F_p)) not constant");

  auto u = make(ExperimentKind::NTable, Scheme::U, 3, 0, 1);
  u.primes = {3, 5, 7, 11};
  const Report b = run(u);
  info << "\n  U_3:";
  for (const auto& row : b.body["table"]) {
    require(row["N"] == 2, "N(U_3(F_" + row["p"].dump() + ")) = " + row["N"].dump());
    info << " N(F_" << row["p"] << ")=" << row["N"];
  }
  return info.str() + "\n";
}

std::string q2_probe() {
  expcli::RunContext ctx;
  const Report r = expcli::run_counterexample_probe({}, ctx);
  collect(r);
  require(r.passed(), "probe checks failed");
  const auto& g = r.body["groups"];
  require(g[0]["order"] == 3072 && g[1]["order"] == 3072, "orders differ from 3072");
  std::ostringstream info;
  for (const auto& x : g) info << "  " << x["label"].get<std::string>() << " " << x["degrees_text"].get<std::string>() << "\n";
  info << "  verdict: " << (r.body["equal"].get<bool>() ? "equal" : "not equal") << " (direct and prop21 agree)\n";
  return info.str();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<std::string()> fn;
  };
  // execution order: everything that fills the suite first, then the suite-wide checks
  const std::vector<Criterion> criteria{
      {1, "equivalence at k=2 (SL_2 p=3,5,7; GL_2 p=3,5), direct and prop21", equivalence_k2},
      {2, "point counts and commuting pairs, SL_2 p=3,5 k=2,3", point_counts},
      {6, "Kirillov orbit/class bijection and row orthogonality, U_3(F_3), U_3(F_5)", kirillov_exactness},
      {7, "U_4(F_3): degrees powers of 3, orbit sizes even powers of 3", unipotent_shape},
      {8, "10^4 random pairs: prop21 verdict = direct verdict", prop21_property},
      {9, "Witt vectors to Z/p^k preserve + and x", witt_isomorphism},
      {10, "N(SL_2(F_p)) constant for p=5,7,11; N(U_3(F_p)) = 2 for p=3,5,7,11", n_boundedness},
      {11, "q=2 probe SL_2 p=2 k=4 completes", q2_probe},
      {0, "", [] { unipotent_runs(); small_groups(); return std::string(); }},
      {3, "brute-force [x1,y1][x2,y2]=1 count = |G|^3 zeta(2) for |G| <= 200", frobenius_identity},
      {4, "Dixon = zeta inversion on the suite; = orbit method on U_3, U_4 over F_3, F_5, F_7", method_triangle},
      {5, "sum m_d d^2 = |G|, sum m_d = #classes, d | |G| on every multiset", structural},
  };

  std::map<int, std::pair<bool, std::string>> results;
  for (const auto& c : criteria) {
    bool ok = true;
    std::string text;
    const auto start = std::chrono::steady_clock::now();
    try {
      text = c.fn();
    } catch (const Failure& f) {
      ok = false;
      text = "  failure: " + f.what + "\n";
    } catch (const std::exception& e) {
      ok = false;
      text = "  error: " + std::string(e.what()) + "\n";
    }
    if (c.id == 0) {
      if (!ok) std::cout << text;
      continue;
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
    line.precision(1);
    line << std::fixed << " [" << sec << " s]\n" << text;
    results[c.id] = {ok, line.str()};
    std::cerr << "done criterion " << c.id << "\n";
  }
  bool all = true;
  for (const auto& [id, r] : results) {
    all = all && r.first;
    std::cout << r.second;
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
