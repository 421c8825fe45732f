#include "repzeta/groups/conjugacy.hpp"

#include <random>
#include <string>

#include "repzeta/error.hpp"
#include "repzeta/rings/modular.hpp"

namespace repzeta::groups {

ConjugacyData::ConjugacyData(GroupPtr group, std::vector<std::uint32_t> class_of_element,
                             std::vector<ConjugacyClass> classes, std::vector<std::size_t> generators)
    : group_(std::move(group)),
      class_of_element_(std::move(class_of_element)),
      classes_(std::move(classes)),
      generators_(std::move(generators)) {
  for (const auto& c : classes_) exponent_ = rings::lcm_u64(exponent_, c.element_order);
}

void ConjugacyData::check_invariants() const {
  const std::uint64_t n = order();
  std::uint64_t total = 0;
  std::vector<std::uint64_t> counted(classes_.size(), 0);
  for (auto c : class_of_element_) counted.at(c)++;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& k = classes_[c];
    total += k.size;
    if (counted[c] != k.size) throw MathError("class size does not match element assignment");
    if (k.size * k.centralizer_order != n) throw MathError("class size times centralizer order differs from |G|");
    if (classes_.at(k.inverse_class).inverse_class != c) throw MathError("inverse-class map is not an involution");
    if (class_of_element_[k.representative] != c) throw MathError("representative lies in another class");
  }
  if (total != n) throw MathError("class sizes do not sum to |G|");
  if (class_of_element_[group_->identity()] != 0 || classes_[0].size != 1) {
    throw MathError("identity class must be class 0 of size 1");
  }
}

namespace {

void check_closure_by_sampling(const FiniteGroup& g, std::size_t samples) {
  std::mt19937_64 rng(0xc105ULL);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::array<Elem, kMaxDim * kMaxDim> out{};
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    g.ops().multiply(g.entries(a), g.entries(b), out.data());
    if (!g.find(out.data())) throw MathError("element list is not closed under multiplication");
    if (!g.inverse(a)) throw MathError("element list is not closed under inversion");
  }
}

}  // namespace

ConjugacyData conjugacy_classes(const GroupPtr& group, const ConjugacyOptions& options) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  check_closure_by_sampling(g, std::min<std::size_t>(options.closure_samples, n * n));
  std::vector<std::size_t> gens = find_generators(g);
  // Every element is reached once and conjugated by each generator.
  const std::uint64_t cost = static_cast<std::uint64_t>(n) * std::max<std::size_t>(gens.size(), 1);
  if (cost > options.sweep_budget) {
    throw BudgetExceeded(g.spec().label() + ": conjugacy sweep needs " + std::to_string(cost) +
                         " group operations, budget " + std::to_string(options.sweep_budget));
  }
  std::vector<std::pair<std::size_t, std::size_t>> conjugators;  // (s, s^-1)
  for (std::size_t s : gens) conjugators.emplace_back(s, *g.inverse(s));

  constexpr std::uint32_t kUnassigned = UINT32_MAX;
  std::vector<std::uint32_t> class_of(n, kUnassigned);
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> queue;
  queue.reserve(n);
  std::array<Elem, kMaxDim * kMaxDim> tmp{}, conj{};

  auto sweep_from = [&](std::size_t seed) {
    const auto id = static_cast<std::uint32_t>(classes.size());
    queue.clear();
    queue.push_back(seed);
    class_of[seed] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem* x = g.entries(queue[head]);
      for (const auto& [s, s_inv] : conjugators) {
        g.ops().multiply(g.entries(s), x, tmp.data());
        g.ops().multiply(tmp.data(), g.entries(s_inv), conj.data());
        const auto y = g.find(conj.data());
        if (!y) throw MathError("conjugate left the element list");
        if (class_of[*y] == kUnassigned) {
          class_of[*y] = id;
          queue.push_back(*y);
        }
      }
    }
    ConjugacyClass c;
    c.representative = seed;
    c.size = queue.size();
    if (n % c.size != 0) throw MathError("class size does not divide |G|");
    c.centralizer_order = n / c.size;
    classes.push_back(c);
  };

  sweep_from(g.identity());
  for (std::size_t i = 0; i < n; ++i)
    if (class_of[i] == kUnassigned) sweep_from(i);

  for (auto& c : classes) {
    c.inverse_class = class_of[*g.inverse(c.representative)];
    std::uint64_t order = 1;
    std::size_t power = c.representative;
    while (power != g.identity()) {
      power = g.product(power, c.representative);
      ++order;
    }
    c.element_order = order;
  }
  ConjugacyData data(group, std::move(class_of), std::move(classes), std::move(gens));
  data.check_invariants();
  return data;
}

std::uint64_t commuting_pair_count(const ConjugacyData& data) {
  std::uint64_t total = 0;
  for (auto c : data.class_of_element()) total += data.cls(c).centralizer_order;
  return total;
}

}  // namespace repzeta::groups
