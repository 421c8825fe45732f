#include "repzeta/groups/finite_group.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "repzeta/error.hpp"
#include "repzeta/rings/modular.hpp"

namespace repzeta::groups {

namespace {

inline std::uint64_t mix(std::uint64_t code, unsigned shift) { return (code * 0x9E3779B97F4A7C15ULL) >> shift; }

}  // namespace

CodeIndex::CodeIndex(const MatrixOps& ops, std::span<const Elem> entries, std::span<const std::uint64_t> sorted_codes)
    : codes_(sorted_codes), ring_size_(ops.ring().size()), positions_(ops.entries()) {
  const std::size_t count = sorted_codes.size();
  digit_.assign(std::size_t{positions_} * ring_size_, -1);
  std::vector<std::vector<bool>> seen(positions_, std::vector<bool>(ring_size_, false));
  for (std::size_t i = 0; i < count; ++i)
    for (unsigned p = 0; p < positions_; ++p) seen[p][entries[i * positions_ + p]] = true;
  radix_.assign(positions_, 1);
  unsigned __int128 space = 1;
  for (unsigned p = 0; p < positions_; ++p) {
    std::int32_t next = 0;
    Elem last = 0;
    for (std::uint32_t v = 0; v < ring_size_; ++v)
      if (seen[p][v]) {
        digit_[std::size_t{p} * ring_size_ + v] = next++;
        last = static_cast<Elem>(v);
      }
    radix_[p] = static_cast<std::uint64_t>(next);
    if (next > 1) varying_.push_back(p);
    else if (next == 1) fixed_.emplace_back(p, last);
    if (space <= kMaxDense) space *= static_cast<unsigned>(next);
  }
  if (space <= kMaxDense) {
    table_.assign(static_cast<std::size_t>(space), UINT32_MAX);
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t key = 0;
      for (unsigned p : varying_)
        key = key * radix_[p] + static_cast<std::uint64_t>(digit_[std::size_t{p} * ring_size_ + entries[i * positions_ + p]]);
      table_[key] = static_cast<std::uint32_t>(i);
    }
    return;
  }
  unsigned bits = 1;
  while ((std::size_t{1} << bits) < 2 * count) ++bits;
  hash_shift_ = 64 - bits;
  hash_.assign(std::size_t{1} << bits, UINT32_MAX);
  const std::size_t mask = hash_.size() - 1;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t slot = mix(sorted_codes[i], hash_shift_);
    while (hash_[slot] != UINT32_MAX) slot = (slot + 1) & mask;
    hash_[slot] = static_cast<std::uint32_t>(i);
  }
}

std::optional<std::uint32_t> CodeIndex::find(const MatrixOps& ops, const Elem* m) const {
  if (!table_.empty()) {
    for (const auto& [p, v] : fixed_)
      if (m[p] != v) return std::nullopt;
    std::uint64_t key = 0;
    for (unsigned p : varying_) {
      const std::int32_t d = digit_[std::size_t{p} * ring_size_ + m[p]];
      if (d < 0) return std::nullopt;
      key = key * radix_[p] + static_cast<std::uint64_t>(d);
    }
    const std::uint32_t idx = table_[key];
    if (idx == UINT32_MAX) return std::nullopt;
    return idx;
  }
  if (hash_.empty()) return std::nullopt;
  const std::uint64_t code = ops.encode(m);
  const std::size_t mask = hash_.size() - 1;
  for (std::size_t slot = mix(code, hash_shift_);; slot = (slot + 1) & mask) {
    const std::uint32_t idx = hash_[slot];
    if (idx == UINT32_MAX) return std::nullopt;
    if (codes_[idx] == code) return idx;
  }
}

FiniteGroup::FiniteGroup(GroupSpec spec, rings::RingPtr ring, unsigned n)
    : spec_(std::move(spec)), ops_(std::move(ring), n) {}

void FiniteGroup::finish(std::vector<std::uint64_t> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  if (codes.size() >= UINT32_MAX) throw BudgetExceeded("group too large for 32-bit element indices");
  codes_ = std::move(codes);
  const unsigned e = ops_.entries();
  entries_.resize(codes_.size() * e);
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    const Matrix m = ops_.decode(codes_[i]);
    std::copy(m.e.begin(), m.e.begin() + e, entries_.begin() + static_cast<std::ptrdiff_t>(i * e));
  }
  index_ = CodeIndex(ops_, entries_, codes_);
  const auto id = find(ops_.identity());
  if (!id) throw MathError("element list does not contain the identity");
  identity_ = *id;
  inverse_.assign(codes_.size(), UINT32_MAX);
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (inverse_[i] != UINT32_MAX) continue;
    const auto inv = ops_.inverse(element(i));
    if (!inv) throw std::invalid_argument("element list contains a non-invertible matrix");
    if (const auto j = find(*inv)) {
      inverse_[i] = static_cast<std::uint32_t>(*j);
      inverse_[*j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_elements(GroupSpec spec, rings::RingPtr ring,
                                                              std::vector<Matrix> elements) {
  const unsigned n = spec.matrix_size();
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(std::move(spec), std::move(ring), n));
  std::vector<std::uint64_t> codes;
  codes.reserve(elements.size());
  for (const auto& m : elements) codes.push_back(g->ops_.encode(m));
  g->finish(std::move(codes));
  return g;
}

Matrix FiniteGroup::element(std::size_t i) const {
  Matrix m{};
  const Elem* src = entries(i);
  std::copy(src, src + ops_.entries(), m.e.begin());
  return m;
}

std::optional<std::size_t> FiniteGroup::find(const Elem* m) const {
  if (auto idx = index_.find(ops_, m)) return *idx;
  return std::nullopt;
}

std::size_t FiniteGroup::index_of(const Matrix& m) const {
  if (auto idx = find(m)) return *idx;
  throw std::out_of_range("matrix is not an element of " + spec_.label() + ": " + ops_.to_string(m));
}

std::optional<std::size_t> FiniteGroup::inverse(std::size_t i) const {
  if (inverse_[i] == UINT32_MAX) return std::nullopt;
  return inverse_[i];
}

std::size_t FiniteGroup::product(std::size_t i, std::size_t j) const {
  std::array<Elem, kMaxDim * kMaxDim> out{};
  ops_.multiply(entries(i), entries(j), out.data());
  if (auto idx = find(out.data())) return *idx;
  throw MathError("product left the element list of " + spec_.label());
}

namespace {

/// Calls `visit` on every n*n matrix whose entries are drawn from `values[position]`.
template <typename Visit>
void for_each_matrix(unsigned positions, const std::vector<std::vector<Elem>>& values, Visit&& visit) {
  std::vector<std::size_t> digit(positions, 0);
  Matrix m{};
  for (unsigned p = 0; p < positions; ++p) {
    if (values[p].empty()) return;
    m.e[p] = values[p][0];
  }
  for (;;) {
    visit(m);
    int p = static_cast<int>(positions) - 1;
    for (; p >= 0; --p) {
      if (++digit[p] < values[p].size()) {
        m.e[p] = values[p][digit[p]];
        break;
      }
      digit[p] = 0;
      m.e[p] = values[p][0];
    }
    if (p < 0) return;
  }
}

}  // namespace

GroupPtr enumerate_group(const GroupSpec& spec, std::uint64_t budget) {
  if (spec.n == 0) throw std::invalid_argument("group spec: n must be positive");
  if (spec.scheme == Scheme::Heisenberg && spec.n != 3) throw std::invalid_argument("Heisenberg group requires n = 3");
  if (spec.matrix_size() > kMaxDim) throw std::invalid_argument(spec.label() + ": matrix size exceeds " + std::to_string(kMaxDim));
  const std::uint64_t predicted = predicted_order(spec);
  if (predicted > budget) {
    throw BudgetExceeded(spec.label() + ": predicted order " + std::to_string(predicted) + " exceeds budget " +
                         std::to_string(budget));
  }
  auto ring = rings::FiniteRing::build(spec.ring);
  const unsigned n = spec.matrix_size();
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(spec, ring, n));
  const MatrixOps& ops = g->ops_;
  const unsigned positions = n * n;
  const auto& r = *ring;

  std::vector<Elem> all(r.size());
  for (std::uint32_t a = 0; a < r.size(); ++a) all[a] = static_cast<Elem>(a);
  std::vector<Elem> units;
  for (Elem a : all)
    if (r.is_unit(a)) units.push_back(a);

  std::vector<std::uint64_t> codes;
  codes.reserve(predicted);

  switch (spec.scheme) {
    case Scheme::GL:
    case Scheme::SL: {
      const bool special = spec.scheme == Scheme::SL;
      std::vector<Elem> sections(r.residue_size());
      for (std::uint32_t res = 0; res < r.residue_size(); ++res) sections[res] = r.section(res);
      std::vector<std::vector<Elem>> level_one(positions, sections);
      std::vector<Matrix> residue_points;
      const std::uint32_t one_residue = r.residue(r.one());
      for_each_matrix(positions, level_one, [&](const Matrix& m) {
        const Elem d = ops.det(m);
        if (special ? r.residue(d) == one_residue : r.is_unit(d)) residue_points.push_back(m);
      });
      const std::vector<Elem> ideal(r.ideal().begin(), r.ideal().end());
      std::vector<std::vector<Elem>> offsets(positions, ideal);
      for (const Matrix& base : residue_points) {
        for_each_matrix(positions, offsets, [&](const Matrix& off) {
          Matrix lift{};
          for (unsigned p = 0; p < positions; ++p) lift.e[p] = r.add(base.e[p], off.e[p]);
          if (!special || ops.det(lift) == r.one()) codes.push_back(ops.encode(lift));
        });
      }
      break;
    }
    case Scheme::U:
    case Scheme::Heisenberg: {
      std::vector<std::vector<Elem>> values(positions);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
          values[i * n + j] = i < j ? all : std::vector<Elem>{i == j ? r.one() : r.zero()};
      for_each_matrix(positions, values, [&](const Matrix& m) { codes.push_back(ops.encode(m)); });
      break;
    }
    case Scheme::Diagonal: {
      std::vector<std::vector<Elem>> values(positions);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) values[i * n + j] = i == j ? units : std::vector<Elem>{r.zero()};
      for_each_matrix(positions, values, [&](const Matrix& m) { codes.push_back(ops.encode(m)); });
      break;
    }
  }
  const std::size_t produced = codes.size();
  g->finish(std::move(codes));
  if (g->order() != produced) throw MathError(spec.label() + ": enumeration produced duplicates");
  if (g->order() != predicted) {
    throw MathError(spec.label() + ": enumerated " + std::to_string(g->order()) + " elements, predicted " +
                    std::to_string(predicted));
  }
  return g;
}

std::size_t generated_order(const FiniteGroup& g, std::span<const std::size_t> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> queue{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t s : gens) {
      const std::size_t next = g.product(queue[head], s);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return queue.size();
}

std::vector<std::size_t> find_generators(const FiniteGroup& g) {
  std::vector<std::size_t> gens;
  if (g.order() == 1) return gens;
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::vector<bool> in_subgroup(g.order(), false);
  in_subgroup[g.identity()] = true;
  for (;;) {
    std::size_t start = pick(rng);
    std::size_t candidate = start;
    while (in_subgroup[candidate]) candidate = (candidate + 1) % g.order();
    gens.push_back(candidate);
    // Recompute the closure of the enlarged generating set.
    std::fill(in_subgroup.begin(), in_subgroup.end(), false);
    std::vector<std::size_t> queue{g.identity()};
    in_subgroup[g.identity()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t s : gens) {
        const std::size_t next = g.product(queue[head], s);
        if (!in_subgroup[next]) {
          in_subgroup[next] = true;
          queue.push_back(next);
        }
      }
    }
    if (queue.size() == g.order()) return gens;
  }
}

}  // namespace repzeta::groups
