#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "repzeta/groups/group_spec.hpp"
#include "repzeta/groups/matrix.hpp"

namespace repzeta::groups {

inline constexpr std::uint64_t kDefaultElementBudget = 5'000'000;

/// Maps matrices to element indices. Positions are re-encoded over the values that
/// actually occur there; when that compressed space is small enough the lookup is a
/// dense table, otherwise an open-addressing hash of the codes.
class CodeIndex {
 public:
  static constexpr std::uint64_t kMaxDense = std::uint64_t{1} << 26;

  CodeIndex() = default;
  CodeIndex(const MatrixOps& ops, std::span<const Elem> entries, std::span<const std::uint64_t> sorted_codes);

  std::optional<std::uint32_t> find(const MatrixOps& ops, const Elem* m) const;
  bool dense() const { return !table_.empty(); }

 private:
  std::span<const std::uint64_t> codes_;
  std::vector<std::int32_t> digit_;  // position * |R| + value -> local digit, or -1
  std::vector<std::uint64_t> radix_;
  std::vector<std::uint32_t> table_;
  std::vector<unsigned> varying_;  // positions with more than one value
  std::vector<std::pair<unsigned, Elem>> fixed_;
  std::vector<std::uint32_t> hash_;
  unsigned hash_shift_ = 64;
  std::uint32_t ring_size_ = 0;
  unsigned positions_ = 0;
};

/// A finite matrix group held as the sorted list of its elements.
/// Element i is the one with the i-th smallest canonical encoding.
class FiniteGroup {
 public:
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  /// Wraps an arbitrary list of invertible matrices (deduplicated and sorted).
  /// No closure check happens here; conjugacy_classes verifies closure by sampling.
  static std::shared_ptr<const FiniteGroup> from_elements(GroupSpec spec, rings::RingPtr ring,
                                                          std::vector<Matrix> elements);

  const GroupSpec& spec() const { return spec_; }
  const MatrixOps& ops() const { return ops_; }
  const rings::FiniteRing& ring() const { return ops_.ring(); }
  unsigned n() const { return ops_.n(); }
  std::size_t order() const { return codes_.size(); }

  const Elem* entries(std::size_t i) const { return entries_.data() + i * ops_.entries(); }
  Matrix element(std::size_t i) const;
  std::uint64_t code(std::size_t i) const { return codes_[i]; }
  std::span<const std::uint64_t> codes() const { return codes_; }

  std::optional<std::size_t> find(const Matrix& m) const { return find(m.e.data()); }
  std::optional<std::size_t> find(const Elem* m) const;
  /// Throws std::out_of_range for matrices outside the group.
  std::size_t index_of(const Matrix& m) const;

  std::size_t identity() const { return identity_; }
  /// Inverse index; nullopt if the inverse is not in the list (only for unchecked lists).
  std::optional<std::size_t> inverse(std::size_t i) const;
  std::size_t product(std::size_t i, std::size_t j) const;

 private:
  FiniteGroup(GroupSpec spec, rings::RingPtr ring, unsigned n);
  void finish(std::vector<std::uint64_t> codes);

  GroupSpec spec_;
  MatrixOps ops_;
  std::vector<std::uint64_t> codes_;
  std::vector<Elem> entries_;
  std::vector<std::uint32_t> inverse_;
  CodeIndex index_;
  std::size_t identity_ = 0;

  friend std::shared_ptr<const FiniteGroup> enumerate_group(const GroupSpec&, std::uint64_t);
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Enumerates G(R). GL/SL: residue-field matrices are filtered first, then every lift
/// through the maximal ideal is enumerated (and filtered by det = 1 for SL).
/// Throws BudgetExceeded when predicted_order(spec) > budget.
GroupPtr enumerate_group(const GroupSpec& spec, std::uint64_t budget = kDefaultElementBudget);

/// Deterministic small generating set: random (fixed-seed) non-members are added until
/// the generated subgroup is everything.
std::vector<std::size_t> find_generators(const FiniteGroup& g);

/// Order of the subgroup generated by `gens` (breadth-first closure).
std::size_t generated_order(const FiniteGroup& g, std::span<const std::size_t> gens);

}  // namespace repzeta::groups
