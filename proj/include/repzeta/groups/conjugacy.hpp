#pragma once

#include <cstdint>
#include <vector>

#include "repzeta/groups/finite_group.hpp"

namespace repzeta::groups {

inline constexpr std::uint64_t kDefaultSweepBudget = 5'000'000'000ULL;

struct ConjugacyClass {
  std::size_t representative = 0;  // smallest element index in the class
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  std::size_t inverse_class = 0;
  std::uint64_t element_order = 0;
};

/// Class partition of a FiniteGroup. Class 0 is the identity; the remaining classes are
/// numbered by their smallest element. Immutable after construction.
class ConjugacyData {
 public:
  ConjugacyData(GroupPtr group, std::vector<std::uint32_t> class_of_element, std::vector<ConjugacyClass> classes,
                std::vector<std::size_t> generators);

  const GroupPtr& group() const { return group_; }
  std::uint64_t order() const { return group_->order(); }
  std::size_t num_classes() const { return classes_.size(); }
  std::uint64_t exponent() const { return exponent_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const ConjugacyClass& cls(std::size_t c) const { return classes_[c]; }
  const std::vector<std::uint32_t>& class_of_element() const { return class_of_element_; }
  std::size_t class_of(std::size_t element) const { return class_of_element_[element]; }
  /// Throws std::out_of_range for matrices outside the group.
  std::size_t class_of(const Matrix& g) const { return class_of_element_[group_->index_of(g)]; }
  const std::vector<std::size_t>& generators() const { return generators_; }

  /// Throws MathError if any structural invariant fails.
  void check_invariants() const;

 private:
  GroupPtr group_;
  std::vector<std::uint32_t> class_of_element_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> generators_;
  std::uint64_t exponent_ = 1;
};

struct ConjugacyOptions {
  std::uint64_t sweep_budget = kDefaultSweepBudget;
  std::size_t closure_samples = 2000;
};

/// Orbit sweep: the first unclassified element seeds a class, which is closed under
/// conjugation by a generating set. Closure of the element list is checked by sampling
/// (MathError on violation); BudgetExceeded if the sweep would need more group operations
/// than allowed.
ConjugacyData conjugacy_classes(const GroupPtr& group, const ConjugacyOptions& options = {});

/// #{(x, y) : xy = yx} = sum over elements of their centralizer order = |G| * #classes.
std::uint64_t commuting_pair_count(const ConjugacyData& data);

}  // namespace repzeta::groups
