#pragma once

#include <cstdint>
#include <vector>

#include "repzeta/groups/conjugacy.hpp"

namespace repzeta::chartab {

struct AlgebraOptions {
  /// Upper bound on group multiplications for one full pass (|G| * #classes).
  std::uint64_t budget = groups::kDefaultSweepBudget;
  std::size_t max_classes = 4096;
};

/// Class multiplication coefficients a_ijk (C_i C_j = sum_k a_ijk C_k) of the centre of
/// the group algebra. The matrices M_i are produced on demand. The ConjugacyData must
/// outlive this object.
class ClassAlgebra {
 public:
  ClassAlgebra(const groups::ConjugacyData& data, const AlgebraOptions& options = {});

  const groups::ConjugacyData& data() const { return *data_; }
  std::size_t r() const { return data_->num_classes(); }
  std::uint64_t order() const { return data_->order(); }
  std::uint64_t class_size(std::size_t i) const { return data_->cls(i).size; }
  std::size_t inverse_class(std::size_t i) const { return data_->cls(i).inverse_class; }
  /// Element indices of class i, ascending.
  const std::vector<std::uint32_t>& members(std::size_t i) const { return members_[i]; }
  /// Representative g_k of class k.
  std::size_t representative(std::size_t k) const { return data_->cls(k).representative; }

  /// (M_i)_{k,j} = a_ijk as a row-major r x r matrix (entry k * r + j). Cost O(|C_i| r).
  std::vector<std::uint64_t> matrix(std::size_t i) const;
  /// Same coefficients transposed: entry j * r + k holds a_ijk.
  std::vector<std::uint64_t> transposed_matrix(std::size_t i) const;

  /// Single coefficient by direct count over C_i.
  std::uint64_t coefficient(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  const groups::ConjugacyData* data_;
  std::vector<std::vector<std::uint32_t>> members_;
};

/// Throws BudgetExceeded when |G| * #classes exceeds the budget or there are too many classes.
ClassAlgebra class_algebra(const groups::ConjugacyData& data, const AlgebraOptions& options = {});

}  // namespace repzeta::chartab
