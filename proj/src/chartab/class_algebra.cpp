#include "repzeta/chartab/class_algebra.hpp"

#include "repzeta/error.hpp"

namespace repzeta::chartab {

ClassAlgebra::ClassAlgebra(const groups::ConjugacyData& data, const AlgebraOptions& options) : data_(&data) {
  const std::size_t r = data.num_classes();
  if (r > options.max_classes)
    throw BudgetExceeded(std::to_string(r) + " classes exceed the class-algebra limit " +
                         std::to_string(options.max_classes));
  const std::uint64_t cost = data.order() * r;
  if (cost > options.budget)
    throw BudgetExceeded("class algebra needs " + std::to_string(cost) + " group operations, budget " +
                         std::to_string(options.budget));
  members_.resize(r);
  for (std::size_t i = 0; i < r; ++i) members_[i].reserve(data.cls(i).size);
  const auto& cls = data.class_of_element();
  for (std::size_t x = 0; x < cls.size(); ++x) members_[cls[x]].push_back(static_cast<std::uint32_t>(x));
}

std::vector<std::uint64_t> ClassAlgebra::matrix(std::size_t i) const {
  const std::size_t n = r();
  const auto& g = *data_->group();
  std::vector<std::uint64_t> m(n * n, 0);
  // a_ijk = #{x in C_i : x^-1 g_k in C_j}
  for (std::uint32_t x : members_.at(i)) {
    const std::size_t xinv = *g.inverse(x);
    for (std::size_t k = 0; k < n; ++k) ++m[k * n + data_->class_of(g.product(xinv, representative(k)))];
  }
  return m;
}

std::vector<std::uint64_t> ClassAlgebra::transposed_matrix(std::size_t i) const {
  const std::size_t n = r();
  const auto m = matrix(i);
  std::vector<std::uint64_t> t(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) t[j * n + k] = m[k * n + j];
  return t;
}

std::uint64_t ClassAlgebra::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  const auto& g = *data_->group();
  std::uint64_t count = 0;
  for (std::uint32_t x : members_.at(i))
    if (data_->class_of(g.product(*g.inverse(x), representative(k))) == j) ++count;
  return count;
}

ClassAlgebra class_algebra(const groups::ConjugacyData& data, const AlgebraOptions& options) {
  return ClassAlgebra(data, options);
}

}  // namespace repzeta::chartab
