#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace repzeta::chartab {

/// Irreducible character degrees of a finite group: degree -> multiplicity.
struct DimensionMultiset {
  std::uint64_t order = 0;
  std::uint64_t classes = 0;
  std::map<std::uint64_t, std::uint64_t> degrees;

  /// N(G): number of distinct degrees.
  std::size_t distinct() const { return degrees.size(); }
  std::uint64_t sum_of_multiplicities() const;
  std::uint64_t sum_of_squares() const;

  /// Sum m_d d^2 = order, sum m_d = classes, d | order. Throws MathError otherwise.
  void check_invariants() const;

  std::string to_string() const;  // "{1:9, 3:2}"

  friend bool operator==(const DimensionMultiset&, const DimensionMultiset&) = default;
};

/// {order, classes, degrees: [[d, m], ...]} with degrees ascending.
void to_json(nlohmann::json& j, const DimensionMultiset& m);
void from_json(const nlohmann::json& j, DimensionMultiset& m);

}  // namespace repzeta::chartab
