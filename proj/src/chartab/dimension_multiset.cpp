#include "repzeta/chartab/dimension_multiset.hpp"

#include "repzeta/error.hpp"

namespace repzeta::chartab {

std::uint64_t DimensionMultiset::sum_of_multiplicities() const {
  std::uint64_t s = 0;
  for (const auto& [d, m] : degrees) s += m;
  return s;
}

std::uint64_t DimensionMultiset::sum_of_squares() const {
  std::uint64_t s = 0;
  for (const auto& [d, m] : degrees) s += m * d * d;
  return s;
}

void DimensionMultiset::check_invariants() const {
  for (const auto& [d, m] : degrees) {
    if (d == 0 || m == 0) throw MathError("degree multiset has a zero entry: " + to_string());
    if (order % d != 0) throw MathError("degree " + std::to_string(d) + " does not divide " + std::to_string(order));
  }
  if (sum_of_squares() != order)
    throw MathError("sum of squared degrees " + std::to_string(sum_of_squares()) + " != order " + std::to_string(order));
  if (sum_of_multiplicities() != classes)
    throw MathError("number of irreducibles " + std::to_string(sum_of_multiplicities()) + " != classes " +
                    std::to_string(classes));
}

std::string DimensionMultiset::to_string() const {
  std::string s = "{";
  for (const auto& [d, m] : degrees) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(d) + ":" + std::to_string(m);
  }
  return s + "}";
}

void to_json(nlohmann::json& j, const DimensionMultiset& m) {
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& [d, mult] : m.degrees) degs.push_back({d, mult});
  j = nlohmann::json{{"order", m.order}, {"classes", m.classes}, {"degrees", degs}};
}

void from_json(const nlohmann::json& j, DimensionMultiset& m) {
  m.order = j.at("order").get<std::uint64_t>();
  m.classes = j.at("classes").get<std::uint64_t>();
  m.degrees.clear();
  for (const auto& e : j.at("degrees")) {
    const auto d = e.at(0).get<std::uint64_t>();
    const auto mult = e.at(1).get<std::uint64_t>();
    if (!m.degrees.emplace(d, mult).second) throw std::invalid_argument("duplicate degree in multiset JSON");
  }
}

}  // namespace repzeta::chartab
