#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "repzeta/rings/finite_ring.hpp"

namespace repzeta::groups {

/// Group schemes that can be enumerated. Heisenberg is U_3 under its own name.
enum class Scheme { GL, SL, U, Heisenberg, Diagonal };

std::string to_string(Scheme s);
/// Accepts "gl", "sl", "u", "heisenberg", "diagonal" (case-insensitive).
Scheme scheme_from_string(const std::string& s);

struct GroupSpec {
  Scheme scheme = Scheme::GL;
  std::uint32_t n = 1;
  rings::RingDescriptor ring;

  /// Matrix size (3 for Heisenberg regardless of n).
  std::uint32_t matrix_size() const { return scheme == Scheme::Heisenberg ? 3 : n; }
  /// Dimension of the scheme as a variety.
  std::uint64_t dimension() const;
  std::string label() const;
  bool operator==(const GroupSpec&) const = default;
};

void to_json(nlohmann::json& j, const GroupSpec& s);
void from_json(const nlohmann::json& j, GroupSpec& s);

/// |G(R)| computed from the residue-field count and the lift fibration.
std::uint64_t predicted_order(const GroupSpec& spec);

}  // namespace repzeta::groups
