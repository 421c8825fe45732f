#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace repzeta::rings {

/// F_{p^f} modelled as F_p[x]/(modulus). Immutable once built.
struct FieldDescriptor {
  std::uint32_t p = 0;
  std::uint32_t f = 0;
  /// Monic irreducible of degree f over F_p, coefficients low to high (size f + 1).
  std::vector<std::uint32_t> modulus;

  std::uint64_t order() const;
  bool operator==(const FieldDescriptor&) const = default;
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Builds F_{p^f} using the lexicographically smallest monic irreducible of degree f,
/// ordering candidates by the integer sum c_i p^i of their coefficients.
FieldPtr make_field(std::uint32_t p, std::uint32_t f = 1);

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<std::uint32_t> coords);

  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);
  static FieldElement from_int(const FieldPtr& field, std::int64_t v);
  /// Inverse of index(): coordinate j is digit j of `index` in base p.
  static FieldElement from_index(const FieldPtr& field, std::uint64_t index);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }
  std::uint64_t index() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  /// Absolute trace to F_p.
  std::uint32_t trace() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<std::uint32_t> coords_;
};

/// Throws std::invalid_argument when the two descriptors differ.
void require_same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace repzeta::rings
