#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "repzeta/rings/field.hpp"

namespace repzeta::rings {

/// F_q[t]/(t^k).
struct TruncPolyDescriptor {
  FieldPtr field;
  std::uint32_t k = 1;

  std::uint64_t order() const;
  bool operator==(const TruncPolyDescriptor& o) const { return k == o.k && *field == *o.field; }
};

using TruncPolyPtr = std::shared_ptr<const TruncPolyDescriptor>;

TruncPolyPtr make_truncated_poly_ring(FieldPtr field, std::uint32_t k);

class TruncPolyElement {
 public:
  /// `coeffs[i]` is the coefficient of t^i; exactly k entries.
  TruncPolyElement(TruncPolyPtr ring, std::vector<FieldElement> coeffs);

  static TruncPolyElement zero(const TruncPolyPtr& ring);
  static TruncPolyElement one(const TruncPolyPtr& ring);
  static TruncPolyElement from_int(const TruncPolyPtr& ring, std::int64_t v);
  /// Coefficient of t^i is field element number digit_i(index) in base q.
  static TruncPolyElement from_index(const TruncPolyPtr& ring, std::uint64_t index);

  const TruncPolyPtr& ring() const { return ring_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  std::uint64_t index() const;
  bool is_zero() const;
  bool is_unit() const { return !coeffs_[0].is_zero(); }

  TruncPolyElement operator-() const;
  /// Throws std::domain_error for non-units.
  TruncPolyElement inverse() const;
  TruncPolyElement pow(std::uint64_t e) const;

  friend TruncPolyElement operator+(const TruncPolyElement& a, const TruncPolyElement& b);
  friend TruncPolyElement operator-(const TruncPolyElement& a, const TruncPolyElement& b);
  friend TruncPolyElement operator*(const TruncPolyElement& a, const TruncPolyElement& b);
  friend bool operator==(const TruncPolyElement& a, const TruncPolyElement& b);

  std::string to_string() const;

 private:
  TruncPolyPtr ring_;
  std::vector<FieldElement> coeffs_;
};

}  // namespace repzeta::rings
