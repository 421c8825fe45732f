#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "repzeta/rings/field.hpp"

namespace repzeta::rings {

/// GR(p^k, f) = (Z/p^k)[x]/(modulus). For f = 1 this is Z/p^k.
struct GaloisRingDescriptor {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t f = 1;
  std::uint64_t pk = 0;  // p^k
  /// Monic, degree f, coefficients in [0, p^k), low to high.
  std::vector<std::uint64_t> modulus;
  /// The residue field F_{p^f}; its modulus is `modulus` reduced mod p.
  FieldPtr residue_field;

  std::uint64_t order() const;
  bool operator==(const GaloisRingDescriptor& o) const {
    return p == o.p && k == o.k && f == o.f && modulus == o.modulus;
  }
};

using GaloisRingPtr = std::shared_ptr<const GaloisRingDescriptor>;

/// Lifts the residue field's modulus coefficientwise (digits 0..p-1 taken as integers).
GaloisRingPtr build_galois_ring(std::uint32_t p, std::uint32_t k, std::uint32_t f = 1);

class GaloisRingElement {
 public:
  GaloisRingElement(GaloisRingPtr ring, std::vector<std::uint64_t> coords);

  static GaloisRingElement zero(const GaloisRingPtr& ring);
  static GaloisRingElement one(const GaloisRingPtr& ring);
  static GaloisRingElement from_int(const GaloisRingPtr& ring, std::int64_t v);
  /// Coordinate j is digit j of `index` in base p^k.
  static GaloisRingElement from_index(const GaloisRingPtr& ring, std::uint64_t index);

  const GaloisRingPtr& ring() const { return ring_; }
  const std::vector<std::uint64_t>& coords() const { return coords_; }
  std::uint64_t index() const;
  bool is_zero() const;
  /// A unit iff its reduction mod p is nonzero.
  bool is_unit() const;
  FieldElement residue() const;

  GaloisRingElement operator-() const;
  GaloisRingElement inverse() const;
  GaloisRingElement pow(std::uint64_t e) const;

  friend GaloisRingElement operator+(const GaloisRingElement& a, const GaloisRingElement& b);
  friend GaloisRingElement operator-(const GaloisRingElement& a, const GaloisRingElement& b);
  friend GaloisRingElement operator*(const GaloisRingElement& a, const GaloisRingElement& b);
  friend bool operator==(const GaloisRingElement& a, const GaloisRingElement& b);

  std::string to_string() const;

 private:
  GaloisRingPtr ring_;
  std::vector<std::uint64_t> coords_;
};

}  // namespace repzeta::rings
