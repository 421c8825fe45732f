#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace repzeta::rings {

enum class RingKind { Field, TruncatedPoly, GaloisRing };

/// Serializable description of one of the supported finite local rings:
///   Field          F_{p^f}
///   TruncatedPoly  F_{p^f}[t]/(t^k)
///   GaloisRing     GR(p^k, f), the model of W_k(F_{p^f}); Z/p^k when f = 1
struct RingDescriptor {
  RingKind kind = RingKind::Field;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t f = 1;
  /// Field modulus over F_p for Field/TruncatedPoly, the lifted modulus over Z/p^k for GaloisRing.
  std::vector<std::uint64_t> modulus_coeffs;

  static RingDescriptor field(std::uint32_t p, std::uint32_t f = 1);
  static RingDescriptor truncated_poly(std::uint32_t p, std::uint32_t k, std::uint32_t f = 1);
  static RingDescriptor galois_ring(std::uint32_t p, std::uint32_t k, std::uint32_t f = 1);

  std::uint64_t order() const;
  std::uint64_t residue_order() const;
  std::string label() const;
  bool operator==(const RingDescriptor&) const = default;
};

std::string to_string(RingKind kind);
RingKind ring_kind_from_string(const std::string& s);

void to_json(nlohmann::json& j, const RingDescriptor& d);
void from_json(const nlohmann::json& j, RingDescriptor& d);

/// Cayley-table model of a finite commutative local ring. Elements are their canonical
/// indices (the `index()` of the exact element types), so 0 is zero and 1 is one.
class FiniteRing {
 public:
  using Elem = std::uint16_t;
  static constexpr std::uint64_t kMaxOrder = 4096;

  static std::shared_ptr<const FiniteRing> build(const RingDescriptor& desc);

  const RingDescriptor& descriptor() const { return desc_; }
  std::uint32_t size() const { return n_; }
  std::uint32_t prime() const { return desc_.p; }
  /// Characteristic: p for fields and truncated polynomial rings, p^k for Galois rings.
  std::uint64_t characteristic() const { return char_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return add_[std::size_t{a} * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t{a} * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  bool is_unit(Elem a) const { return inv_[a] != kNoInverse; }
  /// Throws std::domain_error for non-units.
  Elem inv(Elem a) const;
  Elem from_int(std::int64_t v) const;

  /// Index of the image in the residue field (0..q-1, same encoding as FieldElement::index).
  std::uint32_t residue(Elem a) const { return residue_[a]; }
  std::uint32_t residue_size() const { return q_; }
  /// The maximal ideal, ascending. {0} for fields.
  std::span<const Elem> ideal() const { return ideal_; }
  /// Smallest element reducing to the residue class r.
  Elem section(std::uint32_t r) const { return section_[r]; }
  std::uint64_t unit_count() const { return n_ - ideal_.size(); }

  /// Absolute trace to F_p; only defined for fields.
  std::uint32_t trace(Elem a) const;
  bool is_field() const { return desc_.kind == RingKind::Field; }

  std::string to_string(Elem a) const { return names_[a]; }

 private:
  static constexpr Elem kNoInverse = 0xFFFF;
  FiniteRing() = default;

  RingDescriptor desc_;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  std::uint64_t char_ = 0;
  std::vector<Elem> add_, mul_, neg_, inv_, ideal_, section_;
  std::vector<std::uint32_t> residue_, trace_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

}  // namespace repzeta::rings
