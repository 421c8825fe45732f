#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "repzeta/rings/field.hpp"
#include "repzeta/rings/galois_ring.hpp"

namespace repzeta::rings {

/// Integer polynomial in up to 8 variables, exponents below 256.
/// Monomials are packed 8 bits per variable; terms sorted by packed key, no zero coefficients.
class IntPoly {
 public:
  using Monomial = std::uint64_t;
  static constexpr unsigned kMaxVars = 8;
  static constexpr unsigned kMaxExponent = 255;

  IntPoly() = default;
  static IntPoly constant(const mpz_class& c);
  static IntPoly variable(unsigned var);

  static unsigned exponent(Monomial m, unsigned var) { return static_cast<unsigned>((m >> (8 * var)) & 0xFF); }

  const std::vector<std::pair<Monomial, mpz_class>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the monomial with the given exponent vector (missing entries are 0).
  mpz_class coefficient(std::span<const unsigned> exponents) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;
  IntPoly pow(unsigned e) const;

  /// Exact division by d. Throws MathError if some coefficient is not divisible,
  /// i.e. the rational quotient is not an integer polynomial.
  IntPoly exact_div(const mpz_class& d) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  static IntPoly from_unsorted(std::vector<std::pair<Monomial, mpz_class>> terms);
  std::vector<std::pair<Monomial, mpz_class>> terms_;
};

/// Witt addition and multiplication polynomials S_i, P_i in X_0..X_{k-1}, Y_0..Y_{k-1}.
/// Variable index i is X_i, k + i is Y_i.
struct WittPolynomialSet {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<IntPoly> sum;
  std::vector<IntPoly> product;

  std::vector<std::string> variable_names() const;
};

/// w_n(V) = sum_{i <= n} p^i V_i^{p^{n-i}} for the variable block starting at `offset`.
IntPoly ghost_component(std::uint32_t p, std::uint32_t n, unsigned offset);

/// w_n evaluated on a sequence of polynomials: sum_{i<=n} p^i polys[i]^{p^{n-i}}.
IntPoly ghost_of(std::uint32_t p, std::span<const IntPoly> polys, std::uint32_t n);

/// Solves the ghost-component recursion over exact rationals and asserts every
/// coefficient is integral. Requires p prime, 2k <= 8, p^{k-1} <= 255.
WittPolynomialSet derive_witt_polynomials(std::uint32_t p, std::uint32_t k);

struct WittRingDescriptor {
  FieldPtr field;
  std::uint32_t k = 0;
  std::shared_ptr<const WittPolynomialSet> polys;

  bool operator==(const WittRingDescriptor& o) const { return k == o.k && *field == *o.field; }
};

using WittRingPtr = std::shared_ptr<const WittRingDescriptor>;

WittRingPtr make_witt_ring(FieldPtr field, std::uint32_t k);

class WittVector {
 public:
  WittVector(WittRingPtr ring, std::vector<FieldElement> components);

  static WittVector zero(const WittRingPtr& ring);
  static WittVector one(const WittRingPtr& ring);
  /// Component i is field element number digit_i(index) in base q.
  static WittVector from_index(const WittRingPtr& ring, std::uint64_t index);

  const WittRingPtr& ring() const { return ring_; }
  const std::vector<FieldElement>& components() const { return comps_; }
  std::uint64_t index() const;

  friend WittVector operator+(const WittVector& a, const WittVector& b);
  friend WittVector operator*(const WittVector& a, const WittVector& b);
  friend bool operator==(const WittVector& a, const WittVector& b);

  std::string to_string() const;

 private:
  WittRingPtr ring_;
  std::vector<FieldElement> comps_;
};

/// Evaluates an integer polynomial at field values (coefficients reduced into the field).
FieldElement evaluate(const IntPoly& poly, std::span<const FieldElement> values);

/// Teichmuller lift of c in F_p: any integer lift raised to p^{k-1}, mod p^k.
std::uint64_t teichmuller(std::uint64_t c, std::uint32_t p, std::uint32_t k);

/// sum_i p^i tau(w_i) mod p^k. Requires the base field to be F_p.
GaloisRingElement witt_to_padic(const WittVector& w, const GaloisRingPtr& target);

}  // namespace repzeta::rings
