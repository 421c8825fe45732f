#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "repzeta/chartab/dimension_multiset.hpp"
#include "repzeta/groups/finite_group.hpp"
#include "repzeta/kirillov/cyclotomic.hpp"
#include "repzeta/kirillov/lie_algebra.hpp"

namespace repzeta::kirillov {

/// Functionals f on the algebra are coordinate vectors f_t = f(e_t), encoded as
/// sum_t f_t q^t.
std::uint64_t encode_functional(const NilpotentLieAlgebra& algebra, const Coords& f);
Coords decode_functional(const NilpotentLieAlgebra& algebra, std::uint64_t code);

/// f(X) for X in coordinates.
Elem pair_functional(const NilpotentLieAlgebra& algebra, const Coords& f, const Coords& x);

/// (Ad*(g) f)(X) = f(g^-1 X g).
Coords coadjoint_action(const NilpotentLieAlgebra& algebra, const Matrix& g, const Coords& f);

struct CoadjointOrbit {
  std::vector<std::uint64_t> members;  // functional codes, ascending
  std::uint64_t size() const { return members.size(); }
};

inline constexpr std::uint64_t kDefaultFunctionalBudget = 5'000'000;

/// Partition of all q^D functionals into orbits of the group, found by closing the
/// smallest unvisited functional under a generating set. Orbits are ordered by their
/// smallest member.
std::vector<CoadjointOrbit> coadjoint_orbits(const NilpotentLieAlgebra& algebra, const groups::FiniteGroup& group,
                                             std::uint64_t budget = kDefaultFunctionalBudget);

/// Degree sqrt|orbit| with multiplicity the number of orbits of that size. Throws
/// MathError if an orbit size is not a perfect square.
chartab::DimensionMultiset orbit_method_degrees(const std::vector<CoadjointOrbit>& orbits);

/// x -> zeta_p^Tr(c x), c nonzero.
struct AdditiveCharacter {
  rings::RingPtr field;
  Elem c = 1;

  AdditiveCharacter(rings::RingPtr f, Elem scalar = 1);
  unsigned p() const { return field->prime(); }
  unsigned exponent(Elem x) const { return field->trace(field->mul(c, x)); }
};

/// chi(g) = |orbit|^(-1/2) sum_{w in orbit} phi(w(log g)), exact.
CyclotomicValue kirillov_character(const NilpotentLieAlgebra& algebra, const CoadjointOrbit& orbit, const Matrix& g,
                                   const AdditiveCharacter& phi);

/// {algebra_dim, field, orbit_sizes, degrees}.
nlohmann::json orbit_report(const NilpotentLieAlgebra& algebra, const std::vector<CoadjointOrbit>& orbits);

}  // namespace repzeta::kirillov
