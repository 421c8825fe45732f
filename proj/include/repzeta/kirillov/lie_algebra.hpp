#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "repzeta/groups/group_spec.hpp"
#include "repzeta/groups/matrix.hpp"

namespace repzeta::kirillov {

using groups::Elem;
using groups::Matrix;
using Coords = std::vector<Elem>;

/// Lie algebra spanned by elementary matrices E_ij (i < j) over a finite field, with
/// the matrix commutator as bracket. Coordinates follow the order of `positions()`.
class NilpotentLieAlgebra {
 public:
  NilpotentLieAlgebra(rings::RingPtr field, unsigned n, std::vector<std::pair<unsigned, unsigned>> positions);

  const rings::FiniteRing& field() const { return *field_; }
  const rings::RingPtr& field_ptr() const { return field_; }
  const groups::MatrixOps& ops() const { return ops_; }
  unsigned n() const { return ops_.n(); }
  std::size_t dimension() const { return positions_.size(); }
  const std::vector<std::pair<unsigned, unsigned>>& positions() const { return positions_; }
  std::optional<std::size_t> position_index(unsigned i, unsigned j) const;

  Matrix to_matrix(const Coords& x) const;
  /// Throws std::invalid_argument when m has entries outside the basis positions.
  Coords from_matrix(const Matrix& m) const;

  Coords bracket(const Coords& x, const Coords& y) const;
  /// [e_a, e_b] as a coordinate vector.
  const Coords& structure_constants(std::size_t a, std::size_t b) const { return structure_[a * dimension() + b]; }

  /// Closed under bracket, antisymmetric, Jacobi on all basis triples.
  bool check_axioms() const;

 private:
  rings::RingPtr field_;
  groups::MatrixOps ops_;
  std::vector<std::pair<unsigned, unsigned>> positions_;
  std::vector<Coords> structure_;
};

/// Strictly upper triangular matrices, the Lie algebra of U_n (and of the Heisenberg group)
/// over a field; log maps U_n onto it once p >= n. Throws std::invalid_argument for other
/// schemes or non-field rings.
NilpotentLieAlgebra lie_algebra_of(const groups::GroupSpec& spec);

}  // namespace repzeta::kirillov
