#include "repzeta/kirillov/lie_algebra.hpp"

#include <stdexcept>

namespace repzeta::kirillov {

NilpotentLieAlgebra::NilpotentLieAlgebra(rings::RingPtr field, unsigned n,
                                         std::vector<std::pair<unsigned, unsigned>> positions)
    : field_(field), ops_(field, n), positions_(std::move(positions)) {
  if (!field_->is_field()) throw std::invalid_argument("Lie algebra requires a field");
  for (auto [i, j] : positions_)
    if (i >= j || j >= n) throw std::invalid_argument("basis positions must be strictly upper triangular");
  const std::size_t d = dimension();
  structure_.resize(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Coords ea(d, 0), eb(d, 0);
      ea[a] = 1;
      eb[b] = 1;
      const Matrix x = to_matrix(ea), y = to_matrix(eb);
      structure_[a * d + b] = from_matrix(ops_.sub(ops_.multiply(x, y), ops_.multiply(y, x)));
    }
}

std::optional<std::size_t> NilpotentLieAlgebra::position_index(unsigned i, unsigned j) const {
  for (std::size_t t = 0; t < positions_.size(); ++t)
    if (positions_[t].first == i && positions_[t].second == j) return t;
  return std::nullopt;
}

Matrix NilpotentLieAlgebra::to_matrix(const Coords& x) const {
  if (x.size() != dimension()) throw std::invalid_argument("coordinate vector has the wrong length");
  Matrix m = ops_.zero();
  for (std::size_t t = 0; t < x.size(); ++t) m.e[positions_[t].first * n() + positions_[t].second] = x[t];
  return m;
}

Coords NilpotentLieAlgebra::from_matrix(const Matrix& m) const {
  Coords x(dimension(), 0);
  std::vector<bool> used(std::size_t{n()} * n(), false);
  for (std::size_t t = 0; t < x.size(); ++t) {
    const std::size_t idx = positions_[t].first * n() + positions_[t].second;
    x[t] = m.e[idx];
    used[idx] = true;
  }
  for (std::size_t idx = 0; idx < used.size(); ++idx)
    if (!used[idx] && m.e[idx] != 0) throw std::invalid_argument("matrix is not in the Lie algebra");
  return x;
}

Coords NilpotentLieAlgebra::bracket(const Coords& x, const Coords& y) const {
  const Matrix a = to_matrix(x), b = to_matrix(y);
  return from_matrix(ops_.sub(ops_.multiply(a, b), ops_.multiply(b, a)));
}

bool NilpotentLieAlgebra::check_axioms() const {
  const std::size_t d = dimension();
  const auto& f = *field_;
  auto basis = [&](std::size_t a) {
    Coords e(d, 0);
    e[a] = 1;
    return e;
  };
  auto add = [&](Coords x, const Coords& y) {
    for (std::size_t t = 0; t < d; ++t) x[t] = f.add(x[t], y[t]);
    return x;
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Coords& ab = structure_constants(a, b);
      const Coords& ba = structure_constants(b, a);
      for (std::size_t t = 0; t < d; ++t)
        if (f.add(ab[t], ba[t]) != 0) return false;
      for (std::size_t c = 0; c < d; ++c) {
        const Coords j = add(add(bracket(basis(a), bracket(basis(b), basis(c))), bracket(basis(b), bracket(basis(c), basis(a)))),
                             bracket(basis(c), bracket(basis(a), basis(b))));
        for (Elem v : j)
          if (v != 0) return false;
      }
    }
  return true;
}

NilpotentLieAlgebra lie_algebra_of(const groups::GroupSpec& spec) {
  if (spec.scheme != groups::Scheme::U && spec.scheme != groups::Scheme::Heisenberg)
    throw std::invalid_argument("Lie algebras are provided for U_n and Heisenberg groups only");
  auto field = rings::FiniteRing::build(spec.ring);
  if (!field->is_field()) throw std::invalid_argument("orbit method is restricted to groups over fields");
  const unsigned n = spec.matrix_size();
  std::vector<std::pair<unsigned, unsigned>> positions;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) positions.emplace_back(i, j);
  return NilpotentLieAlgebra(field, n, std::move(positions));
}

}  // namespace repzeta::kirillov
