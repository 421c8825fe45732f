#include "repzeta/kirillov/orbits.hpp"

#include <stdexcept>

#include "repzeta/error.hpp"
#include "repzeta/kirillov/exp_log.hpp"
#include "repzeta/rings/modular.hpp"

namespace repzeta::kirillov {

std::uint64_t encode_functional(const NilpotentLieAlgebra& algebra, const Coords& f) {
  const std::uint64_t q = algebra.field().size();
  std::uint64_t code = 0;
  for (std::size_t t = f.size(); t-- > 0;) code = code * q + f[t];
  return code;
}

Coords decode_functional(const NilpotentLieAlgebra& algebra, std::uint64_t code) {
  const std::uint64_t q = algebra.field().size();
  Coords f(algebra.dimension());
  for (auto& v : f) {
    v = static_cast<Elem>(code % q);
    code /= q;
  }
  return f;
}

Elem pair_functional(const NilpotentLieAlgebra& algebra, const Coords& f, const Coords& x) {
  const auto& r = algebra.field();
  Elem s = 0;
  for (std::size_t t = 0; t < f.size(); ++t) s = r.add(s, r.mul(f[t], x[t]));
  return s;
}

namespace {

/// Matrix L with (Ad*(g) f)_t = sum_s L[t][s] f_s, i.e. L[(i,j)][(a,b)] = (g^-1)_{ai} g_{jb}.
std::vector<Elem> coadjoint_matrix(const NilpotentLieAlgebra& algebra, const Matrix& g) {
  const auto& ops = algebra.ops();
  const auto ginv = ops.inverse(g);
  if (!ginv) throw std::invalid_argument("coadjoint action: matrix is not invertible");
  const auto& r = algebra.field();
  const auto& pos = algebra.positions();
  const std::size_t d = pos.size();
  std::vector<Elem> l(d * d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t s = 0; s < d; ++s)
      l[t * d + s] = r.mul(ops.at(*ginv, pos[s].first, pos[t].first), ops.at(g, pos[t].second, pos[s].second));
  return l;
}

Coords apply(const rings::FiniteRing& r, const std::vector<Elem>& l, const Coords& f) {
  const std::size_t d = f.size();
  Coords out(d, 0);
  for (std::size_t t = 0; t < d; ++t) {
    Elem acc = 0;
    for (std::size_t s = 0; s < d; ++s)
      if (f[s] != 0) acc = r.add(acc, r.mul(l[t * d + s], f[s]));
    out[t] = acc;
  }
  return out;
}

}  // namespace

Coords coadjoint_action(const NilpotentLieAlgebra& algebra, const Matrix& g, const Coords& f) {
  return apply(algebra.field(), coadjoint_matrix(algebra, g), f);
}

std::vector<CoadjointOrbit> coadjoint_orbits(const NilpotentLieAlgebra& algebra, const groups::FiniteGroup& group,
                                             std::uint64_t budget) {
  if (group.n() != algebra.n()) throw std::invalid_argument("group and Lie algebra have different matrix sizes");
  const std::uint64_t total = rings::checked_pow(algebra.field().size(), static_cast<unsigned>(algebra.dimension()));
  if (total > budget)
    throw BudgetExceeded(std::to_string(total) + " functionals exceed the budget " + std::to_string(budget));
  std::vector<std::vector<Elem>> actions;
  for (std::size_t gen : groups::find_generators(group)) actions.push_back(coadjoint_matrix(algebra, group.element(gen)));

  std::vector<char> seen(total, 0);
  std::vector<CoadjointOrbit> orbits;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    CoadjointOrbit orbit;
    seen[start] = 1;
    orbit.members.push_back(start);
    for (std::size_t head = 0; head < orbit.members.size(); ++head) {
      const Coords f = decode_functional(algebra, orbit.members[head]);
      for (const auto& l : actions) {
        const std::uint64_t next = encode_functional(algebra, apply(algebra.field(), l, f));
        if (!seen[next]) {
          seen[next] = 1;
          orbit.members.push_back(next);
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

chartab::DimensionMultiset orbit_method_degrees(const std::vector<CoadjointOrbit>& orbits) {
  chartab::DimensionMultiset out;
  for (const auto& o : orbits) {
    const std::uint64_t d = rings::isqrt(o.size());
    if (d * d != o.size()) throw MathError("coadjoint orbit of size " + std::to_string(o.size()) + " is not a square");
    ++out.degrees[d];
    out.order += o.size();
  }
  out.classes = orbits.size();
  return out;
}

AdditiveCharacter::AdditiveCharacter(rings::RingPtr f, Elem scalar) : field(std::move(f)), c(scalar) {
  if (!field->is_field()) throw std::invalid_argument("additive character needs a field");
  if (c == 0 || c >= field->size()) throw std::invalid_argument("additive character needs a nonzero scalar");
}

CyclotomicValue kirillov_character(const NilpotentLieAlgebra& algebra, const CoadjointOrbit& orbit, const Matrix& g,
                                   const AdditiveCharacter& phi) {
  const Coords x = algebra.from_matrix(matrix_log(algebra.ops(), g));
  const unsigned p = phi.p();
  std::vector<mpz_class> counts(p, 0);
  for (std::uint64_t code : orbit.members) counts[phi.exponent(pair_functional(algebra, decode_functional(algebra, code), x))] += 1;
  const std::uint64_t root = rings::isqrt(orbit.size());
  if (root * root != orbit.size()) throw MathError("coadjoint orbit size is not a square");
  return CyclotomicValue::from_exponent_counts(p, counts, mpq_class(1, static_cast<unsigned long>(root)));
}

nlohmann::json orbit_report(const NilpotentLieAlgebra& algebra, const std::vector<CoadjointOrbit>& orbits) {
  std::vector<std::uint64_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  nlohmann::json degs = orbit_method_degrees(orbits);
  return nlohmann::json{{"algebra_dim", algebra.dimension()},
                        {"field", algebra.field().descriptor().label()},
                        {"orbit_sizes", sizes},
                        {"degrees", degs.at("degrees")}};
}

}  // namespace repzeta::kirillov
