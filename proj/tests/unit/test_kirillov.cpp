#include <doctest.h>

#include <set>

#include "repzeta/chartab/dixon.hpp"
#include "repzeta/error.hpp"
#include "repzeta/kirillov/exp_log.hpp"
#include "repzeta/kirillov/orbits.hpp"

using namespace repzeta;
using namespace repzeta::kirillov;
using groups::GroupSpec;
using groups::Scheme;
using rings::RingDescriptor;

namespace {

GroupSpec uspec(unsigned n, std::uint32_t p, std::uint32_t f = 1) {
  return GroupSpec{n == 3 ? Scheme::Heisenberg : Scheme::U, n, RingDescriptor::field(p, f)};
}

/// Character table rows: chi_orbit(g) for every element g.
std::vector<std::vector<CyclotomicValue>> character_table(const NilpotentLieAlgebra& alg, const groups::FiniteGroup& g,
                                                          const std::vector<CoadjointOrbit>& orbits,
                                                          const AdditiveCharacter& phi) {
  std::vector<std::vector<CyclotomicValue>> table;
  for (const auto& o : orbits) {
    std::vector<CyclotomicValue> row;
    for (std::size_t x = 0; x < g.order(); ++x) row.push_back(kirillov_character(alg, o, g.element(x), phi));
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace

TEST_CASE("exp and log") {
  auto f5 = rings::FiniteRing::build(RingDescriptor::field(5));
  groups::MatrixOps ops2(f5, 2);
  CHECK(matrix_log(ops2, ops2.identity()) == ops2.zero());
  CHECK(matrix_exp(ops2, ops2.zero()) == ops2.identity());
  Matrix u = ops2.identity();
  u.e[1] = 1;
  Matrix n = ops2.zero();
  n.e[1] = 1;
  CHECK(matrix_log(ops2, u) == n);
  CHECK(matrix_exp(ops2, n) == u);

  for (auto [size, p] : std::vector<std::pair<unsigned, std::uint32_t>>{{3, 5}, {3, 3}, {4, 5}, {3, 7}}) {
    auto g = groups::enumerate_group(uspec(size, p));
    const auto alg = lie_algebra_of(g->spec());
    CAPTURE(g->spec().label());
    std::set<std::uint64_t> logs;
    for (std::size_t x = 0; x < g->order(); ++x) {
      const Matrix m = g->element(x);
      const Matrix l = matrix_log(g->ops(), m);
      REQUIRE(matrix_exp(g->ops(), l) == m);
      const Coords c = alg.from_matrix(l);  // throws if outside the span
      logs.insert(g->ops().encode(l.e.data()));
      REQUIRE(alg.to_matrix(c) == l);
    }
    // log is a bijection onto the span of the basis
    CHECK(logs.size() == g->order());
    for (std::uint64_t code = 0; code < g->order(); ++code) {
      const Coords c = decode_functional(alg, code);
      const Matrix a = alg.to_matrix(c);
      REQUIRE(matrix_log(g->ops(), matrix_exp(g->ops(), a)) == a);
      REQUIRE(g->find(matrix_exp(g->ops(), a)).has_value());
    }
  }

  auto f3 = rings::FiniteRing::build(RingDescriptor::field(3));
  groups::MatrixOps ops4(f3, 4);
  CHECK_THROWS_AS(matrix_log(ops4, ops4.identity()), std::domain_error);
  CHECK_THROWS_AS(matrix_exp(ops2, ops2.identity()), std::invalid_argument);
  Matrix notu = ops2.identity();
  notu.e[0] = 2;
  CHECK_THROWS_AS(matrix_log(ops2, notu), std::invalid_argument);
}

TEST_CASE("Lie algebras") {
  const auto h = lie_algebra_of(uspec(3, 5));
  CHECK(h.dimension() == 3);
  const auto e12 = *h.position_index(0, 1), e23 = *h.position_index(1, 2), e13 = *h.position_index(0, 2);
  Coords expect(3, 0);
  expect[e13] = 1;
  CHECK(h.structure_constants(e12, e23) == expect);
  expect[e13] = h.field().neg(1);
  CHECK(h.structure_constants(e23, e12) == expect);
  const Coords zero(3, 0);
  CHECK(h.structure_constants(e12, e13) == zero);
  CHECK(h.structure_constants(e23, e13) == zero);
  CHECK(h.structure_constants(e12, e12) == zero);
  CHECK(h.check_axioms());

  const auto u4 = lie_algebra_of(uspec(4, 5));
  CHECK(u4.dimension() == 6);
  CHECK(u4.check_axioms());
  CHECK(lie_algebra_of(uspec(4, 3)).check_axioms());
  CHECK(lie_algebra_of(GroupSpec{Scheme::U, 3, RingDescriptor::field(2, 2)}).check_axioms());

  CHECK_THROWS_AS(lie_algebra_of(GroupSpec{Scheme::SL, 2, RingDescriptor::field(5)}), std::invalid_argument);
  CHECK_THROWS_AS(lie_algebra_of(GroupSpec{Scheme::U, 3, RingDescriptor::galois_ring(5, 2)}), std::invalid_argument);
}

TEST_CASE("coadjoint orbits") {
  SUBCASE("abelian algebra") {
    auto g = groups::enumerate_group(GroupSpec{Scheme::U, 2, RingDescriptor::field(5)});
    const auto orbits = coadjoint_orbits(lie_algebra_of(g->spec()), *g);
    CHECK(orbits.size() == 5);
    for (const auto& o : orbits) CHECK(o.size() == 1);
  }
  SUBCASE("Heisenberg over F_3") {
    auto g = groups::enumerate_group(uspec(3, 3));
    const auto alg = lie_algebra_of(g->spec());
    const auto orbits = coadjoint_orbits(alg, *g);
    std::map<std::uint64_t, int> sizes;
    for (const auto& o : orbits) ++sizes[o.size()];
    CHECK(sizes == std::map<std::uint64_t, int>{{1, 9}, {9, 2}});
    CHECK(orbit_method_degrees(orbits) == chartab::DimensionMultiset{27, 11, {{1, 9}, {3, 2}}});
    // Orbits are closed under the action of every group element, not just generators.
    for (const auto& o : orbits)
      for (std::size_t x = 0; x < g->order(); ++x) {
        const auto img = encode_functional(alg, coadjoint_action(alg, g->element(x), decode_functional(alg, o.members[0])));
        REQUIRE(std::binary_search(o.members.begin(), o.members.end(), img));
      }
    const auto report = orbit_report(alg, orbits);
    CHECK(report.at("algebra_dim") == 3);
    CHECK(report.at("field") == "F_3");
    CHECK(report.at("degrees").dump() == "[[1,9],[3,2]]");
    CHECK(report.at("orbit_sizes").size() == 11);
  }
  SUBCASE("Heisenberg over F_5") {
    auto g = groups::enumerate_group(uspec(3, 5));
    const auto orbits = coadjoint_orbits(lie_algebra_of(g->spec()), *g);
    CHECK(orbit_method_degrees(orbits) == chartab::DimensionMultiset{125, 29, {{1, 25}, {5, 4}}});
  }
  SUBCASE("budget") {
    auto g = groups::enumerate_group(uspec(4, 3));
    CHECK_THROWS_AS(coadjoint_orbits(lie_algebra_of(g->spec()), *g, 100), BudgetExceeded);
  }
}

TEST_CASE("orbit/class bijection and degree agreement") {
  for (unsigned n : {3u, 4u})
    for (std::uint32_t p : {3u, 5u, 7u}) {
      auto g = groups::enumerate_group(uspec(n, p));
      CAPTURE(g->spec().label());
      const auto orbits = coadjoint_orbits(lie_algebra_of(g->spec()), *g);
      const auto data = groups::conjugacy_classes(g);
      CHECK(orbits.size() == data.num_classes());
      std::uint64_t total = 0;
      for (const auto& o : orbits) {
        total += o.size();
        CHECK(g->order() % o.size() == 0);
      }
      CHECK(total == g->order());
      const auto km = orbit_method_degrees(orbits);
      CHECK_NOTHROW(km.check_invariants());
      for (const auto& [d, m] : km.degrees) {
        std::uint64_t x = d;
        while (x % p == 0) x /= p;
        CHECK(x == 1);
      }
      if (g->order() <= 20000) {
        chartab::ClassAlgebra alg(data);
        CHECK(km == chartab::dixon_degrees(alg));
      }
    }
}

TEST_CASE("cyclotomic values") {
  const auto z = CyclotomicValue::root_of_unity(5, 1);
  auto power = CyclotomicValue::rational(5, 1);
  for (int i = 0; i < 5; ++i) power = power * z;
  CHECK(power == CyclotomicValue::rational(5, 1));
  auto sum = CyclotomicValue(5);
  for (unsigned e = 0; e < 5; ++e) sum = sum + CyclotomicValue::root_of_unity(5, e);
  CHECK(sum.is_zero());
  CHECK((z * z.conj()) == CyclotomicValue::rational(5, 1));
  mpq_class q;
  CHECK((z + z.conj()).is_rational() == false);
  CHECK(CyclotomicValue::rational(3, mpq_class(7, 2)).is_rational(&q));
  CHECK(q == mpq_class(7, 2));
  CHECK(CyclotomicValue::from_exponent_counts(3, {2, 2, 2}).is_zero());
  CHECK(CyclotomicValue::from_exponent_counts(3, {4, 0, 0}, mpq_class(1, 2)) == CyclotomicValue::rational(3, 2));
  CHECK(CyclotomicValue::root_of_unity(2, 1) == CyclotomicValue::rational(2, -1));
}

TEST_CASE("Kirillov characters") {
  auto g = groups::enumerate_group(uspec(3, 3));
  const auto alg = lie_algebra_of(g->spec());
  const auto orbits = coadjoint_orbits(alg, *g);
  const AdditiveCharacter phi(alg.field_ptr());
  const std::size_t id = g->identity();
  for (const auto& o : orbits) {
    mpq_class v;
    REQUIRE(kirillov_character(alg, o, g->element(id), phi).is_rational(&v));
    CHECK(v * v == o.size());
    if (o.size() == 1) {
      for (std::size_t x = 0; x < g->order(); ++x) {
        const auto c = kirillov_character(alg, o, g->element(x), phi);
        bool root = false;
        for (unsigned e = 0; e < 3; ++e) root = root || c == CyclotomicValue::root_of_unity(3, e);
        REQUIRE(root);
      }
    } else {
      // central non-identity element: 3 zeta^c with c != 0
      Matrix zc = g->ops().identity();
      zc.e[2] = 1;
      const auto c = kirillov_character(alg, o, zc, phi);
      const bool ok = c == CyclotomicValue::root_of_unity(3, 1) * CyclotomicValue::rational(3, 3) ||
                      c == CyclotomicValue::root_of_unity(3, 2) * CyclotomicValue::rational(3, 3);
      CHECK(ok);
    }
  }
  CHECK_THROWS_AS(AdditiveCharacter(alg.field_ptr(), 0), std::invalid_argument);
}

TEST_CASE("row orthogonality") {
  for (std::uint32_t p : {3u, 5u}) {
    auto g = groups::enumerate_group(uspec(3, p));
    const auto alg = lie_algebra_of(g->spec());
    const auto orbits = coadjoint_orbits(alg, *g);
    const auto table = character_table(alg, *g, orbits, AdditiveCharacter(alg.field_ptr()));
    for (std::size_t a = 0; a < orbits.size(); ++a)
      for (std::size_t b = 0; b < orbits.size(); ++b) {
        CyclotomicValue s(p);
        for (std::size_t x = 0; x < g->order(); ++x) s = s + table[a][x] * table[b][x].conj();
        REQUIRE(s == CyclotomicValue::rational(p, a == b ? mpq_class(static_cast<unsigned long>(g->order())) : mpq_class(0)));
      }
  }
}

TEST_CASE("characters are class functions and independent of the additive character") {
  auto g = groups::enumerate_group(uspec(3, 5));
  const auto alg = lie_algebra_of(g->spec());
  const auto orbits = coadjoint_orbits(alg, *g);
  const auto t1 = character_table(alg, *g, orbits, AdditiveCharacter(alg.field_ptr(), 1));
  const auto t2 = character_table(alg, *g, orbits, AdditiveCharacter(alg.field_ptr(), 2));
  for (const auto& row : t1)
    for (std::size_t x = 0; x < g->order(); x += 3)
      for (std::size_t h = 0; h < g->order(); h += 7) {
        const std::size_t y = g->product(g->product(h, x), *g->inverse(h));
        REQUIRE(row[x] == row[y]);
      }
  // The second character permutes the orbits: same set of rows, same degrees.
  auto key = [](const std::vector<CyclotomicValue>& row) {
    std::string s;
    for (const auto& v : row) s += v.to_string() + ";";
    return s;
  };
  std::multiset<std::string> k1, k2;
  for (const auto& row : t1) k1.insert(key(row));
  for (const auto& row : t2) k2.insert(key(row));
  CHECK(k1 == k2);
}
