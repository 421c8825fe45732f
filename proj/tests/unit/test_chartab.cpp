#include <doctest.h>

#include <memory>

#include "repzeta/chartab/class_algebra.hpp"
#include "repzeta/chartab/dixon.hpp"
#include "repzeta/chartab/frobenius.hpp"
#include "repzeta/error.hpp"

using namespace repzeta;
using namespace repzeta::chartab;
using groups::GroupSpec;
using groups::Scheme;
using rings::RingDescriptor;

namespace {

struct Built {
  groups::GroupPtr group;
  std::unique_ptr<groups::ConjugacyData> data;
  std::unique_ptr<ClassAlgebra> algebra;
};

Built build(Scheme s, std::uint32_t n, RingDescriptor r) {
  Built b;
  b.group = groups::enumerate_group(GroupSpec{s, n, std::move(r)});
  b.data = std::make_unique<groups::ConjugacyData>(groups::conjugacy_classes(b.group));
  b.algebra = std::make_unique<ClassAlgebra>(*b.data);
  return b;
}

DimensionMultiset ms(std::uint64_t order, std::uint64_t classes, std::map<std::uint64_t, std::uint64_t> d) {
  return DimensionMultiset{order, classes, std::move(d)};
}

std::size_t commutator(const groups::FiniteGroup& g, std::size_t x, std::size_t y) {
  return g.product(g.product(*g.inverse(x), *g.inverse(y)), g.product(x, y));
}

/// c(g) = #{(x, y) : [x, y] = g} by double loop.
std::vector<std::uint64_t> brute_force_commutator_counts(const groups::FiniteGroup& g) {
  std::vector<std::uint64_t> c(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) ++c[commutator(g, x, y)];
  return c;
}

/// #{[x1,y1][x2,y2] = 1} = sum_g c(g) c(g^-1).
std::uint64_t brute_force_n2(const groups::FiniteGroup& g) {
  const auto c = brute_force_commutator_counts(g);
  std::uint64_t n = 0;
  for (std::size_t x = 0; x < g.order(); ++x) n += c[x] * c[*g.inverse(x)];
  return n;
}

/// Number of linear characters |G / [G, G]|, with the derived subgroup found by closure.
std::uint64_t brute_force_linear_characters(const groups::FiniteGroup& g) {
  std::vector<std::size_t> gens;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      const std::size_t c = commutator(g, x, y);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return g.order() / groups::generated_order(g, gens);
}

}  // namespace

TEST_CASE("class algebra of the cyclic group of order 3") {
  auto b = build(Scheme::U, 2, RingDescriptor::field(3));
  REQUIRE(b.algebra->r() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(b.algebra->coefficient(i, j, k) == ((i + j) % 3 == k ? 1u : 0u));
}

TEST_CASE("class algebra structure") {
  for (auto [s, n, r] : std::vector<std::tuple<Scheme, std::uint32_t, RingDescriptor>>{
           {Scheme::Heisenberg, 3, RingDescriptor::field(3)},
           {Scheme::GL, 2, RingDescriptor::field(3)},
           {Scheme::SL, 2, RingDescriptor::field(5)}}) {
    auto b = build(s, n, r);
    const auto& alg = *b.algebra;
    const std::size_t rr = alg.r();
    CAPTURE(b.group->spec().label());
    const auto m0 = alg.matrix(0);
    for (std::size_t k = 0; k < rr; ++k)
      for (std::size_t j = 0; j < rr; ++j) CHECK(m0[k * rr + j] == (k == j ? 1u : 0u));
    std::vector<std::vector<std::uint64_t>> mats;
    for (std::size_t i = 0; i < rr; ++i) mats.push_back(alg.matrix(i));
    const auto& g = *b.group;
    for (std::size_t i = 0; i < rr; ++i)
      for (std::size_t j = 0; j < rr; ++j) {
        // a_ijk |C_k| = #{(x, y) in C_i x C_j : xy in C_k}
        std::vector<std::uint64_t> count(rr, 0);
        for (auto x : alg.members(i))
          for (auto y : alg.members(j)) ++count[b.data->class_of(g.product(x, y))];
        std::uint64_t total = 0;
        for (std::size_t k = 0; k < rr; ++k) {
          REQUIRE(mats[i][k * rr + j] * alg.class_size(k) == count[k]);
          total += mats[i][k * rr + j] * alg.class_size(k);
        }
        CHECK(total == alg.class_size(i) * alg.class_size(j));
      }
    // M_i pairwise commute.
    for (std::size_t i = 0; i < rr; ++i)
      for (std::size_t j = i + 1; j < rr; ++j)
        for (std::size_t a = 0; a < rr; ++a)
          for (std::size_t c = 0; c < rr; ++c) {
            std::uint64_t ab = 0, ba = 0;
            for (std::size_t t = 0; t < rr; ++t) {
              ab += mats[i][a * rr + t] * mats[j][t * rr + c];
              ba += mats[j][a * rr + t] * mats[i][t * rr + c];
            }
            REQUIRE(ab == ba);
          }
  }
}

TEST_CASE("class algebra budget") {
  auto g = groups::enumerate_group(GroupSpec{Scheme::GL, 2, RingDescriptor::field(3)});
  auto d = groups::conjugacy_classes(g);
  AlgebraOptions opt;
  opt.budget = 100;
  CHECK_THROWS_AS(ClassAlgebra(d, opt), BudgetExceeded);
  opt = {};
  opt.max_classes = 4;
  CHECK_THROWS_AS(ClassAlgebra(d, opt), BudgetExceeded);
}

TEST_CASE("Dixon prime") {
  CHECK(dixon_prime(27, 3) == 31);
  CHECK(dixon_prime(120, 30) == 151);
  CHECK(dixon_prime(1, 1) == 2);
  const std::uint64_t l = dixon_prime(300000, 600);
  CHECK(l > 300000);
  CHECK(l % 600 == 1);
}

TEST_CASE("Dixon degrees") {
  SUBCASE("abelian") {
    auto b = build(Scheme::Diagonal, 2, RingDescriptor::field(5));
    CHECK(dixon_degrees(*b.algebra) == ms(16, 16, {{1, 16}}));
    auto t = build(Scheme::U, 1, RingDescriptor::field(5));
    CHECK(dixon_degrees(*t.algebra) == ms(1, 1, {{1, 1}}));
  }
  SUBCASE("Heisenberg over F_3") {
    auto b = build(Scheme::Heisenberg, 3, RingDescriptor::field(3));
    CHECK(brute_force_linear_characters(*b.group) == 9);  // 9 linear, 2 more with 2 d^2 = 18
    CHECK(dixon_degrees(*b.algebra) == ms(27, 11, {{1, 9}, {3, 2}}));
  }
  SUBCASE("classical tables") {
    auto sl = build(Scheme::SL, 2, RingDescriptor::field(5));
    const auto d = dixon_degrees(*sl.algebra);
    CHECK(d == ms(120, 9, {{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}}));
    CHECK(brute_force_linear_characters(*sl.group) == d.degrees.at(1));
    auto gl = build(Scheme::GL, 2, RingDescriptor::field(3));
    CHECK(dixon_degrees(*gl.algebra) == ms(48, 8, {{1, 2}, {2, 3}, {3, 2}, {4, 1}}));
    auto sl3 = build(Scheme::SL, 2, RingDescriptor::field(3));
    CHECK(dixon_degrees(*sl3.algebra) == ms(24, 7, {{1, 3}, {2, 3}, {3, 1}}));
  }
  SUBCASE("central characters are eigenvectors") {
    auto b = build(Scheme::GL, 2, RingDescriptor::field(3));
    const auto chars = central_characters(*b.algebra);
    const std::size_t r = b.algebra->r();
    const std::uint64_t l = chars.prime;
    CHECK(chars.omega.size() == r);
    for (std::size_t i = 0; i < r; ++i) {
      const auto a = b.algebra->transposed_matrix(i);
      for (const auto& w : chars.omega) {
        CHECK(w[0] == 1);
        for (std::size_t j = 0; j < r; ++j) {
          std::uint64_t s = 0;
          for (std::size_t k = 0; k < r; ++k) s = (s + a[j * r + k] * w[k]) % l;
          REQUIRE(s == w[i] * w[j] % l);
        }
      }
    }
  }
}

TEST_CASE("commutator distribution") {
  SUBCASE("abelian") {
    auto b = build(Scheme::Diagonal, 2, RingDescriptor::field(3));
    const auto f = commutator_distribution(*b.data);
    CHECK(f.values[0] == 16);
    for (std::size_t k = 1; k < f.values.size(); ++k) CHECK(f.values[k] == 0);
  }
  for (auto [s, n, r] : std::vector<std::tuple<Scheme, std::uint32_t, RingDescriptor>>{
           {Scheme::Heisenberg, 3, RingDescriptor::field(3)},
           {Scheme::GL, 2, RingDescriptor::field(3)},
           {Scheme::SL, 2, RingDescriptor::field(5)}}) {
    auto b = build(s, n, r);
    CAPTURE(b.group->spec().label());
    const auto f = commutator_distribution(*b.data);
    const auto c = brute_force_commutator_counts(*b.group);
    mpz_class total = 0;
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      CHECK(f.values[k] == c[b.algebra->representative(k)]);
      total += f.values[k] * b.algebra->class_size(k);
    }
    CHECK(total == b.group->order() * b.group->order());
    CHECK(f.values[0] == groups::commuting_pair_count(*b.data));
  }
}

TEST_CASE("Frobenius zeta values") {
  auto h = build(Scheme::Heisenberg, 3, RingDescriptor::field(3));
  const auto f = commutator_distribution(*h.data);
  CHECK(frobenius_zeta(*h.algebra, f, -1) == 27);
  CHECK(frobenius_zeta(*h.algebra, f, 0) == 11);
  CHECK(frobenius_zeta(*h.algebra, f, 1) == mpq_class(83, 9));
  FrobeniusCounter counter(*h.algebra, f);
  CHECK(counter.word_count(1) == 27 * 11);
  CHECK(counter.word_count(2) == 181521);  // (83/9) 27^3
  CHECK(counter.word_count(2) == brute_force_n2(*h.group));
  CHECK(counter.zeta(2) == mpq_class(9 * 81 + 2, 81));
  CHECK_THROWS_AS(counter.zeta(-2), std::invalid_argument);

  auto a = build(Scheme::Diagonal, 2, RingDescriptor::field(5));
  const auto fa = commutator_distribution(*a.data);
  FrobeniusCounter ca(*a.algebra, fa);
  for (long m = -1; m <= 4; ++m) CHECK(ca.zeta(m) == 16);

  auto sl = build(Scheme::SL, 2, RingDescriptor::field(5));
  FrobeniusCounter cs(*sl.algebra, commutator_distribution(*sl.data));
  CHECK(cs.word_count(2) == brute_force_n2(*sl.group));
  // 1 + 2/4 + 2/9 + 2/16 + 1/25 + 1/36
  CHECK(cs.zeta(1) == mpq_class(1) + mpq_class(1, 2) + mpq_class(2, 9) + mpq_class(1, 8) + mpq_class(1, 25) +
                          mpq_class(1, 36));
}

TEST_CASE("degrees from zeta") {
  auto t = build(Scheme::U, 1, RingDescriptor::field(3));
  CHECK(degrees_from_zeta(*t.algebra, commutator_distribution(*t.data)) == ms(1, 1, {{1, 1}}));
  auto c6 = build(Scheme::GL, 1, RingDescriptor::field(7));
  CHECK(degrees_from_zeta(*c6.algebra, commutator_distribution(*c6.data)) == ms(6, 6, {{1, 6}}));
  auto h = build(Scheme::Heisenberg, 3, RingDescriptor::field(3));
  CHECK(degrees_from_zeta(*h.algebra, commutator_distribution(*h.data)) == ms(27, 11, {{1, 9}, {3, 2}}));
}

TEST_CASE("method agreement and structural identities") {
  for (auto [s, n, r] : std::vector<std::tuple<Scheme, std::uint32_t, RingDescriptor>>{
           {Scheme::SL, 2, RingDescriptor::field(3)},
           {Scheme::SL, 2, RingDescriptor::field(7)},
           {Scheme::GL, 2, RingDescriptor::field(5)},
           {Scheme::GL, 2, RingDescriptor::field(2, 2)},
           {Scheme::U, 3, RingDescriptor::field(5)},
           {Scheme::U, 4, RingDescriptor::field(3)},
           {Scheme::SL, 2, RingDescriptor::galois_ring(3, 2)},
           {Scheme::SL, 2, RingDescriptor::truncated_poly(3, 2)},
           {Scheme::GL, 2, RingDescriptor::galois_ring(2, 2)},
           {Scheme::U, 3, RingDescriptor::galois_ring(3, 2)}}) {
    auto b = build(s, n, r);
    CAPTURE(b.group->spec().label());
    const auto d1 = dixon_degrees(*b.algebra);
    const auto d2 = degrees_from_zeta(*b.algebra, commutator_distribution(*b.data));
    CHECK(d1 == d2);
    CHECK_NOTHROW(d1.check_invariants());
    CHECK(d1.order == b.group->order());
    CHECK(d1.classes == b.data->num_classes());
  }
}

TEST_CASE("multiset JSON and invariants") {
  const auto m = ms(27, 11, {{1, 9}, {3, 2}});
  nlohmann::json j = m;
  CHECK(j.dump() == R"({"classes":11,"degrees":[[1,9],[3,2]],"order":27})");
  CHECK(j.get<DimensionMultiset>() == m);
  CHECK(m.to_string() == "{1:9, 3:2}");
  CHECK(m.distinct() == 2);
  CHECK_THROWS_AS(ms(27, 10, {{1, 9}, {3, 2}}).check_invariants(), MathError);
  CHECK_THROWS_AS(ms(28, 12, {{1, 10}, {3, 2}}).check_invariants(), MathError);
  CHECK_NOTHROW(ms(8, 5, {{1, 4}, {2, 1}}).check_invariants());
  CHECK_THROWS_AS(ms(10, 2, {{1, 1}, {3, 1}}).check_invariants(), MathError);
}
