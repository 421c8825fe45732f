#include <doctest.h>

#include <random>

#include "repzeta/error.hpp"
#include "repzeta/zetatool/zeta.hpp"

using namespace repzeta;
using namespace repzeta::zetatool;

namespace {

DimensionMultiset ms(std::map<std::uint64_t, std::uint64_t> d) {
  DimensionMultiset m;
  m.degrees = std::move(d);
  m.classes = m.sum_of_multiplicities();
  m.order = m.sum_of_squares();
  return m;
}

DimensionMultiset random_multiset(std::mt19937_64& rng, std::uint64_t max_degree, std::size_t max_distinct) {
  std::map<std::uint64_t, std::uint64_t> d;
  const std::size_t n = 1 + rng() % max_distinct;
  while (d.size() < n) d[1 + rng() % max_degree] = 1 + rng() % 6;
  return ms(d);
}

}  // namespace

TEST_CASE("zeta evaluation") {
  const auto h = ms({{1, 9}, {3, 2}});
  CHECK(zeta_exact(h, 0) == 11);
  CHECK(zeta_exact(h, 2) == mpq_class(83, 9));
  CHECK(zeta_exact(h, -2) == 27);
  const auto ab = ms({{1, 12}});
  for (long s : {-4L, -2L, 0L, 2L, 7L}) CHECK(zeta_exact(ab, s) == 12);
  CHECK(zeta_real(h, mpq_class(2)).to_double() == doctest::Approx(83.0 / 9.0).epsilon(1e-15));
  CHECK(zeta_real(h, mpq_class(1, 2)).to_double() == doctest::Approx(9 + 2 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("difference semi-polynomials") {
  const auto h = ms({{1, 9}, {3, 2}});
  CHECK(difference_semipoly(h, h).empty());
  const auto sp = difference_semipoly(ms({{2, 2}}), ms({{1, 1}, {4, 1}}));
  REQUIRE(sp.size() == 3);
  CHECK(sp.terms()[0].d == 1);
  CHECK(sp.terms()[0].coeff == -1);
  CHECK(sp.terms()[1].d == 2);
  CHECK(sp.terms()[1].coeff == 2);
  CHECK(sp.terms()[2].d == 4);
  CHECK(sp.terms()[2].coeff == -1);
  CHECK(SemiPolynomial({{mpq_class(1), 5}, {mpq_class(-1), 5}}).empty());
  CHECK_THROWS_AS(SemiPolynomial({{mpq_class(1), 0}}), std::invalid_argument);
}

TEST_CASE("Descartes bound") {
  CHECK(descartes_bound(SemiPolynomial({{mpq_class(1), 1}, {mpq_class(3), 2}, {mpq_class(1, 2), 7}})) == 0);
  CHECK(probe_positive_roots(SemiPolynomial({{mpq_class(1), 1}, {mpq_class(3), 2}})).count() == 0);
  // u - 1, coefficients ordered by exponent: -1 (u^0), +1 (u^1).
  CHECK(descartes_bound(std::vector<mpq_class>{-1, 1}) == 2);
  // -1 + 2x - x^2 with x = u^(-log 2): one root, u = 1.
  const SemiPolynomial sq({{mpq_class(-1), 1}, {mpq_class(2), 2}, {mpq_class(-1), 4}});
  CHECK(descartes_bound(sq) == 4);
  const auto probe = probe_positive_roots(sq);
  CHECK(probe.count() == 1);
  REQUIRE(probe.zeros.size() == 1);
  CHECK(probe.zeros[0] == 1);
  // 2 - 3x + x^2 with x = u^(-log 2): roots x = 1, 2.
  const SemiPolynomial two({{mpq_class(2), 1}, {mpq_class(-3), 2}, {mpq_class(1), 4}});
  const auto p2 = probe_positive_roots(two);
  CHECK(p2.count() == 2);
  CHECK(p2.count() <= descartes_bound(two));
  CHECK(probe_positive_roots(SemiPolynomial()).identically_zero);
}

TEST_CASE("certified sign") {
  const SemiPolynomial sq({{mpq_class(-1), 1}, {mpq_class(2), 2}, {mpq_class(-1), 4}});
  CHECK(certified_sign(sq, mpq_class(1)) == 0);
  CHECK(certified_sign(sq, mpq_class(3, 2)) == -1);
  CHECK(certified_sign(sq, mpq_class(1, 3)) == -1);
  // Near-cancelling point: 1 - u^(-log 2) at u slightly above 1.
  const SemiPolynomial lin({{mpq_class(1), 1}, {mpq_class(-1), 2}});
  CHECK(certified_sign(lin, mpq_class(1000001, 1000000)) == 1);
  CHECK(certified_sign(lin, mpq_class(999999, 1000000)) == -1);
}

TEST_CASE("root-count soundness on random differences") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_multiset(rng, 30, 4), b = random_multiset(rng, 30, 4);
    const auto sp = difference_semipoly(a, b);
    const auto probe = probe_positive_roots(sp, 256, 8);
    CAPTURE(sp.to_string());
    CHECK(probe.count() <= descartes_bound(sp));
  }
}

TEST_CASE("equivalence check") {
  const auto h = ms({{1, 9}, {3, 2}});
  for (Mode m : {Mode::Direct, Mode::Prop21}) {
    const auto v = check_equivalence(h, h, m);
    CHECK(v.equal);
    CHECK(!v.witness_s);
    CHECK(v.n1 == 2);
  }
  const auto v = check_equivalence(h, h, Mode::Prop21);
  CHECK(v.points == std::vector<long>{0, 2, 4, 6, 8, 10, 12, 14, 16});
  const auto a = ms({{1, 4}}), b = ms({{1, 2}, {2, 1}});
  auto [d, p] = check_equivalence_both(a, b);
  CHECK(!d.equal);
  CHECK(!p.equal);
  CHECK(d.witness_s == -2);
  CHECK(p.witness_s == -2);
  // Same order, same class count: first difference at s = 2.
  const auto c = ms({{1, 2}, {5, 1}}), e = ms({{3, 3}});
  REQUIRE(c.order == e.order);
  REQUIRE(c.classes == e.classes);
  for (Mode m : {Mode::Direct, Mode::Prop21}) {
    const auto w = check_equivalence(c, e, m);
    CHECK(!w.equal);
    CHECK(w.witness_s == 2);
  }
  nlohmann::json j = d;
  CHECK(j.dump() == R"({"equal":false,"mode":"direct","n1":1,"n2":2,"points":[],"witness_s":-2})");
}

TEST_CASE("finite-evaluation verdict matches direct comparison") {
  // Moves {a:x, b:y} -> {c:x+y} with x a^2 + y b^2 = (x+y) c^2 keep order and class count.
  struct Move { std::uint64_t a, x, b, y, c; };
  std::vector<Move> moves;
  for (std::uint64_t a = 1; a <= 64; ++a)
    for (std::uint64_t c = a + 1; c <= 64; ++c)
      for (std::uint64_t b = c + 1; b <= 64; ++b)
        for (std::uint64_t x = 1; x <= 6; ++x)
          for (std::uint64_t y = 1; y <= 6; ++y)
            if (x * a * a + y * b * b == (x + y) * c * c) moves.push_back({a, x, b, y, c});
  REQUIRE(!moves.empty());

  std::mt19937_64 rng(20240611);
  int equal_pairs = 0, near_misses = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    DimensionMultiset a = random_multiset(rng, 64, 3), b;
    switch (trial % 3) {
      case 0: b = a; break;
      case 1: b = random_multiset(rng, 64, 3); break;
      default: {
        const Move& mv = moves[rng() % moves.size()];
        std::map<std::uint64_t, std::uint64_t> lhs{{mv.a, mv.x}, {mv.b, mv.y}}, rhs{{mv.c, mv.x + mv.y}};
        if (rng() % 2) {
          // a shared extra degree keeps both sides within three distinct degrees
          const std::uint64_t extra = 1 + rng() % 64, mult = 1 + rng() % 6;
          lhs[extra] += mult;
          rhs[extra] += mult;
        }
        a = ms(lhs);
        b = ms(rhs);
        if (trial % 2) std::swap(a, b);
        if (a.order == b.order && a.classes == b.classes) ++near_misses;
      }
    }
    REQUIRE(a.distinct() <= 3);
    REQUIRE(b.distinct() <= 3);
    const auto d = check_equivalence(a, b, Mode::Direct);
    const auto p = check_equivalence(a, b, Mode::Prop21);
    REQUIRE(d.equal == p.equal);
    if (d.equal) ++equal_pairs;
  }
  CHECK(equal_pairs >= 3333);
  CHECK(near_misses > 3000);
}

TEST_CASE("sigma sets") {
  CHECK(sigma_set({1}, 3) == std::set<std::uint64_t>{1, 2, 3});
  CHECK(sigma_set({1, 2}, 2) == std::set<std::uint64_t>{1, 2, 3, 4});
  const auto s = sigma_set({2, 3, 5}, 3);
  CHECK(s.size() <= 81);
  CHECK(s == std::set<std::uint64_t>{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15});
  CHECK_THROWS_AS(sigma_set({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(sigma_set({1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(sigma_set({1, 1000, 1000000}, 50, 100), BudgetExceeded);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::set<std::uint64_t> a;
    const std::size_t n = 1 + rng() % 4;
    while (a.size() < n) a.insert(1 + rng() % 100);
    const std::uint64_t m = 1 + rng() % 4;
    std::uint64_t bound = m;
    for (std::uint64_t i = 0; i < m; ++i) bound *= a.size();
    CHECK(sigma_set(a, m).size() <= bound);
  }
}
