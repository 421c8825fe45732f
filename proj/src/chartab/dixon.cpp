#include "repzeta/chartab/dixon.hpp"

#include <algorithm>
#include <random>

#include "mod_linalg.hpp"
#include "repzeta/error.hpp"
#include "repzeta/rings/modular.hpp"

namespace repzeta::chartab {

using detail::ModMatrix;

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent) {
  if (order == 0 || exponent == 0) throw std::invalid_argument("dixon_prime: zero order or exponent");
  for (std::uint64_t t = (order - 1) / exponent + 1;; ++t) {
    const std::uint64_t l = t * exponent + 1;
    if (rings::is_prime(l)) {
      if (l >= (1ULL << 32)) throw BudgetExceeded("Dixon prime exceeds 32 bits");
      return l;
    }
  }
}

namespace {

struct Subspace {
  ModMatrix basis;  // r x d, reduced column echelon
  std::vector<std::size_t> pivots;
};

bool is_scalar(const ModMatrix& m) {
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if ((i == j && m(i, j) != m(0, 0)) || (i != j && m(i, j) != 0)) return false;
  return true;
}

}  // namespace

CentralCharacters central_characters(const ClassAlgebra& algebra) {
  const std::size_t r = algebra.r();
  const std::uint64_t l = dixon_prime(algebra.order(), algebra.data().exponent());
  std::mt19937_64 rng(0xd1c5);

  std::vector<Subspace> done, open;
  {
    Subspace all{ModMatrix(r, r), {}};
    for (std::size_t i = 0; i < r; ++i) {
      all.basis(i, i) = 1;
      all.pivots.push_back(i);
    }
    (r == 1 ? done : open).push_back(std::move(all));
  }

  for (std::size_t i = 1; i < r && !open.empty(); ++i) {
    // A(j, k) = a_ijk: class sums act on central characters as A omega = omega_i omega.
    const std::vector<std::uint64_t> a = algebra.transposed_matrix(i);
    std::vector<Subspace> next;
    for (Subspace& s : open) {
      const std::size_t d = s.pivots.size();
      ModMatrix restricted(d, d);
      for (std::size_t row = 0; row < d; ++row) {
        const std::uint64_t* arow = a.data() + s.pivots[row] * r;
        for (std::size_t k = 0; k < r; ++k) {
          const std::uint64_t u = arow[k] % l;
          if (u == 0) continue;
          for (std::size_t c = 0; c < d; ++c) restricted(row, c) = (restricted(row, c) + u * s.basis(k, c)) % l;
        }
      }
      if (is_scalar(restricted)) {
        next.push_back(std::move(s));
        continue;
      }
      ModMatrix h, q;
      detail::hessenberg(restricted, l, h, q);
      const auto roots = rings::distinct_roots(detail::hessenberg_charpoly(h, l), rng);
      std::size_t found = 0;
      for (std::uint64_t lambda : roots) {
        ModMatrix shifted = h;
        for (std::size_t t = 0; t < d; ++t) shifted(t, t) = (shifted(t, t) + l - lambda) % l;
        const ModMatrix kernel = detail::null_space(std::move(shifted), l);
        if (kernel.cols == 0) throw MathError("class algebra: eigenvalue without eigenvector");
        found += kernel.cols;
        Subspace part;
        part.basis = detail::column_echelon(detail::multiply(s.basis, detail::multiply(q, kernel, l), l), l, part.pivots);
        (part.pivots.size() == 1 ? done : next).push_back(std::move(part));
      }
      if (found != d) throw MathError("class algebra: restricted class matrix is not split semisimple over F_l");
    }
    open = std::move(next);
  }
  if (!open.empty()) throw MathError("class algebra: eigenspace refinement did not reach dimension one");

  CentralCharacters out;
  out.prime = l;
  for (const Subspace& s : done) {
    std::vector<std::uint64_t> w(r);
    const std::uint64_t v0 = s.basis(0, 0);
    if (v0 == 0) throw MathError("class algebra: eigenvector vanishes on the identity class");
    const std::uint64_t inv = rings::inv_mod(v0, l);
    for (std::size_t i = 0; i < r; ++i) w[i] = s.basis(i, 0) * inv % l;
    out.omega.push_back(std::move(w));
  }
  std::sort(out.omega.begin(), out.omega.end());
  return out;
}

DimensionMultiset dixon_degrees(const ClassAlgebra& algebra, const CentralCharacters& chars) {
  const std::uint64_t l = chars.prime;
  const std::uint64_t order = algebra.order();
  DimensionMultiset out;
  out.order = order;
  out.classes = algebra.r();
  for (const auto& w : chars.omega) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < algebra.r(); ++i) {
      const std::uint64_t term = w[i] * w[algebra.inverse_class(i)] % l;
      s = (s + term * rings::inv_mod(algebra.class_size(i) % l, l)) % l;
    }
    if (s == 0) throw MathError("Dixon: vanishing norm for a central character");
    const std::uint64_t d2 = order % l * rings::inv_mod(s, l) % l;
    const std::uint64_t d = rings::isqrt(d2);
    if (d * d != d2) throw MathError("Dixon: squared degree " + std::to_string(d2) + " is not a perfect square");
    if (d == 0 || order % d != 0) throw MathError("Dixon: degree " + std::to_string(d) + " does not divide |G|");
    ++out.degrees[d];
  }
  out.check_invariants();
  return out;
}

DimensionMultiset dixon_degrees(const ClassAlgebra& algebra) {
  return dixon_degrees(algebra, central_characters(algebra));
}

}  // namespace repzeta::chartab
