#include "repzeta/chartab/frobenius.hpp"

#include "repzeta/error.hpp"
#include "repzeta/rings/modular.hpp"

namespace repzeta::chartab {

namespace {

mpz_class from_u128(unsigned __int128 v) {
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

}  // namespace

CommutatorDistribution commutator_distribution(const groups::ConjugacyData& data, std::uint64_t budget) {
  const std::size_t r = data.num_classes();
  const std::uint64_t order = data.order();
  if (order * r > budget)
    throw BudgetExceeded("commutator distribution needs " + std::to_string(order * r) + " group operations");
  const auto& g = *data.group();
  const auto& cls = data.class_of_element();
  CommutatorDistribution out;
  out.values.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t gk = data.cls(k).representative;
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < order; ++x) {
      const std::uint32_t c = cls[x];
      if (cls[g.product(x, gk)] == c) total += data.cls(c).centralizer_order;
    }
    out.values[k] = mpz_class(static_cast<unsigned long>(total));
  }
  return out;
}

FrobeniusCounter::FrobeniusCounter(const ClassAlgebra& algebra, CommutatorDistribution dist)
    : r_(algebra.r()), order_(algebra.order()), dist_(std::move(dist)) {
  if (dist_.values.size() != r_) throw std::invalid_argument("commutator distribution has the wrong length");
  const auto& data = algebra.data();
  const auto& g = *data.group();
  const auto& cls = data.class_of_element();
  std::vector<unsigned __int128> f(r_);
  for (std::size_t c = 0; c < r_; ++c) {
    if (!dist_.values[c].fits_ulong_p()) throw BudgetExceeded("commutator counts exceed 64 bits");
    f[c] = dist_.values[c].get_ui();
  }
  std::vector<std::size_t> inverse_of(r_);
  for (std::size_t c = 0; c < r_; ++c) inverse_of[c] = algebra.inverse_class(c);
  op_.resize(r_ * r_);
  std::vector<unsigned __int128> row(r_);
  for (std::size_t k = 0; k < r_; ++k) {
    std::fill(row.begin(), row.end(), 0);
    const std::size_t gk = algebra.representative(k);
    // y = x^-1 ranges over G: f(class(y g_k)) goes to the class of x, the inverse class of y.
    for (std::size_t y = 0; y < order_; ++y) row[inverse_of[cls[y]]] += f[cls[g.product(y, gk)]];
    for (std::size_t i = 0; i < r_; ++i) op_[k * r_ + i] = from_u128(row[i]);
  }
  current_ = dist_.values;
  counts_.push_back(current_[0]);
}

const mpz_class& FrobeniusCounter::word_count(std::size_t n) {
  if (n == 0) throw std::invalid_argument("word_count: n must be positive");
  std::vector<mpz_class> next(r_);
  while (counts_.size() < n) {
    for (std::size_t k = 0; k < r_; ++k) {
      mpz_class acc = 0;
      for (std::size_t i = 0; i < r_; ++i) mpz_addmul(acc.get_mpz_t(), op_[k * r_ + i].get_mpz_t(), current_[i].get_mpz_t());
      next[k] = std::move(acc);
    }
    current_.swap(next);
    counts_.push_back(current_[0]);
  }
  return counts_[n - 1];
}

mpq_class FrobeniusCounter::zeta(long m) {
  if (m < -1) throw std::invalid_argument("frobenius zeta: m must be at least -1");
  if (m == -1) return mpq_class(static_cast<unsigned long>(order_));
  if (m == 0) return mpq_class(static_cast<unsigned long>(r_));
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), order_, static_cast<unsigned long>(2 * m + 1));
  mpq_class z(word_count(static_cast<std::size_t>(m) + 1), denom);
  z.canonicalize();
  return z;
}

mpq_class frobenius_zeta(const ClassAlgebra& algebra, const CommutatorDistribution& dist, long m) {
  if (m < -1) throw std::invalid_argument("frobenius zeta: m must be at least -1");
  if (m == -1) return mpq_class(static_cast<unsigned long>(algebra.order()));
  if (m == 0) return mpq_class(static_cast<unsigned long>(algebra.r()));
  FrobeniusCounter counter(algebra, dist);
  return counter.zeta(m);
}

DimensionMultiset degrees_from_zeta(FrobeniusCounter& counter, std::uint64_t order, std::uint64_t classes,
                                    const ZetaInversionOptions& options) {
  std::vector<std::uint64_t> cand;
  for (std::uint64_t d : rings::divisors(order))
    if (d * d <= order) cand.push_back(d);
  const std::size_t n = cand.size();
  if (n > options.max_candidates)
    throw BudgetExceeded(std::to_string(n) + " candidate degrees exceed the limit " + std::to_string(options.max_candidates));

  std::vector<mpq_class> zeta(n);
  for (std::size_t m = 0; m < n; ++m) zeta[m] = counter.zeta(static_cast<long>(m));

  // m_d = sum_m c_{d,m} zeta(2m), where sum_m c_{d,m} x^m is the Lagrange basis polynomial
  // of the node x_d = d^-2.
  std::vector<mpq_class> x(n);
  for (std::size_t a = 0; a < n; ++a) x[a] = mpq_class(1, static_cast<unsigned long>(cand[a] * cand[a]));
  // full(x) = prod_a (x - x_a), coefficients low to high.
  std::vector<mpq_class> full(n + 1, 0);
  full[0] = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t t = a + 1; t > 0; --t) full[t] = full[t - 1] - x[a] * full[t];
    full[0] = -x[a] * full[0];
  }
  DimensionMultiset out;
  out.order = order;
  out.classes = classes;
  std::vector<mpq_class> quot(n);
  for (std::size_t a = 0; a < n; ++a) {
    // quot = full / (x - x_a) by synthetic division.
    mpq_class carry = 0;
    for (std::size_t t = n; t > 0; --t) {
      carry = full[t] + carry * x[a];
      quot[t - 1] = carry;
    }
    mpq_class denom = 1;
    for (std::size_t b = 0; b < n; ++b)
      if (b != a) denom *= x[a] - x[b];
    mpq_class md = 0;
    for (std::size_t m = 0; m < n; ++m) md += quot[m] * zeta[m];
    md /= denom;
    if (md.get_den() != 1 || md < 0)
      throw MathError("zeta inversion: non-integral multiplicity " + md.get_str() + " for degree " + std::to_string(cand[a]));
    if (md != 0) {
      if (!md.get_num().fits_ulong_p()) throw MathError("zeta inversion: multiplicity overflow");
      out.degrees[cand[a]] = md.get_num().get_ui();
    }
  }
  out.check_invariants();
  return out;
}

DimensionMultiset degrees_from_zeta(const ClassAlgebra& algebra, const CommutatorDistribution& dist,
                                    const ZetaInversionOptions& options) {
  FrobeniusCounter counter(algebra, dist);
  return degrees_from_zeta(counter, algebra.order(), algebra.r(), options);
}

}  // namespace repzeta::chartab
