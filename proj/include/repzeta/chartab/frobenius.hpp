#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "repzeta/chartab/class_algebra.hpp"
#include "repzeta/chartab/dimension_multiset.hpp"

namespace repzeta::chartab {

/// f(C) = #{(x, y) in G^2 : [x, y] = g} for g in C, per class.
struct CommutatorDistribution {
  std::vector<mpz_class> values;
};

/// f(C_k) = sum over x with x g_k conjugate to x of |C_G(x)|. One O(|G| r) pass.
CommutatorDistribution commutator_distribution(const groups::ConjugacyData& data,
                                               std::uint64_t budget = groups::kDefaultSweepBudget);

/// Repeated convolution with f. T(k, i) = sum_{x in C_i} f(class(x^-1 g_k)) so that
/// (v * f)(C_k) = sum_i v_i T(k, i). Word counts are cached as they are produced.
class FrobeniusCounter {
 public:
  FrobeniusCounter(const ClassAlgebra& algebra, CommutatorDistribution dist);

  const CommutatorDistribution& distribution() const { return dist_; }
  /// Entry T(k, i) of the convolution operator.
  const mpz_class& op(std::size_t k, std::size_t i) const { return op_[k * r_ + i]; }

  /// N_n = #{(x_1, y_1, ..., x_n, y_n) : [x_1, y_1] ... [x_n, y_n] = 1}, n >= 1.
  const mpz_class& word_count(std::size_t n);
  /// zeta_G(2m) for m >= -1, exact.
  mpq_class zeta(long m);

 private:
  std::size_t r_;
  std::uint64_t order_;
  CommutatorDistribution dist_;
  std::vector<mpz_class> op_;
  std::vector<mpz_class> current_;  // f^{*n} per class, n = counts_.size()
  std::vector<mpz_class> counts_;
};

mpq_class frobenius_zeta(const ClassAlgebra& algebra, const CommutatorDistribution& dist, long m);

struct ZetaInversionOptions {
  std::size_t max_candidates = 512;
};

/// Solves sum_{d in D} m_d d^{-2m} = zeta_G(2m), m = 0 .. |D| - 1, exactly, where D lists the
/// divisors of |G| not exceeding sqrt |G|. Throws MathError on a non-integral solution.
DimensionMultiset degrees_from_zeta(const ClassAlgebra& algebra, const CommutatorDistribution& dist,
                                    const ZetaInversionOptions& options = {});
DimensionMultiset degrees_from_zeta(FrobeniusCounter& counter, std::uint64_t order, std::uint64_t classes,
                                    const ZetaInversionOptions& options = {});

}  // namespace repzeta::chartab
