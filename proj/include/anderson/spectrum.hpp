#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "anderson/loc_ideal.hpp"

namespace anderson {

/// Constructive evidence that nothing sits strictly between a top ideal
/// (M + X R[X])_A and the whole ring: for a sample x = f/g outside the
/// top, f(0) is outside M, so some y and m in M satisfy y*f(0) + m = 1.
/// Together with x - f(0)/g in the top this writes 1 as a combination of
/// the top and x.
struct MaximalityWitness {
  LocElem sample;
  RingElem f0;              // constant term of the numerator
  RingElem unit_cofactor;   // y
  RingElem ideal_part;      // m, in M
  bool verified;            // y*f0 + m == 1 re-evaluated
};

/// One verified chain P R[X]_A strictly inside (M + X R[X])_A, with X as
/// the separating element.
struct ChainVerification {
  std::size_t bottom_index;  // into extensions
  std::size_t top_index;     // into tops
  bool bottom_subset_top;
  bool separator_in_top;     // X in top, by the exact rule
  bool separator_in_bottom;  // X in bottom; false certifies strictness
  bool strict() const {
    return bottom_subset_top && separator_in_top && !separator_in_bottom;
  }
};

struct SpectrumReport {
  RingSpec ring;
  std::vector<IdealOfR> base_max_ideals;
  std::vector<IdealOfR> base_min_primes;
  /// P R[X]_A for each minimal prime P; the bottom layer.
  std::vector<LocIdeal> extensions;
  /// (M + X R[X])_A for each maximal M; the top layer.
  std::vector<LocIdeal> tops;
  std::vector<bool> tops_proper;  // 1 not a member, by the exact rule
  std::vector<std::vector<MaximalityWitness>> top_maximality;
  std::vector<ChainVerification> chains;
  bool tops_pairwise_incomparable;
  bool bottoms_pairwise_incomparable;
  /// Krull dimension of the localization; reported only when the base
  /// ring is zero-dimensional (always the case for finite rings).
  bool dimension_in_scope;
  int krull_dimension;
};

/// Builds and verifies the two-layer spectrum picture of the
/// A-localization: one top per maximal ideal of R, one bottom per
/// minimal prime, chains joined by X.
SpectrumReport maximal_spectrum(const RingSpec& ring, int samples = 8,
                                std::uint64_t seed = 1,
                                long long cap = kDefaultCap);

/// Residue map onto R/M for a top ideal: f/g evaluates to
/// f(0) * g(0)^{-1} in the field. The field is presented as Z_p.
struct QuotientMap {
  RingSpec field;
  std::size_t component;  // coordinate of R that M constrains
  long long prime;
  IdealOfR modulus_ideal;  // M

  RingElem project(const RingElem& x) const;
  RingElem eval(const LocElem& x) const;
};

struct QuotientVerification {
  int samples = 0;
  bool additive_ok = true;
  bool multiplicative_ok = true;
  /// eval(x) == 0 iff x lies in the top ideal, checked by the exact rule.
  bool kernel_ok = true;
  bool surjective_ok = true;
  bool all_passed() const {
    return additive_ok && multiplicative_ok && kernel_ok && surjective_ok;
  }
};

std::pair<QuotientMap, QuotientVerification> quotient_by_top(
    const LocIdeal& top, int samples = 16, std::uint64_t seed = 1,
    long long cap = kDefaultCap);

}  // namespace anderson
