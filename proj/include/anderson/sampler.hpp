#pragma once

#include <cstdint>
#include <random>

#include "anderson/poly.hpp"

namespace anderson {

/// Deterministic sampling helper. Reduction uses plain modulo on the raw
/// engine output so that a seed pins the byte-level output of every
/// sampling command, independent of standard-library distribution details.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long long below(long long k) {
    return static_cast<long long>(rng_() % static_cast<std::uint64_t>(k));
  }

  RingElem elem(const RingSpec& ring) {
    return RingElem::at_index(ring, below(ring.cardinality()));
  }

  Poly poly(const RingSpec& ring, int max_degree) {
    std::vector<RingElem> coeffs;
    int deg = static_cast<int>(below(max_degree + 1));
    for (int i = 0; i <= deg; ++i) coeffs.push_back(elem(ring));
    return Poly::from_coeffs(ring, std::move(coeffs));
  }

  /// Random member of A: constant term 1.
  Poly poly_in_a(const RingSpec& ring, int max_degree) {
    std::vector<RingElem> coeffs{RingElem::one(ring)};
    int deg = static_cast<int>(below(max_degree + 1));
    for (int i = 1; i <= deg; ++i) coeffs.push_back(elem(ring));
    return Poly::from_coeffs(ring, std::move(coeffs));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace anderson
