#pragma once

#include <optional>
#include <vector>

#include "anderson/ring.hpp"

namespace anderson {

/// An ideal of a finite ring R, held in canonical form: the full element
/// set, sorted by canonical element index. Generators are kept as given.
class IdealOfR {
 public:
  static IdealOfR from_generators(const RingSpec& ring,
                                  std::vector<RingElem> gens,
                                  long long cap = kDefaultCap);
  /// Wraps an already-closed element set; throws if the set is not an ideal.
  static IdealOfR from_elements(const RingSpec& ring,
                                std::vector<long long> sorted_indices,
                                std::vector<RingElem> gens);
  static IdealOfR zero_ideal(const RingSpec& ring);
  static IdealOfR unit_ideal(const RingSpec& ring);

  const RingSpec& ring() const { return ring_; }
  const std::vector<RingElem>& generators() const { return gens_; }
  const std::vector<long long>& element_indices() const { return elements_; }
  std::vector<RingElem> elements() const;
  std::size_t size() const { return elements_.size(); }

  bool contains(const RingElem& x) const;
  bool is_zero() const { return elements_.size() == 1; }
  bool is_unit_ideal() const;
  bool is_proper() const { return !is_unit_ideal(); }

  bool operator==(const IdealOfR& other) const;
  bool operator!=(const IdealOfR& other) const { return !(*this == other); }
  bool subset_of(const IdealOfR& other) const;

  friend IdealOfR ideal_sum(const IdealOfR& a, const IdealOfR& b);

 private:
  IdealOfR(RingSpec ring, std::vector<long long> elements,
           std::vector<RingElem> gens);
  RingSpec ring_;
  std::vector<long long> elements_;  // sorted canonical indices
  std::vector<RingElem> gens_;
};

IdealOfR ideal_sum(const IdealOfR& a, const IdealOfR& b);
IdealOfR ideal_product(const IdealOfR& a, const IdealOfR& b);

/// ann(I) = { r : r * g = 0 for every generator g }.
IdealOfR annihilator(const IdealOfR& ideal);

struct LatticeEntry {
  IdealOfR ideal;
  int min_generators;                          // 0 only for the zero ideal
  std::vector<RingElem> minimal_generating_set;
};

/// All ideals of the ring, deduplicated by element set. Computed as the
/// closure of the principal ideals under pairwise ideal sum, which is
/// exhaustive for any finite commutative ring.
std::vector<LatticeEntry> ideal_lattice(const RingSpec& ring,
                                        long long cap = kDefaultCap);

std::vector<IdealOfR> max_ideals(const RingSpec& ring,
                                 long long cap = kDefaultCap);
/// Minimal prime ideals. For a finite commutative ring every prime is
/// maximal; this is asserted internally, so both views coincide as sets.
std::vector<IdealOfR> min_primes(const RingSpec& ring,
                                 long long cap = kDefaultCap);
std::vector<IdealOfR> prime_ideals(const RingSpec& ring,
                                   long long cap = kDefaultCap);
bool all_primes_maximal(const RingSpec& ring, long long cap = kDefaultCap);

struct RingPredicates {
  bool is_reduced;
  bool is_vnr;
  bool is_pir;
  bool is_local;
  bool is_field;
};

bool is_reduced(const RingSpec& ring);
/// Von Neumann regular: every a has b with a*a*b = a. Exhaustive.
bool is_vnr(const RingSpec& ring);
RingPredicates predicates(const RingSpec& ring, long long cap = kDefaultCap);

/// One local factor Z_{p^e} of the ring, with its projection map.
struct LocalFactor {
  RingSpec factor;
  std::size_t component;  // index into the parent's moduli
  long long prime;
  int exponent;
  long long modulus;  // p^e

  RingElem project(const RingElem& x) const;
  /// The maximal ideal of the parent ring this factor localizes at:
  /// { x : x_component = 0 mod prime }.
  IdealOfR maximal_ideal_of(const RingSpec& parent) const;
};

/// CRT decomposition into local factors; the joint projection is a ring
/// isomorphism onto the product of the factors.
std::vector<LocalFactor> local_factors(const RingSpec& ring,
                                       long long cap = kDefaultCap);

/// Prime-power factorization helper (trial division; inputs are small).
std::vector<std::pair<long long, int>> factorize(long long n);
bool is_squarefree(long long n);

}  // namespace anderson
