#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anderson/errors.hpp"

namespace anderson {

/// Default cardinality cap for lattice-walking operations.
inline constexpr long long kDefaultCap = 4096;

/// A finite commutative ring presented as Z_{n_1} x ... x Z_{n_k}.
/// Every modulus is at least 2; the factor list is never empty.
class RingSpec {
 public:
  explicit RingSpec(std::vector<long long> moduli);

  const std::vector<long long>& moduli() const { return moduli_; }
  std::size_t arity() const { return moduli_.size(); }
  long long modulus(std::size_t i) const { return moduli_[i]; }
  long long cardinality() const;

  bool operator==(const RingSpec& other) const { return moduli_ == other.moduli_; }
  bool operator!=(const RingSpec& other) const { return !(*this == other); }

 private:
  std::vector<long long> moduli_;
};

/// Throws CapExceededError unless |ring| <= cap.
void require_within_cap(const RingSpec& ring, long long cap = kDefaultCap);

/// An element of a RingSpec ring; coordinates are kept reduced into
/// [0, n_i).
class RingElem {
 public:
  RingElem(RingSpec ring, std::vector<long long> coords);

  static RingElem zero(const RingSpec& ring);
  static RingElem one(const RingSpec& ring);
  /// Diagonal embedding of an integer: k mod n_i in each coordinate.
  static RingElem from_int(const RingSpec& ring, long long k);
  /// Element with the given index in the canonical mixed-radix order
  /// (coordinate 0 varies fastest).
  static RingElem at_index(const RingSpec& ring, long long index);

  const RingSpec& ring() const { return ring_; }
  const std::vector<long long>& coords() const { return coords_; }
  long long coord(std::size_t i) const { return coords_[i]; }
  /// Index in the canonical element order; inverse of at_index.
  long long index() const;

  bool is_zero() const;
  bool is_one() const;

  bool operator==(const RingElem& other) const;
  bool operator!=(const RingElem& other) const { return !(*this == other); }

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;

 private:
  RingSpec ring_;
  std::vector<long long> coords_;
};

/// Throws RingMismatchError unless both elements live in the same ring.
void require_same_ring(const RingElem& a, const RingElem& b);

/// A unit has every coordinate coprime to its modulus.
bool is_unit(const RingElem& a);

/// Multiplicative inverse; throws NotAUnitError if none exists.
RingElem inverse(const RingElem& a);

long long gcd_ll(long long a, long long b);
/// Extended gcd: returns g = gcd(a, b) and writes s, t with s*a + t*b = g.
long long xgcd(long long a, long long b, long long& s, long long& t);
/// Inverse of a modulo n; requires gcd(a, n) = 1.
long long mod_inverse(long long a, long long n);

}  // namespace anderson
