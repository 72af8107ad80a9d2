#pragma once

#include <cstdint>
#include <vector>

#include "anderson/poly.hpp"

namespace anderson {

/// A fraction num/den in the localization of R[X] at one of the five
/// multiplicative sets. The denominator is validated against the kind at
/// construction and after every operation.
///
/// Plain cross-multiplication (a/b = c/d iff a*d = c*b) is a congruence
/// here because every set in play consists of regular elements: members of
/// A, its saturation and U-tilde have a unit lowest coefficient, monic
/// polynomials have a unit highest coefficient (so a multiple inherits a
/// unit-sized extreme term), and members of N are regular by McCoy's
/// theorem (a zero divisor in R[X] is killed by a nonzero ring constant,
/// which would kill a unit content). This regularity is exercised
/// exhaustively by the test suite.
class LocElem {
 public:
  static LocElem fraction(Poly num, Poly den, MultSetKind kind);
  /// p/1; the constant 1 lies in all five sets.
  static LocElem embed(Poly p, MultSetKind kind);

  const RingSpec& ring() const { return num_.ring(); }
  MultSetKind kind() const { return kind_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

 private:
  LocElem(Poly num, Poly den, MultSetKind kind);
  Poly num_, den_;
  MultSetKind kind_;
};

LocElem loc_add(const LocElem& a, const LocElem& b);
LocElem loc_sub(const LocElem& a, const LocElem& b);
LocElem loc_mul(const LocElem& a, const LocElem& b);
LocElem loc_neg(const LocElem& a);

/// Cross-multiplication equality: num(a)*den(b) = num(b)*den(a).
bool loc_eq(const LocElem& a, const LocElem& b);

/// Unit test over kind A: f/g is a unit iff f(0) is a unit of R.
/// Throws for the other kinds.
bool is_unit(const LocElem& x);
/// Inverse of a kind-A unit, with the result denominator back in A.
LocElem loc_inverse(const LocElem& x);

struct EmbeddingSampleChecks {
  int samples = 0;
  int failures = 0;
};

/// Verified-facts record for the canonical inclusions:
///   - A-fractions are valid N-fractions, and sums/products agree whether
///     computed in the A- or the N-localization,
///   - cross-multiplication equality gives the same verdict in both,
///   - every U-tilde fraction factors as X^(-k) times an A-fraction,
///     where k is the lowest degree of the denominator.
struct EmbeddingReport {
  EmbeddingSampleChecks a_to_n_arithmetic;
  EmbeddingSampleChecks a_to_n_equality;
  EmbeddingSampleChecks u_tilde_factorization;
  bool all_passed() const {
    return a_to_n_arithmetic.failures == 0 && a_to_n_equality.failures == 0 &&
           u_tilde_factorization.failures == 0;
  }
};

EmbeddingReport canonical_embeddings(const RingSpec& ring, int samples,
                                     std::uint64_t seed, int degree_bound = 3);

}  // namespace anderson
