#pragma once

#include <optional>
#include <vector>

#include "anderson/ideal.hpp"
#include "anderson/ring.hpp"

namespace anderson {

/// Dense univariate polynomial over a RingSpec ring, kept canonical: no
/// trailing zero coefficients, so the zero polynomial has an empty list.
class Poly {
 public:
  static Poly zero(const RingSpec& ring);
  static Poly constant(const RingElem& c);
  static Poly variable(const RingSpec& ring);  // X
  static Poly monomial(const RingSpec& ring, const RingElem& c, int degree);
  static Poly from_coeffs(const RingSpec& ring, std::vector<RingElem> coeffs);

  const RingSpec& ring() const { return ring_; }
  /// Degree, or nullopt for the zero polynomial (degree minus infinity).
  std::optional<int> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of X^i; zero beyond the degree.
  RingElem coeff(std::size_t i) const;
  RingElem constant_term() const { return coeff(0); }
  RingElem leading_coeff() const;
  const std::vector<RingElem>& coeffs() const { return coeffs_; }

  RingElem eval(const RingElem& x) const;
  /// Quotient by X^k; requires the k lowest coefficients to vanish.
  Poly shift_down(int k) const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const RingElem& c, const Poly& p);
  Poly operator-() const;

 private:
  Poly(RingSpec ring, std::vector<RingElem> coeffs);
  RingSpec ring_;
  std::vector<RingElem> coeffs_;
};

/// Content ideal: generated by all coefficients.
IdealOfR content(const Poly& p, long long cap = kDefaultCap);

/// The five multiplicative sets of R[X] the localization lab works with.
/// The zero polynomial belongs to none of them.
enum class MultSetKind {
  ConstantTermOne,   // A: f(0) = 1
  UnitConstantTerm,  // saturation of A: f(0) is a unit
  UnitContent,       // N: content(f) = R
  Monic,             // U: leading coefficient 1
  UnitLowestCoeff,   // U-tilde: lowest nonzero coefficient 1
};

bool in_multiplicative_set(const Poly& p, MultSetKind kind);

struct CombinationWitness {
  std::vector<Poly> cofactors;  // target = sum gens[i] * cofactors[i]
};

struct BoundedMembershipResult {
  bool found;
  int cofactor_degree;
  std::optional<CombinationWitness> witness;
};

/// Decides whether target = sum gens[i] * q_i has a solution with every
/// deg(q_i) <= cofactor_degree, by coefficient matching through
/// solve_linear. Complete at the bound: "not found" means no such
/// cofactors exist up to this degree, nothing more.
BoundedMembershipResult membership_bounded(const Poly& target,
                                           const std::vector<Poly>& gens,
                                           int cofactor_degree);

/// Recomputes the witness combination and compares with the target.
bool witness_recombines(const Poly& target, const std::vector<Poly>& gens,
                        const CombinationWitness& witness);

}  // namespace anderson
