#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anderson/localization.hpp"

namespace anderson {

/// Degree bounds for General-shape membership: the witness search covers
/// denominators h in A with deg(h) <= denominator_degree and cofactors up
/// to cofactor_degree.
struct MembershipPolicy {
  int cofactor_degree = 3;
  int denominator_degree = 3;
};

/// A finitely generated ideal of the A-localization, tagged by shape. The
/// shape decides which membership rule applies:
///   ExtensionOfR  I*R[X]_A,           f/g member iff content(f) <= I
///   IPlusX        (I + X*R[X])_A,     f/g member iff f(0) in I
///   General       arbitrary generators, bounded witness search only
class LocIdeal {
 public:
  enum class Shape { ExtensionOfR, IPlusX, General };

  static LocIdeal extension_of(IdealOfR base);
  static LocIdeal i_plus_x(IdealOfR base);
  static LocIdeal general(const RingSpec& ring, std::vector<Poly> gens,
                          MembershipPolicy policy = {});

  Shape shape() const { return shape_; }
  const RingSpec& ring() const { return ring_; }
  /// Base ideal of R; only for the two exact shapes.
  const IdealOfR& base_ideal() const;
  MembershipPolicy policy() const { return policy_; }

  /// Generators as polynomials, uniform across shapes: constants for
  /// ExtensionOfR, constants plus X for IPlusX, the given list for General.
  const std::vector<Poly>& generator_polys() const { return gens_; }

 private:
  LocIdeal(Shape shape, RingSpec ring, std::optional<IdealOfR> base,
           std::vector<Poly> gens, MembershipPolicy policy);
  Shape shape_;
  RingSpec ring_;
  std::optional<IdealOfR> base_;
  std::vector<Poly> gens_;
  MembershipPolicy policy_;
};

enum class MembershipStatus { Member, NotMember, NotFoundUpTo };

/// Recombination data for a Member verdict: x equals
/// sum gens[i] * cofactors[i] / denominator with the denominator in A.
struct MembershipWitness {
  std::vector<Poly> cofactors;
  Poly denominator;
};

struct MembershipResult {
  MembershipStatus status;
  std::optional<MembershipWitness> witness;
  /// Degree bound that was exhausted, for NotFoundUpTo.
  std::optional<int> bound;
  /// Which rule produced an exact verdict, empty for NotFoundUpTo.
  std::string rule;
};

/// Membership of x (kind A) in J. Exact decision for the two exact
/// shapes. For General the exclusion cuts run first and refute exactly
/// when one fires; otherwise a bounded witness search runs, which never
/// conflates "no witness up to the bound" with "not a member".
MembershipResult membership(const LocElem& x, const LocIdeal& j);

/// Checks that the witness recombines to x by cross-multiplication.
bool membership_witness_valid(const LocElem& x, const LocIdeal& j,
                              const MembershipWitness& witness);

/// Sound exclusion cuts for membership of a polynomial target in the
/// ideal generated by gens over the A-localization. If target =
/// sum gens[i] * q_i / h with h in A, then c(h) = R, so Dedekind-Mertens
/// gives c(target) = c(target * h) <= sum c(gens[i]); evaluating at 0
/// gives target(0) in (gens[0](0), ..., gens[k](0)). Two more cuts
/// sharpen this: a nonzero target is never a member of the zero ideal
/// (denominators are regular), and when every generator is divisible by
/// X^k the target must be too, after which both sides are divided by X^k
/// and the content and constant-term cuts rerun on the quotients. A cut
/// that fires refutes membership outright at every degree. Returns the
/// name of the cut that fired, or nullopt.
std::optional<std::string> exact_exclusion(const Poly& target,
                                           const std::vector<Poly>& gens,
                                           long long cap = kDefaultCap);

struct OracleDisagreement {
  std::string description;
};

struct OracleCheckReport {
  int trials = 0;
  std::uint64_t seed = 0;
  int brute_degree = 3;
  int disagreements = 0;
  std::vector<OracleDisagreement> details;
};

/// Cross-validates the two exact membership rules against brute-force
/// searches over denominators h in A up to brute_degree: the extension
/// rule against "all coefficients of f*h lie in I", the I-plus-X rule
/// against "(f*h)(0) lies in I". Any disagreement is recorded.
OracleCheckReport exact_rule_oracle_check(const RingSpec& ring, int trials,
                                          std::uint64_t seed,
                                          int brute_degree = 3,
                                          long long cap = kDefaultCap);

}  // namespace anderson
