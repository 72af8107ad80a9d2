#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anderson/loc_ideal.hpp"
#include "anderson/sampler.hpp"

namespace anderson {

/// Outcome of a single checked claim.  Verified and Refuted are exact and
/// carry witnesses where meaningful; BoundedConsistent records that a search
/// up to the stated bound found neither a witness nor a counterexample.
enum class ClaimStatus { Verified, Refuted, BoundedConsistent };

std::string claim_status_string(ClaimStatus status, std::optional<int> bound);

struct TheoremClaim {
  std::string id;
  ClaimStatus status = ClaimStatus::Verified;
  std::optional<int> bound;  // set when status is BoundedConsistent
  std::string note;
};

/// Certifies target * h == generator * q with h in the constant-term-one
/// multiplicative set, i.e. target lies in the principal localized ideal
/// generated by `generator`.
struct GeneratorIdentity {
  Poly target;
  Poly h;
  Poly q;
};

bool identity_holds(const GeneratorIdentity& identity, const Poly& generator);

struct GeneratorCertificate {
  Poly generator;
  std::vector<GeneratorIdentity> identities;
};

/// True iff generator lies in `ideal` (exact membership) and the identities
/// cover every defining generator of `ideal`, each one holding exactly.
bool certificate_valid(const GeneratorCertificate& cert, const LocIdeal& ideal);

struct GeneratorSearchResult {
  int degree_bound = 0;
  long long candidates_examined = 0;
  std::optional<GeneratorCertificate> certificate;
};

/// Searches for a single polynomial generating the given ideal, which must
/// have the constants-plus-X shape.  Candidates are enumerated by degree,
/// then lexicographically by coefficient tuple; the constant term ranges over
/// the base ideal so every candidate lies in the target ideal.  Candidates
/// ruled out by an exact exclusion cut are skipped without solving but still
/// counted in candidates_examined.
GeneratorSearchResult generator_search(const LocIdeal& ideal, int degree_bound);

struct TheoremVerdict {
  std::string theorem_id;
  RingSpec ring;
  std::vector<TheoremClaim> claims;
  std::vector<GeneratorCertificate> certificates;

  ClaimStatus overall() const;
  std::optional<int> overall_bound() const;
  std::string outcome() const;  // "verified" | "refuted" | "bounded-consistent(d)"
};

/// Checks that the localized ring has principal maximal-ideal tops exactly
/// when the base ring is von Neumann regular with principal ideals.  Each
/// top over a reduced local factor must yield a certified generator; tops
/// over a non-reduced factor must exhaust the search.
TheoremVerdict check_pir2(const RingSpec& ring, int degree_bound);

/// Checks that the extension of a base ideal to the localized ring is
/// generated by the images of a minimal base generating set, with exact
/// membership in both directions, and that the count is minimal.
TheoremVerdict check_generator_count(const IdealOfR& ideal, int degree_bound);

/// Checks that contracting the extension of a base ideal back to the base
/// ring recovers exactly the base ideal, element by element.
TheoremVerdict check_contraction(const IdealOfR& ideal);

/// Checks that a base ideal is principal in every local factor, certifies
/// the factor generators, and reports the invertibility criterion
/// (locally principal with zero annihilator).
TheoremVerdict check_locally_principal(const IdealOfR& ideal);

struct GaussianViolation {
  std::vector<LocElem> f;
  std::vector<LocElem> g;
  Poly witness;      // numerator generator excluded from the product content
  std::string rule;  // which exact cut certified the exclusion
};

struct GaussianOptions {
  int trials = 200;
  unsigned long long seed = 1;
  int outer_degree = 2;
  int inner_degree = 1;
  MembershipPolicy policy{5, 2};
};

struct GaussianResult {
  TheoremVerdict verdict;
  long long pairs_checked = 0;
  long long memberships_confirmed = 0;
  long long inconclusive = 0;
  std::vector<GaussianViolation> violations;
};

/// Samples polynomial pairs over the localized ring and compares the content
/// of a product with the product of contents.  Over a von Neumann regular
/// base the two must agree; otherwise an exactly certified violation is the
/// expected witness.
GaussianResult check_gaussian(const RingSpec& ring, const GaussianOptions& options = {});

/// Checks that every maximal ideal maps to zero in its local factor exactly
/// when the base ring is von Neumann regular.
TheoremVerdict check_vnr_prufer(const RingSpec& ring);

}  // namespace anderson
