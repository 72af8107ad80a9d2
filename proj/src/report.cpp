#include "anderson/report.hpp"

#include "anderson/literals.hpp"

namespace anderson {

void to_json(nlohmann::json& j, const RingSpec& ring) { j = format_ring(ring); }

void to_json(nlohmann::json& j, const RingElem& x) { j = format_elem(x); }

void to_json(nlohmann::json& j, const Poly& p) { j = format_poly(p); }

void to_json(nlohmann::json& j, const LocElem& x) { j = format_fraction(x); }

void to_json(nlohmann::json& j, const IdealOfR& ideal) {
  j = nlohmann::json{{"generators", ideal.generators()},
                     {"ring", ideal.ring()},
                     {"size", ideal.size()}};
}

void to_json(nlohmann::json& j, const LocIdeal& ideal) {
  const char* shape = "general";
  if (ideal.shape() == LocIdeal::Shape::ExtensionOfR) shape = "extension";
  if (ideal.shape() == LocIdeal::Shape::IPlusX) shape = "base-plus-X";
  j = nlohmann::json{{"ring", ideal.ring()},
                     {"shape", shape},
                     {"spec", format_ideal_spec(ideal)}};
}

void to_json(nlohmann::json& j, const RingPredicates& p) {
  j = nlohmann::json{{"field", p.is_field},
                     {"local", p.is_local},
                     {"pir", p.is_pir},
                     {"reduced", p.is_reduced},
                     {"vnr", p.is_vnr}};
}

void to_json(nlohmann::json& j, const LatticeEntry& entry) {
  j = nlohmann::json{{"ideal", entry.ideal},
                     {"min_generators", entry.min_generators},
                     {"minimal_generating_set", entry.minimal_generating_set}};
}

void to_json(nlohmann::json& j, MembershipStatus status) {
  switch (status) {
    case MembershipStatus::Member: j = "member"; return;
    case MembershipStatus::NotMember: j = "not-member"; return;
    case MembershipStatus::NotFoundUpTo: j = "not-found-up-to"; return;
  }
}

void to_json(nlohmann::json& j, const MembershipWitness& witness) {
  j = nlohmann::json{{"cofactors", witness.cofactors},
                     {"denominator", witness.denominator}};
}

void to_json(nlohmann::json& j, const MembershipResult& result) {
  j = nlohmann::json{{"status", result.status}};
  if (!result.rule.empty()) j["rule"] = result.rule;
  if (result.bound) j["bound"] = *result.bound;
  if (result.witness) j["witness"] = *result.witness;
}

void to_json(nlohmann::json& j, const MaximalityWitness& witness) {
  j = nlohmann::json{{"constant_term", witness.f0},
                     {"ideal_part", witness.ideal_part},
                     {"sample", witness.sample},
                     {"unit_cofactor", witness.unit_cofactor},
                     {"verified", witness.verified}};
}

void to_json(nlohmann::json& j, const ChainVerification& chain) {
  j = nlohmann::json{{"bottom", chain.bottom_index},
                     {"bottom_subset_top", chain.bottom_subset_top},
                     {"separator_in_bottom", chain.separator_in_bottom},
                     {"separator_in_top", chain.separator_in_top},
                     {"strict", chain.strict()},
                     {"top", chain.top_index}};
}

void to_json(nlohmann::json& j, const SpectrumReport& report) {
  j = nlohmann::json{
      {"bottoms_pairwise_incomparable", report.bottoms_pairwise_incomparable},
      {"chains", report.chains},
      {"dimension_in_scope", report.dimension_in_scope},
      {"extensions", report.extensions},
      {"krull_dimension", report.krull_dimension},
      {"max_ideals", report.base_max_ideals},
      {"maximality", report.top_maximality},
      {"min_primes", report.base_min_primes},
      {"ring", report.ring},
      {"tops", report.tops},
      {"tops_pairwise_incomparable", report.tops_pairwise_incomparable},
      {"tops_proper", report.tops_proper}};
}

void to_json(nlohmann::json& j, const QuotientMap& map) {
  j = nlohmann::json{{"component", map.component},
                     {"field", map.field},
                     {"modulus_ideal", map.modulus_ideal},
                     {"prime", map.prime}};
}

void to_json(nlohmann::json& j, const QuotientVerification& verification) {
  j = nlohmann::json{{"additive_ok", verification.additive_ok},
                     {"all_passed", verification.all_passed()},
                     {"kernel_ok", verification.kernel_ok},
                     {"multiplicative_ok", verification.multiplicative_ok},
                     {"samples", verification.samples},
                     {"surjective_ok", verification.surjective_ok}};
}

void to_json(nlohmann::json& j, const EmbeddingReport& report) {
  auto checks = [](const EmbeddingSampleChecks& c) {
    return nlohmann::json{{"failures", c.failures}, {"samples", c.samples}};
  };
  j = nlohmann::json{{"a_to_n_arithmetic", checks(report.a_to_n_arithmetic)},
                     {"a_to_n_equality", checks(report.a_to_n_equality)},
                     {"all_passed", report.all_passed()},
                     {"u_tilde_factorization",
                      checks(report.u_tilde_factorization)}};
}

void to_json(nlohmann::json& j, const TheoremClaim& claim) {
  j = nlohmann::json{{"id", claim.id},
                     {"note", claim.note},
                     {"status", claim_status_string(claim.status, claim.bound)}};
}

void to_json(nlohmann::json& j, const GeneratorIdentity& identity) {
  j = nlohmann::json{{"h", identity.h},
                     {"q", identity.q},
                     {"target", identity.target}};
}

void to_json(nlohmann::json& j, const GeneratorCertificate& cert) {
  j = nlohmann::json{{"generator", cert.generator},
                     {"identities", cert.identities}};
}

void to_json(nlohmann::json& j, const GeneratorSearchResult& result) {
  j = nlohmann::json{{"candidates_examined", result.candidates_examined},
                     {"degree_bound", result.degree_bound},
                     {"found", result.certificate.has_value()}};
  if (result.certificate) j["certificate"] = *result.certificate;
}

void to_json(nlohmann::json& j, const TheoremVerdict& verdict) {
  j = nlohmann::json{{"claims", verdict.claims},
                     {"outcome", verdict.outcome()},
                     {"ring", verdict.ring},
                     {"theorem", verdict.theorem_id}};
  if (!verdict.certificates.empty()) j["certificates"] = verdict.certificates;
}

void to_json(nlohmann::json& j, const GaussianViolation& violation) {
  j = nlohmann::json{{"f", violation.f},
                     {"g", violation.g},
                     {"rule", violation.rule},
                     {"witness", violation.witness}};
}

void to_json(nlohmann::json& j, const GaussianResult& result) {
  j = nlohmann::json{{"inconclusive", result.inconclusive},
                     {"memberships_confirmed", result.memberships_confirmed},
                     {"pairs_checked", result.pairs_checked},
                     {"verdict", result.verdict},
                     {"violations", result.violations}};
}

void to_json(nlohmann::json& j, const OracleCheckReport& report) {
  nlohmann::json details = nlohmann::json::array();
  for (const auto& d : report.details) details.push_back(d.description);
  j = nlohmann::json{{"brute_degree", report.brute_degree},
                     {"details", details},
                     {"disagreements", report.disagreements},
                     {"seed", report.seed},
                     {"trials", report.trials}};
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace anderson
