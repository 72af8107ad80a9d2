#pragma once

#include <json.hpp>

#include "anderson/spectrum.hpp"
#include "anderson/theorems.hpp"

namespace anderson {

// ADL hooks so nlohmann::json can serialize every report type. All output
// is strings, integers and booleans; keys come out alphabetically sorted,
// which makes renderings byte-stable across runs.

void to_json(nlohmann::json& j, const RingSpec& ring);
void to_json(nlohmann::json& j, const RingElem& x);
void to_json(nlohmann::json& j, const Poly& p);
void to_json(nlohmann::json& j, const LocElem& x);
void to_json(nlohmann::json& j, const IdealOfR& ideal);
void to_json(nlohmann::json& j, const LocIdeal& ideal);
void to_json(nlohmann::json& j, const RingPredicates& p);
void to_json(nlohmann::json& j, const LatticeEntry& entry);
void to_json(nlohmann::json& j, MembershipStatus status);
void to_json(nlohmann::json& j, const MembershipWitness& witness);
void to_json(nlohmann::json& j, const MembershipResult& result);
void to_json(nlohmann::json& j, const MaximalityWitness& witness);
void to_json(nlohmann::json& j, const ChainVerification& chain);
void to_json(nlohmann::json& j, const SpectrumReport& report);
void to_json(nlohmann::json& j, const QuotientMap& map);
void to_json(nlohmann::json& j, const QuotientVerification& verification);
void to_json(nlohmann::json& j, const EmbeddingReport& report);
void to_json(nlohmann::json& j, const TheoremClaim& claim);
void to_json(nlohmann::json& j, const GeneratorIdentity& identity);
void to_json(nlohmann::json& j, const GeneratorCertificate& cert);
void to_json(nlohmann::json& j, const GeneratorSearchResult& result);
void to_json(nlohmann::json& j, const TheoremVerdict& verdict);
void to_json(nlohmann::json& j, const GaussianViolation& violation);
void to_json(nlohmann::json& j, const GaussianResult& result);
void to_json(nlohmann::json& j, const OracleCheckReport& report);

/// Canonical rendering: two-space indent, trailing newline.
std::string render_json(const nlohmann::json& j);

}  // namespace anderson
