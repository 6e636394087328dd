#pragma once

// JSON form of ProofTree; see docs/proof-format.md.

#include <json.hpp>

#include "nomfix/fixpoint.hpp"

namespace nomfix {

nlohmann::json to_json(const ProofTree& tree);
// Throws ParseError on malformed conclusions and Error on malformed records.
ProofTree proof_from_json(const nlohmann::json& j, const Signature& sig = Signature::builtin());

}  // namespace nomfix
