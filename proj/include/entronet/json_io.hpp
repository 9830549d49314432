#pragma once

#include <json.hpp>

#include "entronet/mpnet.hpp"

namespace entronet::json_io {

using Json = nlohmann::ordered_json;

/// Parse with library errors mapped onto entronet::Error.
Json parse(const std::string& text);

// SetFunction: {"n": 4, "domain": "rational"|"log2-rational",
//               "values": {"1": "13", ..., "1234": "156"}}
// Subset keys are ascending concatenated indices; value strings are
// rationals "p/q" (the value itself, or the log2 argument). Unknown keys
// (names, provenance notes) are ignored on input.
Json set_function_to_json(const setfn::SetFunction& v);
setfn::SetFunction set_function_from_json(const Json& j);

// Inequality: {"n": 4, "coeffs": {"12": 1, "1": -1, ...}, "name": "..."}
Json inequality_to_json(const cones::Inequality& ineq, int n);
cones::Inequality inequality_from_json(const Json& j, int* n_out = nullptr);

Json verdict_to_json(const cones::Verdict& v);
Json membership_to_json(const cones::MembershipReport& rep);

/// ProofResult carries "multipliers" (nonzero ones, keyed by elemental
/// name) or "counterexample" (a SetFunction).
Json proof_to_json(const cones::ProofResult& proof, int n);

// Group: {"order": m, "table": [[...]], "subgroups": [[0,1], ...]} or the
// permutation form {"degree": d, "generators": [[...], ...],
// "subgroup_generators": [[[...], ...], ...]} with 0-based images.
groups::SubgroupFamily family_from_json(const Json& j);
Json family_to_json(const groups::SubgroupFamily& fam);

// Network: {"domain": ..., "nodes": [...],
//           "edges": [{"id": "V1", "tail": "src", "head": "cp1", "capacity": "13"}, ...],
//           "sessions": [{"id": "a", "origin": "src", "destinations": [...]}]}
// Capacity strings live in the declared scalar domain.
Json network_to_json(const netmodel::Network& net);
netmodel::Network network_from_json(const Json& j);

Json mp_instance_to_json(const mpnet::MpInstance& inst);
Json code_to_json(const netmodel::NetworkCode& code);
Json distribution_to_json(const groups::JointDistribution& dist);
Json bundle_to_json(const mpnet::SolutionBundle& bundle);
Json theorem1_to_json(const mpnet::Theorem1Report& rep);
Json classification_to_json(const mpnet::Classification& cls);

}  // namespace entronet::json_io
