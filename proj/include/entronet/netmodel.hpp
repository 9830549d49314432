#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entronet/groups.hpp"

namespace entronet::netmodel {

struct Edge {
    std::string id, tail, head;
    std::optional<ExactScalar> capacity;  // absent = unconstrained
};

struct Session {
    std::string id, origin;
    std::vector<std::string> destinations;
};

/// Directed acyclic network with sessions. "f -> e" for a session f means
/// the session originates at tail(e); for an edge f it means head(f) = tail(e).
struct Network {
    std::vector<std::string> nodes;
    std::vector<Edge> edges;
    std::vector<Session> sessions;

    const Edge& edge(const std::string& id) const;
    const Session& session(const std::string& id) const;
    /// In-symbols of an edge: sessions at tail(e) (session order), then
    /// edges into tail(e) (edge order). This fixes coding-table key order.
    std::vector<std::string> inputs_of_edge(const std::string& edge_id) const;
    /// Symbols available at a node: sessions originating there, then in-edges.
    std::vector<std::string> inputs_of_node(const std::string& node) const;
};

/// Topological node order; throws with the offending cycle or reference.
std::vector<std::string> validate_network(const Network& net);

/// Explicit local coding function for one edge.
struct CodingTable {
    std::vector<std::string> inputs;  // must equal inputs_of_edge(edge)
    std::map<std::vector<int>, int> table;
};

/// Alphabets are 0..size-1; the source distribution ranges over session
/// symbols in network session order.
struct NetworkCode {
    std::map<std::string, int> session_alphabet;
    std::map<std::string, int> edge_alphabet;
    std::map<std::string, CodingTable> functions;
    groups::JointDistribution source_dist;
};

constexpr std::size_t kMaxSourceOutcomes = 1000000;

/// Edge symbols induced by every positive-probability source tuple.
struct CodeEvaluation {
    std::vector<std::string> session_order;
    std::vector<std::string> edge_order;
    std::map<std::vector<int>, std::vector<int>> rows;  // source tuple -> edge symbols

    int edge_position(const std::string& id) const;
};
CodeEvaluation evaluate_code(const Network& net, const NetworkCode& code);

struct DecodeEntry {
    std::string session, node;
    bool decodable = false;
    std::size_t table_size = 0;  // distinct input tuples seen at the node
    std::string detail;          // failure description
};
std::vector<DecodeEntry> check_decodable(const Network& net, const NetworkCode& code);
std::vector<DecodeEntry> check_decodable(const Network& net, const NetworkCode& code,
                                         const CodeEvaluation& eval);
bool all_decodable(const std::vector<DecodeEntry>& entries);

struct RateCapacityTuple {
    std::vector<std::pair<std::string, ExactScalar>> session_rates;     // lambda_s, all sessions
    std::vector<std::pair<std::string, ExactScalar>> edge_capacities;  // omega_e, capacitated edges
};

/// log2|V_e| <= omega_e for every capacitated edge and log2|V_s| >= lambda_s
/// for every session; comparisons are exact in either scalar domain.
bool check_admissible(const Network& net, const NetworkCode& code, const RateCapacityTuple& tuple);

/// Subspaces of F_q^dim (q prime), one per session and edge id.
/// Basis vectors are rows; they must be linearly independent.
struct SubspaceFamily {
    int q = 2;
    int dim = 0;
    std::map<std::string, std::vector<std::vector<int>>> bases;
};

struct StructureReport {
    bool independence_ok = false;            // session-rate identity
    std::vector<std::string> edge_failures;  // per-edge containment failures
    std::vector<std::string> decode_failures;
    RateCapacityTuple tuple;
    bool ok() const { return independence_ok && edge_failures.empty() && decode_failures.empty(); }
    std::string first_failure() const;
};

/// Rank conditions for linear representability:
///  (a) |S| dim V - sum_s dim V_s = dim V - dim inter_s V_s
///  (b) inter_{f->e} V_f    is contained in V_e, for every edge
///  (c) inter_{f->u} V_f    is contained in V_s, for every s, u in D(s)
/// with the induced tuple lambda_s = (dim V - dim V_s) log2 q and
/// omega_e = (dim V - dim V_e) log2 q.
StructureReport linear_rank_conditions(const Network& net, const SubspaceFamily& fam);

/// Coset code realizing the tuple of linear_rank_conditions with equality:
/// the source draws x uniformly from V and every symbol f carries the coset
/// x + V_f under canonical labels. Requires the rank conditions to pass.
NetworkCode linear_code_from_subspaces(const Network& net, const SubspaceFamily& fam);

/// Proposition-3 style conditions for a finite group with one subgroup per
/// session and edge id; emits (log2 |G|/|G_s|, log2 |G|/|G_e|).
StructureReport group_code_conditions(const Network& net, const groups::FiniteGroup& group,
                                      const std::map<std::string, std::vector<int>>& subgroups);

}  // namespace entronet::netmodel
