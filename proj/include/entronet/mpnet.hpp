#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entronet/cones.hpp"
#include "entronet/netmodel.hpp"

namespace entronet::mpnet {

using groups::JointDistribution;
using groups::SubgroupFamily;
using setfn::SetFunction;
using setfn::Subset;

/// One receiver of the induced multicast problem: its inputs (with the side
/// channel shown as the generic "W"), the sessions it must recover, the
/// capacity formula of its W edge, and the claim of the solvability argument
/// the receiver realizes.
struct ManifestRow {
    std::string sink;
    std::vector<std::string> inputs;   // e.g. {"V1", "V3", "W"}
    std::vector<std::string> demands;  // subset of {a, b, c}
    std::string capacity_formula;      // "" when the sink has no W edge
    std::optional<ExactScalar> w_capacity;
    std::string w_edge_id;  // "" when none
    std::string claim;
};

/// The induced multicast problem MP(h): a fixed 24-node network whose
/// receivers are listed in `manifest`, together with the h-derived
/// rate-capacity tuple. Fan-out of each coded message V_i runs through a
/// dedicated copy node so that every capacitated edge appears exactly once.
struct MpInstance {
    netmodel::Network network;
    SetFunction h;
    setfn::InducedRates rates;  // sessions a, b, c at the source
    std::vector<std::pair<std::string, ExactScalar>> edge_caps;  // capacitated edges
    std::vector<ManifestRow> manifest;

    netmodel::RateCapacityTuple tuple() const;
};

/// Build MP(h) for a condition-(1) vector on four variables. Every capacity
/// formula is evaluated and checked nonnegative; violations name the formula.
MpInstance build_mp(const SetFunction& h);

/// Independent uniform session variables carved out of a quasi-uniform
/// source: a relabels U1, b is the conditional index of U2 given U1, c the
/// conditional index of U3 given (U1, U2). The returned joint extends the
/// input with variables named "a", "b", "c"; the bijection witnesses
/// (both-way zero conditional entropies) are verified exhaustively.
struct SourceTransform {
    JointDistribution joint;  // input variables first, then a, b, c
    int size_a = 1, size_b = 1, size_c = 1;
};
SourceTransform source_transform(const JointDistribution& dist);

/// Exact single-shot compressor: within each positive-probability instance
/// of `given`, the target tuples are ranked in ascending order; the rank is
/// the code. The conditional support size must be constant, which is what
/// quasi-uniformity guarantees; log2(alphabet) then equals
/// H(target | given).
struct ConditionalIndex {
    std::vector<int> target_idx, given_idx;
    int alphabet = 1;
    std::map<std::vector<int>, int> index_of;            // (given.., target..) -> rank
    std::map<std::vector<int>, std::vector<int>> value_of;  // (given.., rank) -> target
};
ConditionalIndex conditional_index(const JointDistribution& dist, const std::vector<int>& target,
                                   const std::vector<int>& given);

/// A zero-error solution of MP(h) for a group-characterizable h, plus the
/// joint distribution of (a, b, c, V1..V4, all W symbols) it induces.
struct SolutionBundle {
    netmodel::NetworkCode code;
    JointDistribution joint;
    std::vector<std::vector<int>> family_subgroups;
};

/// Theorem-2 construction, single shot: V_i carries the coset label U_i,
/// sessions are the source transform, and every W edge carries the
/// conditional index of exactly the data its decoder is missing. Decodability
/// at all 17 sinks, admissibility, and the per-edge capacity equalities are
/// asserted, not assumed.
SolutionBundle solve_mp_from_group(const SubgroupFamily& fam);
SolutionBundle solve_mp_from_group(const SubgroupFamily& fam, const MpInstance& inst);

/// Wrap any code for MP(h) into a bundle by evaluating it and recording the
/// joint law of (a, b, c, V1..V4, all W). No decodability or admissibility
/// requirement: verify_theorem1 reports whatever the code actually does.
SolutionBundle assemble_bundle(const MpInstance& inst, netmodel::NetworkCode code);

struct EntropyEntry {
    Subset alpha = 0;
    ExactScalar expected;                // h(alpha)
    std::optional<ExactScalar> actual;   // empty when the marginal is not uniform
    double actual_float = 0;             // diagnostic only
    bool match = false;
};

struct ClaimEntry {
    std::string claim;      // "Claim 1" .. "Claim 9"
    std::string statement;  // e.g. "H(V1) = h(1)"
    bool holds = false;
    std::string margin;  // exact margin, or a float diagnostic note
};

/// Recomputes h from the solution's joint distribution: the fifteen exact
/// entropy equalities H(V_alpha) = h(alpha), plus the individual claim
/// checks. Mismatches are report entries, never exceptions.
struct Theorem1Report {
    std::vector<EntropyEntry> entropies;  // all 15 subsets
    int matches = 0;
    bool all_match = false;
    std::vector<ClaimEntry> claims;
    bool claims_ok = false;
};
Theorem1Report verify_theorem1(const MpInstance& inst, const SolutionBundle& bundle);

/// Cone memberships composed into MP(h) conclusions.
struct Classification {
    cones::MembershipReport membership;
    bool known_entropic = false;
    std::string solvability;  // "solvable" | "not-asymptotically-solvable" | "unknown"
    bool abelian_insufficient = false;
    std::vector<std::string> narrative;
};
Classification classify(const SetFunction& h);

/// The two built-in vectors. pg13 is the projective-plane quasi-uniform
/// entropy vector (log domain); zy_gap(a) is the rational family with
/// singles 2a, h(12) = 3a, h(34) = 4a that sits inside Gamma_4 but outside
/// the entropic closure.
SetFunction builtin_pg13();
SetFunction builtin_zy_gap(const Rational& a = Rational(1));
std::optional<SetFunction> builtin_vector(const std::string& name, const Rational& a = Rational(1));

}  // namespace entronet::mpnet
