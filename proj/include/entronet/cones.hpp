#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entronet/setfn.hpp"

namespace entronet::cones {

using setfn::InfoExpr;
using setfn::Permutation;
using setfn::SetFunction;
using setfn::Subset;

/// A linear information inequality, asserted as expr >= 0.
struct Inequality {
    InfoExpr expr;
    std::string name;
};

/// Result of checking an inequality family against one vector.
/// `margin` is the value of the binding instance; `witness_*` identify it
/// when the family is violated.
struct Verdict {
    bool holds = true;
    ExactScalar margin;
    std::optional<SignWitness> products;  // deciding integer pair, log domain
    std::optional<Permutation> witness_perm;
    std::string witness_name;
};

/// The elemental generating set of Gamma_n: n monotonicity forms
/// h(N) - h(N\i) >= 0 and C(n,2)*2^(n-2) submodularity forms
/// h(Ki) + h(Kj) - h(K) - h(Kij) >= 0 for i < j, K subset of N\{i,j}.
/// Order is fixed: monotonicity by i, then submodularity by (i, j, K mask).
std::vector<Inequality> elemental_inequalities(int n);

/// Polymatroid membership: every elemental inequality >= 0 exactly.
/// On violation, the witness names the first violated elemental form.
Verdict in_gamma(const SetFunction& v);

/// h(12)+h(13)+h(14)+h(23)+h(24) - h(1) - h(2) - h(34) - h(123) - h(124) >= 0.
Inequality ingleton_inequality();

/// Zhang-Yeung in the canonical role form
///   2 I(k;l) <= I(i;j) + I(i;kl) + 3 I(k;l|i) + I(k;l|j)
/// instantiated at (i,j,k,l) = (1,2,3,4). Role assignments are covered by
/// check_all_permutations, so any published variant that differs only by
/// roles yields the same verdicts.
Inequality zy_inequality();

/// Evaluate one inequality instance on v (no permutations).
Verdict check_single(const SetFunction& v, const Inequality& ineq);

/// Evaluate ineq under all n! variable permutations (duplicates removed),
/// reporting the minimum margin and, when violated, a witness permutation.
/// The identity permutation is preferred among tied witnesses.
Verdict check_all_permutations(const SetFunction& v, const Inequality& ineq);

/// Number of distinct permuted instances of ineq on n variables.
int distinct_instances(const Inequality& ineq, int n);

/// Shannon-provability certificate.
struct ProofResult {
    bool provable = false;
    /// Nonnegative weights on elemental_inequalities(n), exact reconstruction.
    std::vector<Rational> multipliers;
    /// Gamma_n member with a strictly negative value on the target.
    std::optional<SetFunction> counterexample;
    ExactScalar counterexample_value;  // target value on the counterexample
    long pivots = 0;
};

/// Decide whether ineq is implied by the Shannon (elemental) inequalities,
/// by exact LP over the cone { A h >= 0 }. Certificates re-verify before
/// this returns: multipliers rebuild the target coefficient-by-coefficient,
/// or the counterexample passes every elemental form and violates the target.
ProofResult shannon_provable(const Inequality& ineq, int n);

/// Three-layer membership report for a condition-(1) vector on 4 variables.
struct MembershipReport {
    Verdict gamma4;
    Verdict ingleton;  // permutation-closed
    Verdict zy;        // permutation-closed
    bool all_pass = false;
    std::vector<std::string> conclusions;
};

MembershipReport membership_report(const SetFunction& v);

}  // namespace entronet::cones
