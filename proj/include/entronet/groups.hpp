#pragma once

#include <map>
#include <string>
#include <vector>

#include "entronet/setfn.hpp"

namespace entronet::groups {

constexpr int kMaxGroupOrder = 5040;

/// Group-axiom validation failure; `axiom` is one of
/// "shape", "identity", "inverse", "associativity".
struct GroupError : Error {
    GroupError(std::string axiom_, const std::string& detail)
        : Error("group axiom '" + axiom_ + "' violated: " + detail), axiom(std::move(axiom_)) {}
    std::string axiom;
};

/// A finite group held as an explicit Cayley table over 0..m-1.
/// Construction validates the axioms: a two-sided identity, two-sided
/// inverses, and associativity via Light's test on a generating set.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table);

    static FiniteGroup cyclic(int m);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup symmetric(int degree);
    static FiniteGroup alternating(int degree);
    static FiniteGroup dihedral(int ngon);  // order 2*ngon

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int op(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    bool is_abelian() const;
    const std::vector<std::vector<int>>& table() const { return table_; }

    /// Subgroup generated by the seed elements, as a sorted element list.
    std::vector<int> closure(const std::vector<int>& seed) const;
    bool is_subgroup(const std::vector<int>& elems) const;
    /// Every subgroup, canonical (sorted lists, lexicographic order).
    std::vector<std::vector<int>> all_subgroups() const;

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    FiniteGroup() = default;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

/// A permutation group expanded to a Cayley table, keeping the element
/// permutations so generator lists can be resolved to element indices.
struct ExpandedPermutationGroup {
    FiniteGroup group;
    std::vector<std::vector<int>> elements;  // element index -> permutation (0-based images)

    int element_index(const std::vector<int>& perm) const;
};
ExpandedPermutationGroup expand_permutation_group(int degree,
                                                  const std::vector<std::vector<int>>& generators);

/// A parent group with n marked subgroups G_1..G_n (n <= 5).
/// Subgroup lists are validated, not closed up.
struct SubgroupFamily {
    FiniteGroup group;
    std::vector<std::vector<int>> subgroups;  // sorted element lists

    SubgroupFamily(FiniteGroup g, std::vector<std::vector<int>> subs);
    int n() const { return static_cast<int>(subgroups.size()); }
};

/// Element-wise intersection of the marked subgroups indexed by alpha.
std::vector<int> intersect_subgroups(const SubgroupFamily& fam, setfn::Subset alpha);

/// The group-characterizable vector h(alpha) = log2(|G| / |inter_{i in alpha} G_i|).
/// Always a polymatroid; asserted against the elemental inequalities.
setfn::SetFunction group_entropy_vector(const SubgroupFamily& fam);

/// A finite joint pmf with exact rational masses summing to one.
/// Zero-mass outcomes are not stored.
struct JointDistribution {
    std::vector<std::string> vars;
    std::map<std::vector<int>, Rational> pmf;

    JointDistribution() = default;
    JointDistribution(std::vector<std::string> vars_, std::map<std::vector<int>, Rational> pmf_);

    int n_vars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const;

    /// Marginal over the given variable positions (kept in the given order).
    JointDistribution marginal(const std::vector<int>& idxs) const;
    bool uniform_on_support() const;
    std::size_t support_size() const { return pmf.size(); }

    /// Support size of the marginal over `idxs` when that marginal is
    /// uniform, 0 otherwise. Avoids materializing the marginal.
    std::size_t uniform_marginal_support(const std::vector<int>& idxs) const;
};

/// g uniform over G; U_i is the label of the left coset g*G_i, a coset being
/// labeled by its minimum element index. Variables are named U1..Un.
JointDistribution quasi_uniform_distribution(const SubgroupFamily& fam);

/// True iff every marginal is uniform on its support and, for every pair of
/// variable subsets, the conditionals are uniform with a support size that
/// does not depend on the conditioning instance.
bool check_quasi_uniform(const JointDistribution& dist);

/// Exact entropy in bits of the marginal over `idxs` (variable positions).
/// Defined only for marginals uniform on their support; anything else is an
/// error, since a non-uniform exact entropy has no representation here.
ExactScalar entropy_of(const JointDistribution& dist, const std::vector<int>& idxs);

/// Floating Shannon entropy, for diagnostics only; never feeds a verdict.
double entropy_bits_float(const JointDistribution& dist, const std::vector<int>& idxs);

}  // namespace entronet::groups
