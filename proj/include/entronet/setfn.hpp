#pragma once

#include <map>
#include <string>
#include <vector>

#include "entronet/exact.hpp"

namespace entronet::setfn {

/// Nonempty subsets of the ground set {1..n} are bitmasks: bit i-1 = element i.
using Subset = unsigned;

constexpr int kMaxGroundSet = 5;

/// Permutation of {1..n}: perm[i-1] is the image of element i (1-based).
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& p);
/// compose(a, b) applies b first, then a.
Permutation compose(const Permutation& a, const Permutation& b);
bool is_permutation(const Permutation& p, int n);
/// Image of a subset under a permutation.
Subset apply_permutation(const Permutation& p, Subset s);
std::string permutation_to_string(const Permutation& p);

/// "134" <-> mask with bits for elements 1, 3, 4. Keys are ascending digits.
std::string subset_to_string(Subset s);
Subset subset_from_string(const std::string& key, int n);
int subset_size(Subset s);
std::vector<int> subset_elements(Subset s);

/// Integer-coefficient linear expression over set-function coordinates.
/// `label` is a human-readable description such as "I(1;2|3)".
struct InfoExpr {
    int n = 0;
    std::map<Subset, long> coeffs;  // nonempty subsets only, zero coefficients dropped
    std::string label;

    void add(Subset s, long c);
    InfoExpr operator+(const InfoExpr& o) const;
    InfoExpr scaled(long c) const;
    /// Expression whose evaluation on v equals this one's on permute(v, p).
    InfoExpr permuted(const Permutation& p) const;
    std::string to_string() const;  // coefficient form, e.g. "+1 h(13) -1 h(3)"
};

enum class ExprKind { Joint, Conditional, Mutual, CondMutual };

/// Standard information measures in h-coordinates:
///   Joint        H(alpha | gamma)          (beta must be empty)
///   Conditional  H(alpha | beta, gamma)
///   Mutual       I(alpha ; beta | gamma)   (alpha, beta disjoint)
///   CondMutual   same as Mutual; reads better when gamma is nonempty
/// Empty gamma gives the unconditional forms. h(empty) = 0 is implicit and
/// never appears as a coordinate.
InfoExpr make_entropy_expr(ExprKind kind, Subset alpha, Subset beta, Subset gamma, int n);

/// A total exact set function on the nonempty subsets of {1..n}.
/// All values share one domain tag; h(empty) = 0 is implicit.
class SetFunction {
public:
    SetFunction(int n, Domain domain, std::map<Subset, Rational> raw_values);

    /// Convenience: values listed in mask order 1..2^n-1.
    static SetFunction from_raw_list(int n, Domain domain, const std::vector<Rational>& raw);
    static SetFunction zero(int n, Domain domain);

    int n() const { return n_; }
    Domain domain() const { return domain_; }
    ExactScalar value(Subset s) const;
    const Rational& raw(Subset s) const;
    Subset full_set() const { return (Subset(1) << n_) - 1; }

    SetFunction with_value(Subset s, ExactScalar v) const;
    /// Pointwise rational scaling; rational domain only.
    SetFunction scaled_rational(const Rational& f) const;

    bool operator==(const SetFunction& o) const;

private:
    int n_;
    Domain domain_;
    std::vector<Rational> raw_;  // indexed by mask; raw_[0] unused
};

/// Exact value of an integer-coefficient expression on v.
ExactScalar evaluate(const InfoExpr& expr, const SetFunction& v);

/// Evaluation that also reports, in the log domain, the two unreduced
/// integer products whose comparison decides the sign.
struct Evaluation {
    ExactScalar value;
    std::optional<SignWitness> witness;
};
Evaluation evaluate_with_witness(const InfoExpr& expr, const SetFunction& v);

/// True iff h(1234) = h(123) = h(124) = h(134) = h(234) = h(34) exactly.
/// Requires n = 4.
bool satisfies_condition1(const SetFunction& v);
/// The terms of the condition above that differ from h(1234), as
/// "h(34)=..." strings; empty iff the condition holds.
std::vector<std::string> condition1_mismatches(const SetFunction& v);

struct InducedRates {
    ExactScalar lambda_a, lambda_b, lambda_c;
};
/// (h(1), h(12)-h(1), h(123)-h(12)); requires condition (1) and
/// 0 <= h(1) <= h(12) <= h(123).
InducedRates induced_rates(const SetFunction& v);

/// Relabeled function: result(s) = v(sigma^-1(s)).
SetFunction permute(const SetFunction& v, const Permutation& sigma);

std::vector<Permutation> all_permutations(int n);

}  // namespace entronet::setfn
