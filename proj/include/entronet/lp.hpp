#pragma once

#include <vector>

#include "entronet/exact.hpp"

namespace entronet::lp {

/// Outcome of minimizing c.h over the cone { h : A h >= 0 }.
///
/// The optimum of such a program is either 0 (c lies in the dual cone, and
/// `multipliers` holds y >= 0 with A^T y = c) or unbounded below (`ray`
/// holds a primitive integer direction with A ray >= 0 and c.ray < 0).
/// Both certificates are re-verified exactly before being returned.
struct ConeLpResult {
    bool bounded = false;
    std::vector<Rational> multipliers;  // size = rows(A), bounded case
    std::vector<Rational> ray;          // size = cols(A), unbounded case
    long pivots = 0;
};

/// Exact rational simplex (dense tableau, Bland's anti-cycling rule) on the
/// standard-form split h = u - w with surplus variables for A h >= 0.
/// Throws on dimension mismatch; never returns an unverified certificate.
ConeLpResult minimize_over_cone(const std::vector<std::vector<Rational>>& a,
                                const std::vector<Rational>& objective);

}  // namespace entronet::lp
