#pragma once

#include <string>
#include <utility>
#include <vector>

#include "entronet/mpnet.hpp"

namespace testutil {

using namespace entronet;

inline groups::FiniteGroup z2z2() {
    return groups::FiniteGroup::direct_product(groups::FiniteGroup::cyclic(2),
                                               groups::FiniteGroup::cyclic(2));
}

inline groups::FiniteGroup z2cubed() {
    return groups::FiniteGroup::direct_product(z2z2(), groups::FiniteGroup::cyclic(2));
}

/// G = Z2 x Z2 with G1 = {0,1}, G2 = {0,2}, G3 = {0,3}, G4 = {0}.
inline groups::SubgroupFamily z2z2_family() {
    return groups::SubgroupFamily(z2z2(), {{0, 1}, {0, 2}, {0, 3}, {0}});
}

/// G = (Z2)^3 with the three coordinate lines and the trivial subgroup.
inline groups::SubgroupFamily z2cubed_family() {
    return groups::SubgroupFamily(z2cubed(), {{0, 1}, {0, 2}, {0, 4}, {0}});
}

/// Groups of order <= 24 used by the acceptance sweeps.
inline std::vector<std::pair<std::string, groups::FiniteGroup>> group_library() {
    std::vector<std::pair<std::string, groups::FiniteGroup>> lib;
    lib.emplace_back("Z2xZ2", z2z2());
    lib.emplace_back("Z2^3", z2cubed());
    lib.emplace_back("Z4", groups::FiniteGroup::cyclic(4));
    lib.emplace_back("Z6", groups::FiniteGroup::cyclic(6));
    lib.emplace_back("S3", groups::FiniteGroup::symmetric(3));
    lib.emplace_back("D4", groups::FiniteGroup::dihedral(4));
    lib.emplace_back("A4", groups::FiniteGroup::alternating(4));
    return lib;
}

}  // namespace testutil
