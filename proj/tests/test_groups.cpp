#include <doctest.h>

#include "common.hpp"

using namespace entronet;
using namespace entronet::groups;

TEST_CASE("group validation accepts groups and names the broken axiom") {
    CHECK(FiniteGroup::cyclic(4).order() == 4);
    CHECK(testutil::z2z2().is_abelian());

    // all-zero table: no identity
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 0}, {0, 0}}),
                         doctest::Contains("identity"), GroupError);

    // Z5 with two entries swapped keeps identity and inverses but breaks
    // associativity; Light's test reports a concrete triple
    std::vector<std::vector<int>> z5(5, std::vector<int>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) z5[i][j] = (i + j) % 5;
    std::swap(z5[1][1], z5[1][2]);
    try {
        FiniteGroup::from_table(z5);
        FAIL("expected a GroupError");
    } catch (const GroupError& e) {
        CHECK(e.axiom == "associativity");
    }

    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 0}, {0, 1}}), GroupError);  // shape
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 7}, {1, 0}}), GroupError);          // range
}

TEST_CASE("named constructions") {
    CHECK(FiniteGroup::symmetric(3).order() == 6);
    CHECK_FALSE(FiniteGroup::symmetric(3).is_abelian());
    CHECK(FiniteGroup::dihedral(4).order() == 8);
    CHECK_FALSE(FiniteGroup::dihedral(4).is_abelian());
    CHECK(FiniteGroup::alternating(4).order() == 12);
    CHECK(FiniteGroup::alternating(3).order() == 3);
    CHECK(testutil::z2cubed().order() == 8);

    ExpandedPermutationGroup s3 = expand_permutation_group(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(s3.group.order() == 6);
    CHECK(s3.element_index({0, 1, 2}) == s3.group.identity());
    CHECK_THROWS_AS(s3.element_index({2, 1, 0, 3}), Error);
    CHECK_THROWS_AS(expand_permutation_group(3, {{0, 0, 1}}), Error);
}

TEST_CASE("subgroup machinery") {
    FiniteGroup g = testutil::z2z2();
    CHECK(g.is_subgroup({0, 1}));
    CHECK_FALSE(g.is_subgroup({0, 1, 2}));  // not closed
    CHECK_FALSE(g.is_subgroup({1}));        // no identity
    CHECK(g.closure({1, 2}) == std::vector<int>{0, 1, 2, 3});

    CHECK(testutil::z2z2().all_subgroups().size() == 5);
    CHECK(FiniteGroup::cyclic(4).all_subgroups().size() == 3);
    CHECK(FiniteGroup::cyclic(6).all_subgroups().size() == 4);
    CHECK(FiniteGroup::symmetric(3).all_subgroups().size() == 6);
    CHECK(FiniteGroup::dihedral(4).all_subgroups().size() == 10);
    CHECK(testutil::z2cubed().all_subgroups().size() == 16);
    CHECK(FiniteGroup::alternating(4).all_subgroups().size() == 10);

    CHECK_THROWS_AS(SubgroupFamily(testutil::z2z2(), {{0, 1, 2}}), Error);
    CHECK_THROWS_AS(SubgroupFamily(testutil::z2z2(), {}), Error);
}

TEST_CASE("subgroup intersections") {
    SubgroupFamily fam = testutil::z2z2_family();
    CHECK(intersect_subgroups(fam, 0b0011) == std::vector<int>{0});
    CHECK(intersect_subgroups(fam, 0b0001) == fam.subgroups[0]);
    SubgroupFamily all_g(testutil::z2z2(), {{0, 1, 2, 3}, {0, 1, 2, 3}});
    CHECK(intersect_subgroups(all_g, 0b11) == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(intersect_subgroups(fam, 0), Error);
}

TEST_CASE("group entropy vectors") {
    setfn::SetFunction h = group_entropy_vector(testutil::z2z2_family());
    for (const char* key : {"1", "2", "3"})
        CHECK(h.value(setfn::subset_from_string(key, 4)) == ExactScalar::log2_of(2));
    CHECK(h.value(setfn::subset_from_string("4", 4)) == ExactScalar::log2_of(4));
    for (const char* key : {"12", "34", "123", "1234"})
        CHECK(h.value(setfn::subset_from_string(key, 4)) == ExactScalar::log2_of(4));

    FiniteGroup g = testutil::z2z2();
    std::vector<int> whole{0, 1, 2, 3}, trivial{0};
    setfn::SetFunction zero = group_entropy_vector(SubgroupFamily(g, {whole, whole, whole, whole}));
    for (setfn::Subset s = 1; s <= 15; ++s) CHECK(zero.value(s).sign() == 0);

    setfn::SetFunction full =
        group_entropy_vector(SubgroupFamily(g, {trivial, trivial, trivial, trivial}));
    for (setfn::Subset s = 1; s <= 15; ++s) CHECK(full.value(s) == ExactScalar::log2_of(4));
}

TEST_CASE("quasi-uniform distribution from cosets") {
    JointDistribution d = quasi_uniform_distribution(testutil::z2z2_family());
    CHECK(d.support_size() == 4);
    CHECK(entropy_of(d, {0}) == ExactScalar::log2_of(2));
    CHECK(entropy_of(d, {3}) == ExactScalar::log2_of(4));
    CHECK(check_quasi_uniform(d));

    FiniteGroup g = testutil::z2z2();
    std::vector<int> whole{0, 1, 2, 3};
    JointDistribution single =
        quasi_uniform_distribution(SubgroupFamily(g, {whole, whole, whole, whole}));
    CHECK(single.support_size() == 1);
    CHECK(entropy_of(single, {0, 1, 2, 3}).sign() == 0);

    // Z6 with G1 = {0,3}, G2 = {0,2,4}: independent uniform factors
    SubgroupFamily z6(FiniteGroup::cyclic(6), {{0, 3}, {0, 2, 4}});
    JointDistribution dz6 = quasi_uniform_distribution(z6);
    CHECK(entropy_of(dz6, {0}) == ExactScalar::log2_of(3));
    CHECK(entropy_of(dz6, {1}) == ExactScalar::log2_of(2));
    CHECK(entropy_of(dz6, {0, 1}) == ExactScalar::log2_of(6));
    CHECK(check_quasi_uniform(dz6));
}

TEST_CASE("quasi-uniformity checks reject lopsided distributions") {
    JointDistribution bern({"X"}, {{{0}, Rational(1, 3)}, {{1}, Rational(2, 3)}});
    CHECK_FALSE(check_quasi_uniform(bern));
    CHECK_THROWS_AS(entropy_of(bern, {0}), Error);

    JointDistribution bits({"X", "Y"}, {{{0, 0}, Rational(1, 4)},
                                        {{0, 1}, Rational(1, 4)},
                                        {{1, 0}, Rational(1, 4)},
                                        {{1, 1}, Rational(1, 4)}});
    CHECK(check_quasi_uniform(bits));

    // uniform marginals but conditional support size varies with the instance
    JointDistribution skew({"X", "Y"}, {{{0, 0}, Rational(1, 2)},
                                        {{1, 0}, Rational(1, 4)},
                                        {{1, 1}, Rational(1, 4)}});
    CHECK_FALSE(check_quasi_uniform(skew));

    CHECK_THROWS_AS(JointDistribution({"X"}, {{{0}, Rational(1, 2)}}), Error);  // mass 1/2
    CHECK_THROWS_AS(JointDistribution({"X"}, {{{0}, Rational(3, 2)}, {{1}, Rational(-1, 2)}}),
                    Error);
}

TEST_CASE("exact entropy of uniform marginals") {
    std::map<std::vector<int>, Rational> pmf;
    for (int i = 0; i < 13; ++i) pmf[{i}] = Rational(1, 13);
    CHECK(entropy_of(JointDistribution({"U"}, pmf), {0}) == ExactScalar::log2_of(13));

    JointDistribution det({"U"}, {{{7}, Rational(1)}});
    CHECK(entropy_of(det, {0}).sign() == 0);
    CHECK(entropy_bits_float(det, {0}) == doctest::Approx(0.0));

    JointDistribution d = quasi_uniform_distribution(testutil::z2z2_family());
    CHECK(entropy_bits_float(d, {0, 1}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(entropy_of(d, {}), Error);
}

TEST_CASE("property: coset vectors are polymatroids and monotone") {
    for (auto& [name, g] : testutil::group_library()) {
        if (g.order() > 8) continue;  // the full sweep lives in the acceptance suite
        auto subs = g.all_subgroups();
        SubgroupFamily fam(g, {subs.front(), subs.back(),
                               subs[subs.size() / 2], subs[subs.size() / 3]});
        setfn::SetFunction h = group_entropy_vector(fam);  // asserts in_gamma internally
        for (setfn::Subset a = 1; a <= 15; ++a)
            for (setfn::Subset b = 1; b <= 15; ++b)
                if ((a & b) == a) CHECK(h.value(a) <= h.value(b));
        CHECK(cones::check_all_permutations(h, cones::zy_inequality()).holds);
        if (g.is_abelian())
            CHECK(cones::check_all_permutations(h, cones::ingleton_inequality()).holds);
    }
}
