#include <cmath>
#include <random>

#include <doctest.h>

#include "entronet/mpnet.hpp"
#include "common.hpp"

using namespace entronet;
using namespace entronet::setfn;

namespace {

SetFunction zy2a() { return mpnet::builtin_zy_gap(1); }

SetFunction random_log_vector(std::mt19937& rng) {
    std::uniform_int_distribution<int> arg(1, 20);
    std::vector<Rational> raw;
    for (int i = 0; i < 15; ++i) raw.emplace_back(arg(rng));
    return SetFunction::from_raw_list(4, Domain::Log2Rational, raw);
}

}  // namespace

TEST_CASE("subset keys") {
    CHECK(subset_from_string("134", 4) == 0b1101);
    CHECK(subset_to_string(0b1101) == "134");
    CHECK_THROWS_AS(subset_from_string("15", 4), Error);
    CHECK_THROWS_AS(subset_from_string("11", 4), Error);
    CHECK_THROWS_AS(subset_from_string("21", 4), Error);
    CHECK_THROWS_AS(subset_from_string("", 4), Error);
}

TEST_CASE("information expressions in h-coordinates") {
    InfoExpr joint = make_entropy_expr(ExprKind::Joint, 0b0011, 0, 0, 4);
    CHECK(joint.coeffs == std::map<Subset, long>{{0b0011, 1}});

    InfoExpr cond = make_entropy_expr(ExprKind::Conditional, 0b0001, 0b0010, 0, 4);
    CHECK(cond.coeffs == std::map<Subset, long>{{0b0011, 1}, {0b0010, -1}});

    InfoExpr cmi = make_entropy_expr(ExprKind::CondMutual, 0b0001, 0b0010, 0b0100, 4);
    CHECK(cmi.coeffs ==
          std::map<Subset, long>{{0b0101, 1}, {0b0110, 1}, {0b0100, -1}, {0b0111, -1}});
    CHECK(cmi.label == "I(1;2|3)");

    CHECK_THROWS_AS(make_entropy_expr(ExprKind::Mutual, 0b0011, 0b0010, 0, 4), Error);
    CHECK_THROWS_AS(make_entropy_expr(ExprKind::Joint, 0b10000, 0, 0, 4), Error);
    CHECK_THROWS_AS(make_entropy_expr(ExprKind::Joint, 0, 0, 0, 4), Error);
}

TEST_CASE("evaluation on the 2a vector") {
    SetFunction v = zy2a();
    CHECK(evaluate(make_entropy_expr(ExprKind::Mutual, 1, 2, 0, 4), v) == ExactScalar::rational(1));
    CHECK(evaluate(make_entropy_expr(ExprKind::Mutual, 4, 8, 0, 4), v).sign() == 0);
    // H(1|1) collapses to the empty expression
    InfoExpr h11 = make_entropy_expr(ExprKind::Conditional, 1, 1, 0, 4);
    CHECK(h11.coeffs.empty());
    CHECK(evaluate(h11, v).sign() == 0);
}

TEST_CASE("set function validation") {
    CHECK_THROWS_AS(SetFunction(4, Domain::Rational, {{1, Rational(1)}}), Error);  // not total
    CHECK_THROWS_AS(SetFunction::from_raw_list(4, Domain::Log2Rational,
                                               std::vector<Rational>(15, Rational(0))),
                    Error);  // log args must be positive
    SetFunction zero = SetFunction::zero(4, Domain::Rational);
    CHECK(zero.value(0b1111).sign() == 0);
    CHECK(SetFunction::zero(4, Domain::Log2Rational).value(1).sign() == 0);
}

TEST_CASE("condition (1)") {
    CHECK(satisfies_condition1(mpnet::builtin_pg13()));
    CHECK(satisfies_condition1(zy2a()));
    SetFunction broken =
        zy2a().with_value(0b1100, ExactScalar::rational(5));  // h(34): 4 -> 5
    CHECK_FALSE(satisfies_condition1(broken));
    CHECK(condition1_mismatches(broken).size() == 1);
    CHECK_THROWS_AS(satisfies_condition1(SetFunction::zero(3, Domain::Rational)), Error);
}

TEST_CASE("induced rates") {
    groups::SubgroupFamily fam = testutil::z2z2_family();
    InducedRates r = induced_rates(groups::group_entropy_vector(fam));
    CHECK(r.lambda_a == ExactScalar::log2_of(2));
    CHECK(r.lambda_b == ExactScalar::log2_of(2));
    CHECK(r.lambda_c.sign() == 0);

    InducedRates r2a = induced_rates(zy2a());
    CHECK(r2a.lambda_a == ExactScalar::rational(2));
    CHECK(r2a.lambda_b == ExactScalar::rational(1));
    CHECK(r2a.lambda_c == ExactScalar::rational(1));

    InducedRates rz = induced_rates(SetFunction::zero(4, Domain::Rational));
    CHECK(rz.lambda_a.sign() == 0);
    CHECK(rz.lambda_c.sign() == 0);

    // h(12) < h(1) must be rejected
    SetFunction bad = SetFunction::zero(4, Domain::Rational).with_value(1, ExactScalar::rational(1));
    bad = bad.with_value(0b1100, bad.value(0b1111));
    CHECK_THROWS_AS(induced_rates(bad), Error);
}

TEST_CASE("permute relabels coordinates") {
    SetFunction v = zy2a();
    CHECK(permute(v, identity_permutation(4)) == v);
    CHECK(permute(v, {2, 1, 3, 4}) == v);  // 1 <-> 2 symmetric
    SetFunction swapped = permute(v, {1, 3, 2, 4});
    CHECK(swapped.value(subset_from_string("14", 4)) == ExactScalar::rational(3));
    CHECK(swapped.value(subset_from_string("24", 4)) == ExactScalar::rational(4));  // was h(34)
    CHECK_FALSE(swapped == v);
    CHECK_THROWS_AS(permute(v, {1, 1, 3, 4}), Error);
    CHECK_THROWS_AS(permute(v, {1, 2, 3}), Error);
}

TEST_CASE("properties: evaluation is linear, permute is a group action") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> mask(1, 15);
    auto perms = all_permutations(4);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);

    for (int trial = 0; trial < 50; ++trial) {
        SetFunction v = random_log_vector(rng);
        InfoExpr e1, e2;
        e1.n = e2.n = 4;
        for (int t = 0; t < 5; ++t) {
            e1.add(mask(rng), coeff(rng));
            e2.add(mask(rng), coeff(rng));
        }
        CHECK(evaluate(e1 + e2, v) == evaluate(e1, v) + evaluate(e2, v));

        const Permutation &sigma = perms[pick(rng)], &tau = perms[pick(rng)];
        CHECK(permute(permute(v, sigma), tau) == permute(v, compose(tau, sigma)));
    }
}

TEST_CASE("property: exact signs agree with floating evaluation") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> mask(1, 15);
    int exercised = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        SetFunction v = random_log_vector(rng);
        InfoExpr e;
        e.n = 4;
        for (int t = 0; t < 6; ++t) e.add(mask(rng), coeff(rng));
        long double approx = 0.0L;
        for (auto& [s, c] : e.coeffs)
            approx += static_cast<long double>(c) * std::log2(static_cast<long double>(
                                                       v.raw(s).convert_to<double>()));
        int sign = evaluate(e, v).sign();
        // the exact path is authoritative; the float check is one-sided
        if (std::abs(static_cast<double>(approx)) > 1e-9) {
            CHECK(sign == (approx > 0 ? 1 : -1));
            ++exercised;
        } else {
            CHECK(sign == 0);
        }
    }
    CHECK(exercised > 500);
}

TEST_CASE("property: condition (1) is invariant under its symmetries") {
    for (const SetFunction& v :
         {mpnet::builtin_pg13(), mpnet::builtin_zy_gap(2),
          mpnet::builtin_pg13().with_value(0b1100, ExactScalar::log2_of(5))}) {
        bool base = satisfies_condition1(v);
        for (const Permutation& sigma :
             {Permutation{2, 1, 3, 4}, Permutation{1, 2, 4, 3}, Permutation{2, 1, 4, 3}})
            CHECK(satisfies_condition1(permute(v, sigma)) == base);
    }
}
