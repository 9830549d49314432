#include <doctest.h>

#include "entronet/json_io.hpp"
#include "common.hpp"

using namespace entronet;
using namespace entronet::mpnet;
using setfn::subset_from_string;

namespace {

ExactScalar bits(int n) { return ExactScalar::log2_of(n); }

const ManifestRow& row_of(const MpInstance& inst, const std::string& sink) {
    for (const ManifestRow& row : inst.manifest)
        if (row.sink == sink) return row;
    throw Error("no sink " + sink);
}

ExactScalar cap_of(const MpInstance& inst, const std::string& edge) {
    for (const auto& [id, cap] : inst.edge_caps)
        if (id == edge) return cap;
    throw Error("no capacitated edge " + edge);
}

// The hand-built zero-error code for the Z2 x Z2 instance: a, b fair bits,
// V1 = a, V2 = b, V3 = a xor b, V4 = (a, b), and every W channel carries a
// where the sink is missing it.
netmodel::NetworkCode handmade_z2z2_code(const MpInstance& inst) {
    const netmodel::Network& net = inst.network;
    netmodel::NetworkCode code;
    code.session_alphabet = {{"a", 2}, {"b", 2}, {"c", 1}};

    std::map<std::vector<int>, Rational> src;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) src[{a, b, 0}] = Rational(1, 4);
    code.source_dist = groups::JointDistribution({"a", "b", "c"}, src);

    auto from_source = [&](const std::string& edge, auto fn, int alphabet) {
        netmodel::CodingTable table{net.inputs_of_edge(edge), {}};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) table.table[{a, b, 0}] = fn(a, b);
        code.edge_alphabet[edge] = alphabet;
        code.functions[edge] = std::move(table);
    };
    auto carries_a = [](int a, int) { return a; };
    auto zero = [](int, int) { return 0; };

    from_source("V1", carries_a, 2);
    from_source("V2", [](int, int b) { return b; }, 2);
    from_source("W23", carries_a, 2);
    from_source("W24", carries_a, 2);
    from_source("W-T2", carries_a, 2);
    from_source("W-T4", carries_a, 2);
    from_source("W-T5", zero, 1);
    for (const char* pair : {"12", "13", "14", "23", "24", "34"})
        from_source("W-T6-" + std::string(pair), zero, 1);
    from_source("W-T8", carries_a, 2);
    from_source("W-T9", zero, 1);

    // V3 = W23 xor V2 at n3, V4 = (W24, V2) at n4
    netmodel::CodingTable v3{net.inputs_of_edge("V3"), {}}, v4{net.inputs_of_edge("V4"), {}};
    for (int w = 0; w < 2; ++w)
        for (int v2 = 0; v2 < 2; ++v2) {
            v3.table[{w, v2}] = w ^ v2;
            v4.table[{w, v2}] = 2 * w + v2;
        }
    code.edge_alphabet["V3"] = 2;
    code.edge_alphabet["V4"] = 4;
    code.functions["V3"] = std::move(v3);
    code.functions["V4"] = std::move(v4);

    for (const netmodel::Edge& e : net.edges) {
        if (code.functions.count(e.id)) continue;  // copy edges
        int alphabet = code.edge_alphabet.at(e.id.substr(0, 2));
        netmodel::CodingTable fn{net.inputs_of_edge(e.id), {}};
        for (int s = 0; s < alphabet; ++s) fn.table[{s}] = s;
        code.edge_alphabet[e.id] = alphabet;
        code.functions[e.id] = std::move(fn);
    }
    return code;
}

}  // namespace

TEST_CASE("build_mp on the Z2 x Z2 vector") {
    setfn::SetFunction h = groups::group_entropy_vector(testutil::z2z2_family());
    MpInstance inst = build_mp(h);

    CHECK(inst.manifest.size() == 17);
    CHECK(inst.network.nodes.size() == 24);
    CHECK(inst.network.edges.size() == 51);
    CHECK(inst.edge_caps.size() == 17);

    CHECK(cap_of(inst, "V1") == bits(2));
    CHECK(cap_of(inst, "V4") == bits(4));
    CHECK(cap_of(inst, "W23") == bits(2));
    CHECK(cap_of(inst, "W-T2") == bits(2));
    CHECK(cap_of(inst, "W-T5").sign() == 0);   // h(124) = h(4)
    CHECK(cap_of(inst, "W-T9").sign() == 0);   // h(14) = h(4)
    for (const char* pair : {"12", "13", "14", "23", "24", "34"})
        CHECK(cap_of(inst, "W-T6-" + std::string(pair)).sign() == 0);

    CHECK(row_of(inst, "T1").demands == std::vector<std::string>{"a"});
    CHECK(row_of(inst, "T1").claim == "Claim 1");
    CHECK(row_of(inst, "T3").inputs == std::vector<std::string>{"V1", "V2"});
    CHECK(row_of(inst, "T6-13").inputs == std::vector<std::string>{"V1", "V3", "W"});
    CHECK(row_of(inst, "T6-13").capacity_formula == "h(123)-h(13)");
    CHECK(row_of(inst, "T6-34").capacity_formula == "h(134)-h(34)");
    CHECK(row_of(inst, "T6-34").claim == "Claim 4");
    CHECK(row_of(inst, "T7-123").claim == "Claim 6");
    CHECK(row_of(inst, "T8").capacity_formula == "h(13)-h(3)");
    CHECK(row_of(inst, "T8").demands == std::vector<std::string>{"a"});

    // deterministic serialization
    CHECK(json_io::mp_instance_to_json(inst).dump() ==
          json_io::mp_instance_to_json(build_mp(h)).dump());
}

TEST_CASE("build_mp capacities on the 2a vector and the zero vector") {
    MpInstance inst = build_mp(builtin_zy_gap(1));
    CHECK(cap_of(inst, "W-T2") == ExactScalar::rational(1));   // h(12)-h(2) = a
    CHECK(cap_of(inst, "W-T6-12") == ExactScalar::rational(1));  // 4a-3a
    CHECK(cap_of(inst, "W23") == ExactScalar::rational(1));
    CHECK(inst.rates.lambda_a == ExactScalar::rational(2));

    MpInstance zero = build_mp(setfn::SetFunction::zero(4, Domain::Rational));
    for (const auto& [id, cap] : zero.edge_caps) CHECK(cap.sign() == 0);
}

TEST_CASE("build_mp rejects vectors with negative capacity formulas") {
    CHECK_THROWS_WITH_AS(build_mp(setfn::SetFunction::zero(3, Domain::Rational)),
                         doctest::Contains("four variables"), Error);

    // h(13) below h(3) must be called out by formula
    setfn::SetFunction low13 =
        builtin_pg13().with_value(subset_from_string("13", 4), ExactScalar::log2_of(1));
    CHECK_THROWS_WITH_AS(build_mp(low13), doctest::Contains("h(13)-h(3)"), Error);

    // h(12) below h(1) breaks the induced rates
    setfn::SetFunction low12 =
        builtin_zy_gap(1).with_value(subset_from_string("12", 4), ExactScalar::rational(1));
    CHECK_THROWS_WITH_AS(build_mp(low12), doctest::Contains("negative induced rate"), Error);

    setfn::SetFunction broken =
        builtin_pg13().with_value(subset_from_string("34", 4), ExactScalar::log2_of(5));
    CHECK_THROWS_WITH_AS(build_mp(broken), doctest::Contains("condition (1)"), Error);
}

TEST_CASE("source transform produces independent uniform sessions") {
    SourceTransform st = source_transform(groups::quasi_uniform_distribution(testutil::z2z2_family()));
    CHECK(st.size_a == 2);
    CHECK(st.size_b == 2);
    CHECK(st.size_c == 1);

    groups::FiniteGroup g = testutil::z2z2();
    std::vector<int> whole{0, 1, 2, 3};
    SourceTransform trivial = source_transform(
        groups::quasi_uniform_distribution(groups::SubgroupFamily(g, {whole, whole, whole, whole})));
    CHECK(trivial.size_a == 1);
    CHECK(trivial.size_b == 1);
    CHECK(trivial.size_c == 1);

    groups::SubgroupFamily z6(groups::FiniteGroup::cyclic(6), {{0, 3}, {0, 2, 4}, {0}, {0}});
    SourceTransform stz6 = source_transform(groups::quasi_uniform_distribution(z6));
    CHECK(stz6.size_a == 3);
    CHECK(stz6.size_b == 2);
    CHECK(stz6.size_c == 1);

    groups::JointDistribution bern({"X", "Y", "Z"}, {{{0, 0, 0}, Rational(1, 3)},
                                                     {{1, 0, 0}, Rational(2, 3)}});
    CHECK_THROWS_WITH_AS(source_transform(bern), doctest::Contains("quasi-uniform"), Error);
}

TEST_CASE("conditional index compresses to the exact conditional entropy") {
    groups::JointDistribution d = groups::quasi_uniform_distribution(testutil::z2z2_family());
    ConditionalIndex u3_given_u2 = conditional_index(d, {2}, {1});
    CHECK(u3_given_u2.alphabet == 2);  // 1 bit = h(23) - h(2)

    ConditionalIndex determined = conditional_index(d, {3}, {0, 1, 2});
    CHECK(determined.alphabet == 1);  // condition (1) forces determinism

    ConditionalIndex unconditional = conditional_index(d, {3}, {});
    CHECK(unconditional.alphabet == 4);

    // recoverability: (given, rank) -> target round trip
    for (const auto& [key, rank] : u3_given_u2.index_of) {
        std::vector<int> ikey{key[0], rank};
        CHECK(u3_given_u2.value_of.at(ikey) == std::vector<int>{key[1]});
    }

    groups::JointDistribution skew({"X", "Y"}, {{{0, 0}, Rational(1, 2)},
                                                {{1, 0}, Rational(1, 4)},
                                                {{1, 1}, Rational(1, 4)}});
    CHECK_THROWS_WITH_AS(conditional_index(skew, {1}, {0}), doctest::Contains("constant"), Error);
}

TEST_CASE("solve and verify the Z2 x Z2 instance") {
    groups::SubgroupFamily fam = testutil::z2z2_family();
    setfn::SetFunction h = groups::group_entropy_vector(fam);
    MpInstance inst = build_mp(h);
    SolutionBundle bundle = solve_mp_from_group(fam, inst);

    CHECK(bundle.code.edge_alphabet.at("W-T2") == 2);
    CHECK(bundle.code.edge_alphabet.at("W-T6-12") == 1);
    CHECK(bundle.code.edge_alphabet.at("V4") == 4);
    CHECK(netmodel::all_decodable(netmodel::check_decodable(inst.network, bundle.code)));
    CHECK(netmodel::check_admissible(inst.network, bundle.code, inst.tuple()));

    Theorem1Report rep = verify_theorem1(inst, bundle);
    CHECK(rep.matches == 15);
    CHECK(rep.all_match);
    CHECK(rep.claims_ok);
}

TEST_CASE("solve the (Z2)^3 coordinate-line instance and the trivial family") {
    SolutionBundle bundle = solve_mp_from_group(testutil::z2cubed_family());
    MpInstance inst = build_mp(groups::group_entropy_vector(testutil::z2cubed_family()));
    Theorem1Report rep = verify_theorem1(inst, bundle);
    CHECK(rep.all_match);
    CHECK(rep.claims_ok);

    groups::FiniteGroup g = testutil::z2z2();
    std::vector<int> whole{0, 1, 2, 3};
    groups::SubgroupFamily trivial(g, {whole, whole, whole, whole});
    SolutionBundle tb = solve_mp_from_group(trivial);
    CHECK(verify_theorem1(build_mp(groups::group_entropy_vector(trivial)), tb).all_match);
}

TEST_CASE("condition (1) failures are reported with the unequal terms") {
    groups::FiniteGroup g = testutil::z2z2();
    std::vector<int> whole{0, 1, 2, 3};
    // G3 = G4 = G gives h(34) = 0 while h(123) = 2
    groups::SubgroupFamily fam(g, {{0, 1}, {0, 2}, whole, whole});
    CHECK_THROWS_WITH_AS(solve_mp_from_group(fam), doctest::Contains("condition (1)"), Error);
}

TEST_CASE("a hand-built code for the Z2 x Z2 instance also reproduces h") {
    setfn::SetFunction h = groups::group_entropy_vector(testutil::z2z2_family());
    MpInstance inst = build_mp(h);
    netmodel::NetworkCode code = handmade_z2z2_code(inst);

    CHECK(netmodel::all_decodable(netmodel::check_decodable(inst.network, code)));
    CHECK(netmodel::check_admissible(inst.network, code, inst.tuple()));

    SolutionBundle bundle = assemble_bundle(inst, code);
    Theorem1Report rep = verify_theorem1(inst, bundle);
    CHECK(rep.matches == 15);
    CHECK(rep.claims_ok);
}

TEST_CASE("negative control: a constant V3 flips Claim 3 with an exact margin") {
    groups::SubgroupFamily fam = testutil::z2z2_family();
    MpInstance inst = build_mp(groups::group_entropy_vector(fam));
    SolutionBundle solved = solve_mp_from_group(fam, inst);

    netmodel::NetworkCode corrupted = solved.code;
    for (auto& [key, value] : corrupted.functions.at("V3").table) value = 0;
    SolutionBundle bad = assemble_bundle(inst, corrupted);

    Theorem1Report rep = verify_theorem1(inst, bad);
    CHECK_FALSE(rep.all_match);
    bool claim3_failed = false;
    for (const ClaimEntry& c : rep.claims)
        if (c.statement == "H(V3) = h(3)") {
            claim3_failed = !c.holds;
            CHECK(c.margin == "log2:1/2");  // H(V3) - h(3) = 0 - 1 bit
        }
    CHECK(claim3_failed);
    // and the corrupted code no longer decodes everywhere
    CHECK_FALSE(netmodel::all_decodable(netmodel::check_decodable(inst.network, corrupted)));
}

TEST_CASE("classification narratives") {
    Classification pg = classify(builtin_pg13());
    CHECK(pg.known_entropic);
    CHECK(pg.solvability == "solvable");
    CHECK(pg.abelian_insufficient);

    Classification zg = classify(builtin_zy_gap(1));
    CHECK_FALSE(zg.known_entropic);
    CHECK(zg.solvability == "not-asymptotically-solvable");

    Classification zero = classify(setfn::SetFunction::zero(4, Domain::Rational));
    CHECK(zero.solvability == "solvable");
    CHECK_FALSE(zero.abelian_insufficient);

    Classification gv = classify(groups::group_entropy_vector(testutil::z2z2_family()));
    CHECK(gv.membership.all_pass);

    CHECK_THROWS_AS(
        classify(builtin_pg13().with_value(subset_from_string("34", 4), ExactScalar::log2_of(5))),
        Error);
}

TEST_CASE("builtins match their published values") {
    setfn::SetFunction pg = builtin_pg13();
    CHECK(pg.raw(subset_from_string("12", 4)) == Rational(78));
    CHECK(pg.raw(subset_from_string("34", 4)) == Rational(156));
    CHECK(pg.raw(subset_from_string("13", 4)) == Rational(52));
    CHECK(setfn::satisfies_condition1(pg));

    setfn::SetFunction zg = builtin_zy_gap(Rational(1, 2));
    CHECK(zg.raw(1) == Rational(1));  // 2a at a = 1/2
    CHECK(zg.raw(subset_from_string("34", 4)) == Rational(2));
    CHECK(builtin_zy_gap(0).value(1).sign() == 0);
    CHECK_THROWS_AS(builtin_zy_gap(-1), Error);
    CHECK_FALSE(builtin_vector("nope").has_value());
}

TEST_CASE("round trip over the small condition-(1) families") {
    groups::FiniteGroup g = testutil::z2z2();
    auto subgroups = g.all_subgroups();
    int solved = 0;
    for (const auto& s1 : subgroups)
        for (const auto& s2 : subgroups)
            for (const auto& s3 : subgroups)
                for (const auto& s4 : subgroups) {
                    groups::SubgroupFamily fam(g, {s1, s2, s3, s4});
                    setfn::SetFunction h = groups::group_entropy_vector(fam);
                    if (!setfn::satisfies_condition1(h)) continue;
                    MpInstance inst = build_mp(h);
                    Theorem1Report rep = verify_theorem1(inst, solve_mp_from_group(fam, inst));
                    CHECK(rep.all_match);
                    ++solved;
                }
    CHECK(solved > 50);  // a healthy share of the 625 families qualifies
}
