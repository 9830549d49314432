#include "entronet/mpnet.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace entronet::mpnet {

using setfn::subset_from_string;
using setfn::subset_to_string;

namespace {

constexpr Subset S1 = 1, S2 = 2, S3 = 4, S4 = 8;

std::string h_formula(Subset x) { return "h(" + subset_to_string(x) + ")"; }

ExactScalar gap_capacity(const SetFunction& h, Subset hi, Subset lo) {
    ExactScalar cap = h.value(hi) - h.value(lo);
    if (cap.sign() < 0)
        throw Error("capacity formula " + h_formula(hi) + "-" + h_formula(lo) +
                    " is negative: " + cap.to_string());
    return cap;
}

ExactScalar single_capacity(const SetFunction& h, Subset x) {
    ExactScalar cap = h.value(x);
    if (cap.sign() < 0) throw Error("capacity formula " + h_formula(x) + " is negative");
    return cap;
}

int smallest_missing(int i, int j) {
    for (int k = 1; k <= 4; ++k)
        if (k != i && k != j) return k;
    throw Error("unreachable");
}

}  // namespace

netmodel::RateCapacityTuple MpInstance::tuple() const {
    netmodel::RateCapacityTuple t;
    t.session_rates = {{"a", rates.lambda_a}, {"b", rates.lambda_b}, {"c", rates.lambda_c}};
    t.edge_capacities = edge_caps;
    return t;
}

MpInstance build_mp(const SetFunction& h) {
    if (h.n() != 4) throw Error("MP(h) needs a set function on four variables");
    {
        auto mism = setfn::condition1_mismatches(h);
        if (!mism.empty()) throw Error("condition (1) fails: " + mism[0]);
    }

    MpInstance inst{netmodel::Network{}, h, setfn::induced_rates(h), {}, {}};
    netmodel::Network& net = inst.network;

    // Part 1: the source and the four coded messages V1..V4. V2 is reused by
    // the encoders of V3 and V4 through its copy node.
    net.nodes = {"src", "cp1", "cp2", "cp3", "cp4", "n3", "n4"};
    auto add_edge = [&](const std::string& id, const std::string& tail, const std::string& head,
                        std::optional<ExactScalar> cap) {
        net.edges.push_back({id, tail, head, cap});
        if (cap) inst.edge_caps.emplace_back(id, *cap);
    };
    add_edge("V1", "src", "cp1", single_capacity(h, S1));
    add_edge("V2", "src", "cp2", single_capacity(h, S2));
    add_edge("W23", "src", "n3", gap_capacity(h, S2 | S3, S2));
    add_edge("W24", "src", "n4", gap_capacity(h, S2 | S4, S2));
    add_edge("V2:n3", "cp2", "n3", std::nullopt);
    add_edge("V2:n4", "cp2", "n4", std::nullopt);
    add_edge("V3", "n3", "cp3", single_capacity(h, S3));
    add_edge("V4", "n4", "cp4", single_capacity(h, S4));

    // Part 2: one subnetwork per receiver. Each sink takes copies of its V
    // inputs plus at most one side channel W from the source.
    struct SinkSpec {
        std::string sink;
        std::vector<int> v_inputs;
        std::vector<std::string> demands;
        std::optional<std::pair<Subset, Subset>> w_gap;  // capacity h(first)-h(second)
        std::string claim;
    };
    std::vector<SinkSpec> specs;
    specs.push_back({"T1", {1}, {"a"}, std::nullopt, "Claim 1"});
    specs.push_back({"T2", {2}, {"a", "b"}, std::pair{S1 | S2, S2}, "Claim 2"});
    specs.push_back({"T3", {1, 2}, {"a", "b"}, std::nullopt, "Claim 2"});
    specs.push_back({"T4", {3}, {"a", "b", "c"}, std::pair{S1 | S2 | S3, S3}, "Claim 3"});
    specs.push_back({"T5", {4}, {"a", "b", "c"}, std::pair{S1 | S2 | S4, S4}, "Claim 3"});
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Subset pair = (Subset(1) << (i - 1)) | (Subset(1) << (j - 1));
            int k = smallest_missing(i, j);
            Subset triple = pair | (Subset(1) << (k - 1));
            // any completing index gives the same capacity under condition (1)
            for (int k2 = k + 1; k2 <= 4; ++k2) {
                if (k2 == i || k2 == j) continue;
                if (h.value(pair | (Subset(1) << (k2 - 1))) != h.value(triple))
                    throw Error("defect: completing-index capacities differ at " + h_formula(pair));
            }
            specs.push_back({"T6-" + subset_to_string(pair), {i, j}, {"a", "b", "c"},
                             std::pair{triple, pair}, "Claim 4"});
        }
    for (Subset t = 1; t <= 15; ++t) {
        if (setfn::subset_size(t) != 3) continue;
        std::vector<int> vs = setfn::subset_elements(t);
        specs.push_back({"T7-" + subset_to_string(t), vs, {"a", "b", "c"}, std::nullopt, "Claim 6"});
    }
    specs.push_back({"T8", {3}, {"a"}, std::pair{S1 | S3, S3}, "Claim 5"});
    specs.push_back({"T9", {4}, {"a"}, std::pair{S1 | S4, S4}, "Claim 5"});

    for (const SinkSpec& spec : specs) {
        net.nodes.push_back(spec.sink);
        ManifestRow row;
        row.sink = spec.sink;
        row.demands = spec.demands;
        row.claim = spec.claim;
        for (int i : spec.v_inputs) {
            std::string vid = "V" + std::to_string(i);
            add_edge(vid + ":" + spec.sink, "cp" + std::to_string(i), spec.sink, std::nullopt);
            row.inputs.push_back(vid);
        }
        if (spec.w_gap) {
            ExactScalar cap = gap_capacity(h, spec.w_gap->first, spec.w_gap->second);
            add_edge("W-" + spec.sink, "src", spec.sink, cap);
            row.inputs.push_back("W");
            row.capacity_formula =
                h_formula(spec.w_gap->first) + "-" + h_formula(spec.w_gap->second);
            row.w_capacity = cap;
            row.w_edge_id = "W-" + spec.sink;
        }
        inst.manifest.push_back(std::move(row));
    }

    for (const char* sid : {"a", "b", "c"}) {
        netmodel::Session s{sid, "src", {}};
        for (const ManifestRow& row : inst.manifest)
            if (std::find(row.demands.begin(), row.demands.end(), sid) != row.demands.end())
                s.destinations.push_back(row.sink);
        net.sessions.push_back(std::move(s));
    }
    netmodel::validate_network(net);
    return inst;
}

namespace {

// Single-valuedness of target given `given`, over the joint support.
bool is_function_of(const JointDistribution& dist, const std::vector<int>& target,
                    const std::vector<int>& given) {
    std::map<std::vector<int>, std::vector<int>> seen;
    std::vector<int> gkey(given.size()), tkey(target.size());
    for (const auto& [outcome, mass] : dist.pmf) {
        for (std::size_t i = 0; i < given.size(); ++i) gkey[i] = outcome[given[i]];
        for (std::size_t i = 0; i < target.size(); ++i) tkey[i] = outcome[target[i]];
        auto [it, inserted] = seen.emplace(gkey, tkey);
        if (!inserted && it->second != tkey) return false;
    }
    return true;
}

}  // namespace

ConditionalIndex conditional_index(const JointDistribution& dist, const std::vector<int>& target,
                                   const std::vector<int>& given) {
    if (target.empty()) throw Error("conditional index needs a nonempty target");
    ConditionalIndex ci;
    ci.target_idx = target;
    ci.given_idx = given;

    std::map<std::vector<int>, std::set<std::vector<int>>> buckets;
    std::vector<int> gkey(given.size()), tkey(target.size());
    for (const auto& [outcome, mass] : dist.pmf) {
        for (std::size_t i = 0; i < given.size(); ++i) gkey[i] = outcome[given[i]];
        for (std::size_t i = 0; i < target.size(); ++i) tkey[i] = outcome[target[i]];
        buckets[gkey].insert(tkey);
    }
    std::size_t size = 0;
    bool first = true;
    for (const auto& [gk, support] : buckets) {
        if (first) {
            size = support.size();
            first = false;
        } else if (support.size() != size) {
            throw Error("conditional support size is not constant (violates quasi-uniformity)");
        }
        int rank = 0;
        for (const std::vector<int>& tv : support) {
            std::vector<int> key = gk;
            key.insert(key.end(), tv.begin(), tv.end());
            ci.index_of.emplace(std::move(key), rank);
            std::vector<int> ikey = gk;
            ikey.push_back(rank);
            ci.value_of.emplace(std::move(ikey), tv);
            ++rank;
        }
    }
    ci.alphabet = buckets.empty() ? 1 : static_cast<int>(size);
    return ci;
}

SourceTransform source_transform(const JointDistribution& dist) {
    if (dist.n_vars() < 3) throw Error("source transform needs at least three variables");
    if (!check_quasi_uniform(dist)) throw Error("input distribution is not quasi-uniform");

    // a = rank of U1; b = rank of U2 within its conditional support given U1;
    // c = rank of U3 given (U1, U2). conditional_index enforces the constant
    // support sizes.
    ConditionalIndex ra = conditional_index(dist, {0}, {});
    ConditionalIndex rb = conditional_index(dist, {1}, {0});
    ConditionalIndex rc = conditional_index(dist, {2}, {0, 1});

    SourceTransform st;
    st.size_a = ra.alphabet;
    st.size_b = rb.alphabet;
    st.size_c = rc.alphabet;

    std::vector<std::string> vars = dist.vars;
    vars.insert(vars.end(), {"a", "b", "c"});
    std::map<std::vector<int>, Rational> pmf;
    for (const auto& [outcome, mass] : dist.pmf) {
        std::vector<int> row = outcome;
        row.push_back(ra.index_of.at({outcome[0]}));
        row.push_back(rb.index_of.at({outcome[0], outcome[1]}));
        row.push_back(rc.index_of.at({outcome[0], outcome[1], outcome[2]}));
        pmf.emplace(std::move(row), mass);
    }
    st.joint = JointDistribution(std::move(vars), std::move(pmf));

    const int n = dist.n_vars();
    const int A = n, B = n + 1, C = n + 2;

    // independence + uniformity: the (a,b,c) marginal must be uniform on the
    // full product box
    JointDistribution abc = st.joint.marginal({A, B, C});
    if (!abc.uniform_on_support() ||
        abc.support_size() != static_cast<std::size_t>(st.size_a) * st.size_b * st.size_c)
        throw Error("defect: transformed sessions are not independent uniform");

    // both-way determinism, the zero conditional entropy terms
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
        {{0}, {A}},       {{A}, {0}},       {{0, 1}, {A, B}},
        {{A, B}, {0, 1}}, {{0, 1, 2}, {A, B, C}}, {{A, B, C}, {0, 1, 2}},
    };
    for (const auto& [target, given] : pairs)
        if (!is_function_of(st.joint, target, given))
            throw Error("defect: source transform is not bijective on its blocks");

    // rate identities: |a| = 2^H(U1), |a||b| = 2^H(U1U2), |a||b||c| = 2^H(U1U2U3)
    if (groups::entropy_of(dist, {0}) != ExactScalar::log2_of(st.size_a) ||
        groups::entropy_of(dist, {0, 1}) != ExactScalar::log2_of(Rational(st.size_a) * st.size_b) ||
        groups::entropy_of(dist, {0, 1, 2}) !=
            ExactScalar::log2_of(Rational(st.size_a) * st.size_b * st.size_c))
        throw Error("defect: transformed alphabet sizes miss the entropy rates");

    return st;
}

SolutionBundle solve_mp_from_group(const SubgroupFamily& fam) {
    if (fam.n() != 4) throw Error("MP(h) needs a family of four subgroups");
    SetFunction h = groups::group_entropy_vector(fam);
    auto mism = setfn::condition1_mismatches(h);
    if (!mism.empty()) {
        std::string all;
        for (const std::string& m : mism) all += (all.empty() ? "" : "; ") + m;
        throw Error("condition (1) fails for the group vector: " + all);
    }
    return solve_mp_from_group(fam, build_mp(h));
}

SolutionBundle solve_mp_from_group(const SubgroupFamily& fam, const MpInstance& inst) {
    const netmodel::Network& net = inst.network;
    JointDistribution dist = quasi_uniform_distribution(fam);
    SourceTransform st = source_transform(dist);
    const int A = 4, B = 5, C = 6;  // positions of a, b, c in st.joint

    std::map<std::string, ExactScalar> cap_of(inst.edge_caps.begin(), inst.edge_caps.end());

    // canonical relabelings of the coset labels U1..U4
    std::vector<ConditionalIndex> rank(4);
    for (int i = 0; i < 4; ++i) rank[i] = conditional_index(st.joint, {i}, {});

    // every W edge carries the conditional index of exactly what its decoder
    // is missing
    std::map<std::string, ConditionalIndex> w_index;
    w_index.emplace("W23", conditional_index(st.joint, {2}, {1}));
    w_index.emplace("W24", conditional_index(st.joint, {3}, {1}));
    for (const ManifestRow& row : inst.manifest) {
        if (row.w_edge_id.empty()) continue;
        if (row.sink == "T2")
            w_index.emplace(row.w_edge_id, conditional_index(st.joint, {A, B}, {1}));
        else if (row.sink == "T4")
            w_index.emplace(row.w_edge_id, conditional_index(st.joint, {A, B, C}, {2}));
        else if (row.sink == "T5")
            w_index.emplace(row.w_edge_id, conditional_index(st.joint, {A, B, C}, {3}));
        else if (row.sink == "T8")
            w_index.emplace(row.w_edge_id, conditional_index(st.joint, {0}, {2}));
        else if (row.sink == "T9")
            w_index.emplace(row.w_edge_id, conditional_index(st.joint, {0}, {3}));
        else {  // T6-ij: U_k given (U_i, U_j), k the smallest completing index
            std::vector<int> vs;
            for (const std::string& in : row.inputs)
                if (in != "W") vs.push_back(in[1] - '1');
            int k = smallest_missing(vs[0] + 1, vs[1] + 1) - 1;
            w_index.emplace(row.w_edge_id, conditional_index(st.joint, {k}, vs));
        }
    }

    netmodel::NetworkCode code;
    code.session_alphabet = {{"a", st.size_a}, {"b", st.size_b}, {"c", st.size_c}};
    for (int i = 0; i < 4; ++i) code.edge_alphabet["V" + std::to_string(i + 1)] = rank[i].alphabet;
    for (const auto& [eid, ci] : w_index) code.edge_alphabet[eid] = ci.alphabet;
    for (const netmodel::Edge& e : net.edges)
        if (!code.edge_alphabet.count(e.id))  // copy edges inherit the copied alphabet
            code.edge_alphabet[e.id] = rank[e.id[1] - '1'].alphabet;

    // rates and capacities are met with equality; assert rather than assume
    auto bits = [](int size) { return ExactScalar::log2_of(size); };
    if (bits(st.size_a) != inst.rates.lambda_a || bits(st.size_b) != inst.rates.lambda_b ||
        bits(st.size_c) != inst.rates.lambda_c)
        throw Error("defect: session alphabets miss the induced rates");
    for (const auto& [eid, cap] : inst.edge_caps)
        if (bits(code.edge_alphabet.at(eid)) != cap)
            throw Error("defect: alphabet of edge '" + eid + "' misses its capacity " +
                        cap.to_string());

    code.source_dist = st.joint.marginal({A, B, C});

    // encoder tables, built by enumerating the joint support
    std::map<std::string, netmodel::CodingTable> fns;
    auto table_for = [&](const std::string& eid) -> netmodel::CodingTable& {
        auto [it, inserted] = fns.emplace(eid, netmodel::CodingTable{net.inputs_of_edge(eid), {}});
        return it->second;
    };
    auto emit = [&](const std::string& eid, std::vector<int> key, int value) {
        auto [it, inserted] = table_for(eid).table.emplace(std::move(key), value);
        if (!inserted && it->second != value)
            throw Error("defect: encoder for '" + eid + "' is not well defined");
    };

    for (const auto& [o, mass] : st.joint.pmf) {
        std::vector<int> src_key{o[A], o[B], o[C]};
        emit("V1", src_key, rank[0].index_of.at({o[0]}));
        emit("V2", src_key, rank[1].index_of.at({o[1]}));
        for (const auto& [eid, ci] : w_index) {
            std::vector<int> gt;
            for (int gi : ci.given_idx) gt.push_back(o[gi]);
            for (int ti : ci.target_idx) gt.push_back(o[ti]);
            emit(eid, src_key, ci.index_of.at(gt));
        }
        // V3 out of n3 sees (W23, V2 copy); V4 out of n4 sees (W24, V2 copy)
        emit("V3", {w_index.at("W23").index_of.at({o[1], o[2]}), rank[1].index_of.at({o[1]})},
             rank[2].index_of.at({o[2]}));
        emit("V4", {w_index.at("W24").index_of.at({o[1], o[3]}), rank[1].index_of.at({o[1]})},
             rank[3].index_of.at({o[3]}));
    }
    for (const netmodel::Edge& e : net.edges) {
        if (fns.count(e.id)) continue;  // copy edge: identity on the copied symbol
        netmodel::CodingTable fn{net.inputs_of_edge(e.id), {}};
        for (int s = 0; s < code.edge_alphabet.at(e.id); ++s) fn.table.emplace(std::vector<int>{s}, s);
        fns.emplace(e.id, std::move(fn));
    }
    code.functions = std::move(fns);

    for (const netmodel::DecodeEntry& entry : netmodel::check_decodable(net, code))
        if (!entry.decodable)
            throw Error("defect: sink '" + entry.node + "' cannot decode session '" + entry.session +
                        "': " + entry.detail);
    if (!netmodel::check_admissible(net, code, inst.tuple()))
        throw Error("defect: solution is not admissible against the induced tuple");

    SolutionBundle bundle = assemble_bundle(inst, std::move(code));
    bundle.family_subgroups = fam.subgroups;
    return bundle;
}

SolutionBundle assemble_bundle(const MpInstance& inst, netmodel::NetworkCode code) {
    netmodel::CodeEvaluation eval = netmodel::evaluate_code(inst.network, code);

    // joint law of (a, b, c, V1..V4, all W): deterministic image of the source
    SolutionBundle bundle;
    bundle.code = std::move(code);
    std::vector<std::string> jvars{"a", "b", "c"};
    std::vector<int> jpos;
    for (const auto& [eid, cap] : inst.edge_caps) {
        jvars.push_back(eid);
        jpos.push_back(eval.edge_position(eid));
    }
    std::map<std::vector<int>, Rational> jpmf;
    for (const auto& [src, mass] : bundle.code.source_dist.pmf) {
        const std::vector<int>& symbols = eval.rows.at(src);
        std::vector<int> row = src;
        for (int p : jpos) row.push_back(symbols[p]);
        jpmf.emplace(std::move(row), mass);
    }
    bundle.joint = JointDistribution(std::move(jvars), std::move(jpmf));
    return bundle;
}

namespace {

std::optional<ExactScalar> exact_entropy(const JointDistribution& joint,
                                         const std::vector<int>& idxs) {
    try {
        return groups::entropy_of(joint, idxs);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string compare_note(const std::optional<ExactScalar>& actual, const ExactScalar& expected,
                         const JointDistribution& joint, const std::vector<int>& idxs) {
    if (!actual)
        return "marginal not uniform on support (float H ~= " +
               std::to_string(groups::entropy_bits_float(joint, idxs)) + ")";
    if (actual->domain() == expected.domain()) return (*actual - expected).to_string();
    return "H=" + actual->to_string() + " vs h=" + expected.to_string();
}

}  // namespace

Theorem1Report verify_theorem1(const MpInstance& inst, const SolutionBundle& bundle) {
    const JointDistribution& joint = bundle.joint;
    std::vector<int> vpos(4);
    for (int i = 0; i < 4; ++i) vpos[i] = joint.var_index("V" + std::to_string(i + 1));
    std::vector<int> spos{joint.var_index("a"), joint.var_index("b"), joint.var_index("c")};

    auto v_idxs = [&](Subset alpha) {
        std::vector<int> idxs;
        for (int i = 0; i < 4; ++i)
            if (alpha & (Subset(1) << i)) idxs.push_back(vpos[i]);
        return idxs;
    };

    Theorem1Report rep;
    for (Subset alpha = 1; alpha <= 15; ++alpha) {
        EntropyEntry entry;
        entry.alpha = alpha;
        entry.expected = inst.h.value(alpha);
        std::vector<int> idxs = v_idxs(alpha);
        entry.actual = exact_entropy(joint, idxs);
        entry.actual_float = groups::entropy_bits_float(joint, idxs);
        entry.match = entry.actual && ExactScalar::compare(*entry.actual, entry.expected) == 0;
        if (entry.match) ++rep.matches;
        rep.entropies.push_back(std::move(entry));
    }
    rep.all_match = rep.matches == 15;

    auto eq_claim = [&](const std::string& claim, const std::string& statement,
                        const std::vector<int>& idxs, const ExactScalar& expected, bool lower_bound) {
        std::optional<ExactScalar> actual = exact_entropy(joint, idxs);
        ClaimEntry entry{claim, statement, false, compare_note(actual, expected, joint, idxs)};
        if (actual) {
            int cmp = ExactScalar::compare(*actual, expected);
            entry.holds = lower_bound ? cmp >= 0 : cmp == 0;
        }
        rep.claims.push_back(std::move(entry));
    };
    auto zero_cond_claim = [&](const std::string& claim, const std::string& statement,
                               std::vector<int> target, const std::vector<int>& given) {
        std::vector<int> both = given;
        both.insert(both.end(), target.begin(), target.end());
        std::optional<ExactScalar> hb = exact_entropy(joint, both);
        std::optional<ExactScalar> hg = exact_entropy(joint, given);
        ClaimEntry entry{claim, statement, false, "marginal not uniform on support"};
        if (hb && hg) {
            ExactScalar cond = *hb - *hg;
            entry.holds = cond.sign() == 0;
            entry.margin = cond.to_string();
        }
        rep.claims.push_back(std::move(entry));
    };
    auto h_of = [&](const char* key) { return inst.h.value(subset_from_string(key, 4)); };

    eq_claim("Claim 1", "H(V1) = h(1)", v_idxs(S1), h_of("1"), false);
    zero_cond_claim("Claim 1", "H(V1|Va) = 0", v_idxs(S1), {spos[0]});
    eq_claim("Claim 2", "H(V2) = h(2)", v_idxs(S2), h_of("2"), false);
    eq_claim("Claim 2", "H(V1,V2) = h(12)", v_idxs(S1 | S2), h_of("12"), false);
    eq_claim("Claim 3", "H(V3) = h(3)", v_idxs(S3), h_of("3"), false);
    eq_claim("Claim 3", "H(V4) = h(4)", v_idxs(S4), h_of("4"), false);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Subset pair = (Subset(1) << (i - 1)) | (Subset(1) << (j - 1));
            eq_claim("Claim 4",
                     "H(V" + std::to_string(i) + ",V" + std::to_string(j) +
                         ") >= h(" + subset_to_string(pair) + ")",
                     v_idxs(pair), inst.h.value(pair), true);
        }
    eq_claim("Claim 5", "H(V1,V3) = h(13)", v_idxs(S1 | S3), h_of("13"), false);
    eq_claim("Claim 5", "H(V1,V4) = h(14)", v_idxs(S1 | S4), h_of("14"), false);
    for (Subset t = 1; t <= 15; ++t) {
        if (setfn::subset_size(t) != 3) continue;
        eq_claim("Claim 6", "H(V_" + subset_to_string(t) + ") = h(" + subset_to_string(t) + ")",
                 v_idxs(t), inst.h.value(t), false);
    }
    eq_claim("Claim 7", "H(V3,V4) = h(34)", v_idxs(S3 | S4), h_of("34"), false);
    eq_claim("Claim 8", "H(V1,V2,V3,V4) = h(1234)", v_idxs(15), h_of("1234"), false);
    eq_claim("Claim 8", "H(Va,Vb,Vc) = h(1234)", spos, h_of("1234"), false);
    eq_claim("Claim 9", "H(V2,V3) = h(23)", v_idxs(S2 | S3), h_of("23"), false);
    eq_claim("Claim 9", "H(V2,V4) = h(24)", v_idxs(S2 | S4), h_of("24"), false);

    rep.claims_ok = std::all_of(rep.claims.begin(), rep.claims.end(),
                                [](const ClaimEntry& c) { return c.holds; });
    return rep;
}

SetFunction builtin_pg13() {
    std::map<Subset, Rational> vals;
    for (Subset s = 1; s <= 15; ++s) {
        int size = setfn::subset_size(s);
        Rational arg;
        if (size == 1)
            arg = 13;
        else if (size >= 3 || s == (S3 | S4))
            arg = 156;  // log 13 + log 12
        else if (s == (S1 | S2))
            arg = 78;  // log 13 + log 6
        else
            arg = 52;  // log 13 + log 4
        vals.emplace(s, arg);
    }
    return SetFunction(4, Domain::Log2Rational, std::move(vals));
}

SetFunction builtin_zy_gap(const Rational& a) {
    if (a < 0) throw Error("zy-gap parameter must be nonnegative");
    std::map<Subset, Rational> vals;
    for (Subset s = 1; s <= 15; ++s) {
        int size = setfn::subset_size(s);
        Rational v;
        if (size == 1)
            v = 2 * a;
        else if (size >= 3 || s == (S3 | S4))
            v = 4 * a;
        else
            v = 3 * a;
        vals.emplace(s, v);
    }
    return SetFunction(4, Domain::Rational, std::move(vals));
}

std::optional<SetFunction> builtin_vector(const std::string& name, const Rational& a) {
    if (name == "pg13") return builtin_pg13();
    if (name == "zy-gap") return builtin_zy_gap(a);
    return std::nullopt;
}

namespace {

bool is_zero_vector(const SetFunction& h) {
    for (Subset s = 1; s <= h.full_set(); ++s)
        if (h.value(s).sign() != 0) return false;
    return true;
}

}  // namespace

Classification classify(const SetFunction& h) {
    Classification cls;
    cls.membership = cones::membership_report(h);  // checks condition (1)

    bool is_pg13 = h.domain() == Domain::Log2Rational && h == builtin_pg13();
    bool zero = is_zero_vector(h);
    bool is_zy_gap = false;
    if (h.domain() == Domain::Rational) {
        Rational a = h.raw(S1) / 2;
        is_zy_gap = a > 0 && h == builtin_zy_gap(a);
    }
    cls.known_entropic = is_pg13 || zero;
    cls.abelian_insufficient = !cls.membership.ingleton.holds;

    if (!cls.membership.gamma4.holds || !cls.membership.zy.holds)
        cls.solvability = "not-asymptotically-solvable";
    else if (cls.known_entropic)
        cls.solvability = "solvable";
    else
        cls.solvability = "unknown";

    cls.narrative = cls.membership.conclusions;
    if (is_pg13)
        cls.narrative.push_back(
            "this is the entropy vector of four quasi-uniform variables, so MP(h) is solvable; "
            "with Ingleton violated, abelian network codes (linear codes and time-sharing of them "
            "included) cannot solve it");
    if (is_zy_gap)
        cls.narrative.push_back(
            "h passes every polymatroid check yet fails Zhang-Yeung, so MP(h) is not "
            "asymptotically solvable: a Shannon-only outer bound cannot detect this");
    if (zero)
        cls.narrative.push_back("degenerate zero vector: every check passes and MP(h) is trivially solvable");
    if (cls.solvability == "unknown")
        cls.narrative.push_back(
            "all outer-bound checks pass; solvability of MP(h) is open unless h is known entropic");
    return cls;
}

}  // namespace entronet::mpnet
