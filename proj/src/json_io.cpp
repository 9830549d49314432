#include "entronet/json_io.hpp"

#include <sstream>

namespace entronet::json_io {

using setfn::Subset;

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw Error(std::string("missing JSON key '") + key + "'");
    return *it;
}

}  // namespace

Json set_function_to_json(const setfn::SetFunction& v) {
    Json values = Json::object();
    for (Subset s = 1; s <= v.full_set(); ++s)
        values[setfn::subset_to_string(s)] = rational_to_string(v.raw(s));
    return Json{{"n", v.n()}, {"domain", domain_name(v.domain())}, {"values", values}};
}

setfn::SetFunction set_function_from_json(const Json& j) {
    if (!j.is_object()) throw Error("set function JSON must be an object");
    int n = require(j, "n").get<int>();
    Domain domain = parse_domain(require(j, "domain").get<std::string>());
    std::map<Subset, Rational> vals;
    for (const auto& [key, value] : require(j, "values").items())
        vals.emplace(setfn::subset_from_string(key, n), parse_rational(value.get<std::string>()));
    return setfn::SetFunction(n, domain, std::move(vals));
}

Json inequality_to_json(const cones::Inequality& ineq, int n) {
    Json coeffs = Json::object();
    for (auto& [s, c] : ineq.expr.coeffs) coeffs[setfn::subset_to_string(s)] = c;
    return Json{{"n", n}, {"coeffs", coeffs}, {"name", ineq.name}};
}

cones::Inequality inequality_from_json(const Json& j, int* n_out) {
    if (!j.is_object()) throw Error("inequality JSON must be an object");
    int n = require(j, "n").get<int>();
    if (n_out) *n_out = n;
    cones::Inequality ineq;
    ineq.expr.n = n;
    for (const auto& [key, value] : require(j, "coeffs").items()) {
        if (!value.is_number_integer()) throw Error("inequality coefficients must be integers");
        ineq.expr.add(setfn::subset_from_string(key, n), value.get<long>());
    }
    ineq.name = j.value("name", std::string("inequality"));
    ineq.expr.label = ineq.name;
    return ineq;
}

Json verdict_to_json(const cones::Verdict& v) {
    Json j{{"holds", v.holds}, {"margin", v.margin.to_string()}};
    if (v.products)
        j["comparison"] = Json{{"lhs", v.products->lhs.str()}, {"rhs", v.products->rhs.str()}};
    if (!v.holds) {
        Json w{{"instance", v.witness_name}};
        if (v.witness_perm) w["permutation"] = *v.witness_perm;
        j["witness"] = w;
    }
    return j;
}

Json membership_to_json(const cones::MembershipReport& rep) {
    return Json{{"condition1", true},
                {"gamma4", verdict_to_json(rep.gamma4)},
                {"ingleton", verdict_to_json(rep.ingleton)},
                {"zy", verdict_to_json(rep.zy)},
                {"all_pass", rep.all_pass},
                {"conclusions", rep.conclusions}};
}

Json proof_to_json(const cones::ProofResult& proof, int n) {
    Json j{{"provable", proof.provable}};
    if (proof.provable) {
        Json mult = Json::object();
        std::vector<cones::Inequality> elems = cones::elemental_inequalities(n);
        for (std::size_t r = 0; r < proof.multipliers.size(); ++r)
            if (proof.multipliers[r] != 0)
                mult[elems[r].name] = rational_to_string(proof.multipliers[r]);
        j["multipliers"] = mult;
    } else {
        j["counterexample"] = set_function_to_json(*proof.counterexample);
        j["value"] = proof.counterexample_value.to_string();
    }
    return j;
}

groups::SubgroupFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw Error("group JSON must be an object");
    if (j.contains("table")) {
        auto table = require(j, "table").get<std::vector<std::vector<int>>>();
        if (j.contains("order") && require(j, "order").get<int>() != static_cast<int>(table.size()))
            throw Error("declared order does not match the table");
        groups::FiniteGroup g = groups::FiniteGroup::from_table(std::move(table));
        auto subs = require(j, "subgroups").get<std::vector<std::vector<int>>>();
        return groups::SubgroupFamily(std::move(g), std::move(subs));
    }
    int degree = require(j, "degree").get<int>();
    auto gens = require(j, "generators").get<std::vector<std::vector<int>>>();
    groups::ExpandedPermutationGroup expanded = groups::expand_permutation_group(degree, gens);
    std::vector<std::vector<int>> subs;
    for (const auto& sub_gens :
         require(j, "subgroup_generators").get<std::vector<std::vector<std::vector<int>>>>()) {
        std::vector<int> seed;
        for (const auto& perm : sub_gens) seed.push_back(expanded.element_index(perm));
        subs.push_back(expanded.group.closure(seed));
    }
    return groups::SubgroupFamily(std::move(expanded.group), std::move(subs));
}

Json family_to_json(const groups::SubgroupFamily& fam) {
    return Json{{"order", fam.group.order()},
                {"table", fam.group.table()},
                {"subgroups", fam.subgroups}};
}

Json network_to_json(const netmodel::Network& net) {
    Domain domain = Domain::Log2Rational;
    for (const netmodel::Edge& e : net.edges)
        if (e.capacity) domain = e.capacity->domain();
    Json edges = Json::array();
    for (const netmodel::Edge& e : net.edges) {
        Json je{{"id", e.id}, {"tail", e.tail}, {"head", e.head}};
        if (e.capacity) je["capacity"] = rational_to_string(e.capacity->raw());
        edges.push_back(je);
    }
    Json sessions = Json::array();
    for (const netmodel::Session& s : net.sessions)
        sessions.push_back(Json{{"id", s.id}, {"origin", s.origin}, {"destinations", s.destinations}});
    return Json{{"domain", domain_name(domain)},
                {"nodes", net.nodes},
                {"edges", edges},
                {"sessions", sessions}};
}

netmodel::Network network_from_json(const Json& j) {
    if (!j.is_object()) throw Error("network JSON must be an object");
    Domain domain = parse_domain(j.value("domain", std::string("rational")));
    netmodel::Network net;
    net.nodes = require(j, "nodes").get<std::vector<std::string>>();
    for (const Json& je : require(j, "edges")) {
        netmodel::Edge e;
        e.id = require(je, "id").get<std::string>();
        e.tail = require(je, "tail").get<std::string>();
        e.head = require(je, "head").get<std::string>();
        if (je.contains("capacity"))
            e.capacity = ExactScalar::from_raw(domain, parse_rational(je["capacity"].get<std::string>()));
        net.edges.push_back(std::move(e));
    }
    for (const Json& js : require(j, "sessions")) {
        netmodel::Session s;
        s.id = require(js, "id").get<std::string>();
        s.origin = require(js, "origin").get<std::string>();
        s.destinations = require(js, "destinations").get<std::vector<std::string>>();
        net.sessions.push_back(std::move(s));
    }
    netmodel::validate_network(net);
    return net;
}

Json mp_instance_to_json(const mpnet::MpInstance& inst) {
    Json manifest = Json::array();
    for (const mpnet::ManifestRow& row : inst.manifest) {
        Json jr{{"sink", row.sink},
                {"inputs", row.inputs},
                {"demands", row.demands}};
        if (!row.w_edge_id.empty()) {
            jr["capacity_formula"] = row.capacity_formula;
            jr["capacity"] = row.w_capacity->to_string();
            jr["w_edge"] = row.w_edge_id;
        }
        jr["claim"] = row.claim;
        manifest.push_back(std::move(jr));
    }
    return Json{{"network", network_to_json(inst.network)},
                {"h", set_function_to_json(inst.h)},
                {"rates",
                 Json{{"a", inst.rates.lambda_a.to_string()},
                      {"b", inst.rates.lambda_b.to_string()},
                      {"c", inst.rates.lambda_c.to_string()}}},
                {"manifest", manifest}};
}

Json distribution_to_json(const groups::JointDistribution& dist) {
    Json pmf = Json::object();
    for (const auto& [outcome, mass] : dist.pmf)
        pmf[join_ints(outcome)] = rational_to_string(mass);
    return Json{{"vars", dist.vars}, {"pmf", pmf}};
}

Json code_to_json(const netmodel::NetworkCode& code) {
    Json fns = Json::object();
    for (const auto& [eid, fn] : code.functions) {
        Json table = Json::object();
        for (const auto& [key, value] : fn.table) table[join_ints(key)] = value;
        fns[eid] = Json{{"inputs", fn.inputs}, {"table", table}};
    }
    return Json{{"session_alphabets", code.session_alphabet},
                {"edge_alphabets", code.edge_alphabet},
                {"functions", fns},
                {"source", distribution_to_json(code.source_dist)}};
}

Json bundle_to_json(const mpnet::SolutionBundle& bundle) {
    return Json{{"code", code_to_json(bundle.code)},
                {"subgroups", bundle.family_subgroups},
                {"joint", distribution_to_json(bundle.joint)}};
}

Json theorem1_to_json(const mpnet::Theorem1Report& rep) {
    Json entropies = Json::array();
    for (const mpnet::EntropyEntry& e : rep.entropies) {
        Json je{{"alpha", setfn::subset_to_string(e.alpha)},
                {"expected", e.expected.to_string()},
                {"actual", e.actual ? Json(e.actual->to_string()) : Json(nullptr)},
                {"match", e.match}};
        entropies.push_back(std::move(je));
    }
    Json claims = Json::array();
    for (const mpnet::ClaimEntry& c : rep.claims)
        claims.push_back(Json{{"claim", c.claim},
                              {"statement", c.statement},
                              {"holds", c.holds},
                              {"margin", c.margin}});
    return Json{{"matches", rep.matches},
                {"all_match", rep.all_match},
                {"entropies", entropies},
                {"claims", claims},
                {"claims_ok", rep.claims_ok}};
}

Json classification_to_json(const mpnet::Classification& cls) {
    return Json{{"membership", membership_to_json(cls.membership)},
                {"known_entropic", cls.known_entropic},
                {"solvability", cls.solvability},
                {"abelian_insufficient", cls.abelian_insufficient},
                {"narrative", cls.narrative}};
}

}  // namespace entronet::json_io
