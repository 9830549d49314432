#include "entronet/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace entronet::cli {

using json_io::Json;

namespace {

Json load_json_ref(const std::string& ref) {
    if (!ref.empty() && ref[0] == '{') return json_io::parse(ref);
    std::ifstream in(ref);
    if (!in) throw Error("cannot open '" + ref + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return json_io::parse(buf.str());
}

std::string verdict_word(bool holds) { return holds ? "holds" : "VIOLATED"; }

std::string margin_line(const cones::Verdict& v) {
    std::string line = "margin: " + v.margin.to_string();
    if (v.products)
        line += "  [" + v.products->lhs.str() + (v.holds ? " >= " : " < ") + v.products->rhs.str() + "]";
    return line;
}

}  // namespace

setfn::SetFunction load_vector(const std::string& ref, const Rational& a) {
    if (auto builtin = mpnet::builtin_vector(ref, a)) return *builtin;
    return json_io::set_function_from_json(load_json_ref(ref));
}

cones::Inequality load_inequality(const std::string& ref, int& n) {
    if (ref == "ingleton") {
        n = 4;
        return cones::ingleton_inequality();
    }
    if (ref == "zy" || ref == "zhang-yeung") {
        n = 4;
        return cones::zy_inequality();
    }
    return json_io::inequality_from_json(load_json_ref(ref), &n);
}

groups::SubgroupFamily load_family(const std::string& ref) {
    return json_io::family_from_json(load_json_ref(ref));
}

CommandResult cmd_check(const std::string& vector_ref, const std::string& family,
                        bool permutations, const Rational& a) {
    setfn::SetFunction v = load_vector(vector_ref, a);
    CommandResult res;
    res.payload = Json{{"command", "check"}, {"vector", vector_ref}, {"family", family}};
    std::ostringstream text;
    text << "vector: " << vector_ref << " (" << domain_name(v.domain()) << ", n=" << v.n() << ")\n";

    bool holds = false;
    if (family == "gamma") {
        cones::Verdict verdict = cones::in_gamma(v);
        holds = verdict.holds;
        res.payload["result"] = json_io::verdict_to_json(verdict);
        text << "Gamma_" << v.n() << ": " << verdict_word(holds) << "\n" << margin_line(verdict) << "\n";
        if (!holds) text << "witness: " << verdict.witness_name << "\n";
    } else if (family == "ingleton" || family == "zy") {
        cones::Inequality ineq =
            family == "ingleton" ? cones::ingleton_inequality() : cones::zy_inequality();
        cones::Verdict verdict = permutations ? cones::check_all_permutations(v, ineq)
                                              : cones::check_single(v, ineq);
        holds = verdict.holds;
        res.payload["permutations"] = permutations;
        res.payload["result"] = json_io::verdict_to_json(verdict);
        text << ineq.name << (permutations ? " (all permutations)" : " (single instance)") << ": "
             << verdict_word(holds) << "\n"
             << margin_line(verdict) << "\n";
        if (!holds) text << "witness: " << verdict.witness_name << "\n";
    } else if (family == "all") {
        cones::MembershipReport rep = cones::membership_report(v);
        holds = rep.all_pass;
        res.payload["result"] = json_io::membership_to_json(rep);
        for (const std::string& line : rep.conclusions) text << line << "\n";
    } else {
        throw Error("unknown family '" + family + "' (expected gamma|ingleton|zy|all)");
    }
    res.payload["verdict"] = holds ? "holds" : "violated";
    res.exit_code = holds ? 0 : 1;
    res.text = text.str();
    return res;
}

CommandResult cmd_prove(const std::string& inequality_ref, int n) {
    int file_n = 0;
    cones::Inequality ineq = load_inequality(inequality_ref, file_n);
    if (n == 0) n = file_n;
    cones::ProofResult proof = cones::shannon_provable(ineq, n);

    CommandResult res;
    res.exit_code = proof.provable ? 0 : 1;
    res.payload = Json{{"command", "prove"},
                       {"name", ineq.name},
                       {"n", n},
                       {"verdict", proof.provable ? "provable" : "not-provable"},
                       {"result", json_io::proof_to_json(proof, n)}};
    std::ostringstream text;
    text << "target: " << ineq.name << " >= 0 over " << n << " variables\n";
    if (proof.provable) {
        text << "PROVABLE from the Shannon (elemental) inequalities\ncertificate:";
        const auto elems = cones::elemental_inequalities(n);
        for (std::size_t r = 0; r < proof.multipliers.size(); ++r)
            if (proof.multipliers[r] != 0)
                text << " + " << rational_to_string(proof.multipliers[r]) << " * [" << elems[r].name
                     << "]";
        text << "\n";
    } else {
        text << "NOT PROVABLE: counterexample ray lies in Gamma_" << n
             << " with target value " << proof.counterexample_value.to_string() << "\n";
    }
    res.text = text.str();
    return res;
}

CommandResult cmd_group_vector(const std::string& group_ref) {
    groups::SubgroupFamily fam = load_family(group_ref);
    setfn::SetFunction h = groups::group_entropy_vector(fam);

    CommandResult res;
    res.payload = Json{{"command", "group-vector"},
                       {"verdict", "ok"},
                       {"vector", json_io::set_function_to_json(h)}};
    std::ostringstream text;
    text << "group of order " << fam.group.order() << " with " << fam.n() << " subgroups\n";
    for (setfn::Subset s = 1; s <= h.full_set(); ++s)
        text << "h(" << setfn::subset_to_string(s) << ") = " << h.value(s).to_string() << "\n";
    if (h.n() == 4) {
        bool cond1 = setfn::satisfies_condition1(h);
        res.payload["condition1"] = cond1;
        if (!cond1) res.payload["mismatches"] = setfn::condition1_mismatches(h);
        text << "condition (1): " << (cond1 ? "holds" : "fails") << "\n";
    }
    res.text = text.str();
    return res;
}

CommandResult cmd_solve(const std::string& group_ref, bool emit_network, bool verify) {
    groups::SubgroupFamily fam = load_family(group_ref);
    if (fam.n() != 4) throw Error("solving MP(h) needs exactly four subgroups");
    setfn::SetFunction h = groups::group_entropy_vector(fam);

    CommandResult res;
    res.payload = Json{{"command", "solve"}};
    std::ostringstream text;

    auto mismatches = setfn::condition1_mismatches(h);
    if (!mismatches.empty()) {
        res.exit_code = 1;
        res.payload["verdict"] = "condition1-failed";
        res.payload["mismatches"] = mismatches;
        text << "condition (1) fails for the group vector:\n";
        for (const std::string& m : mismatches) text << "  " << m << "\n";
        res.text = text.str();
        return res;
    }

    mpnet::MpInstance inst = mpnet::build_mp(h);
    mpnet::SolutionBundle bundle = mpnet::solve_mp_from_group(fam, inst);

    netmodel::CodeEvaluation eval = netmodel::evaluate_code(inst.network, bundle.code);
    std::vector<netmodel::DecodeEntry> decode =
        netmodel::check_decodable(inst.network, bundle.code, eval);
    bool admissible = netmodel::check_admissible(inst.network, bundle.code, inst.tuple());

    res.payload["verdict"] = "solved";
    res.payload["h"] = json_io::set_function_to_json(h);
    res.payload["rates"] = Json{{"a", inst.rates.lambda_a.to_string()},
                                {"b", inst.rates.lambda_b.to_string()},
                                {"c", inst.rates.lambda_c.to_string()}};
    res.payload["admissible"] = admissible;
    Json decode_json = Json::array();
    std::map<std::string, std::size_t> table_sizes;
    for (const netmodel::DecodeEntry& entry : decode) {
        decode_json.push_back(Json{{"session", entry.session},
                                   {"sink", entry.node},
                                   {"decodable", entry.decodable},
                                   {"table", entry.table_size}});
        table_sizes[entry.node] = std::max(table_sizes[entry.node], entry.table_size);
    }
    res.payload["decoders"] = decode_json;

    text << "MP(h) built: " << inst.network.nodes.size() << " nodes, "
         << inst.network.edges.size() << " edges, " << inst.manifest.size() << " sinks\n";
    text << "rates (a,b,c) = (" << inst.rates.lambda_a.to_string() << ", "
         << inst.rates.lambda_b.to_string() << ", " << inst.rates.lambda_c.to_string() << ")\n";
    text << "all sinks decode with zero error; admissible: " << (admissible ? "yes" : "NO") << "\n";
    text << "decode table sizes:";
    for (const auto& [sink, size] : table_sizes) text << " " << sink << "=" << size;
    text << "\n";

    if (verify) {
        mpnet::Theorem1Report rep = mpnet::verify_theorem1(inst, bundle);
        res.payload["verification"] = json_io::theorem1_to_json(rep);
        text << rep.matches << "/15 entropies match";
        if (!rep.all_match) {
            res.exit_code = 1;
            res.payload["verdict"] = "verification-failed";
            text << " -- MISMATCH";
        }
        text << "\n";
    }
    if (emit_network) res.payload["instance"] = json_io::mp_instance_to_json(inst);
    res.text = text.str();
    return res;
}

CommandResult cmd_demo(const std::string& name, const Rational& a) {
    std::optional<setfn::SetFunction> h = mpnet::builtin_vector(name, a);
    if (!h) throw Error("unknown demo '" + name + "' (expected pg13 or zy-gap)");
    mpnet::Classification cls = mpnet::classify(*h);

    CommandResult res;
    res.exit_code = cls.solvability == "not-asymptotically-solvable" ? 1 : 0;
    res.payload = Json{{"command", "demo"},
                       {"name", name},
                       {"verdict", cls.solvability},
                       {"classification", json_io::classification_to_json(cls)}};
    if (name == "zy-gap") res.payload["a"] = rational_to_string(a);
    std::ostringstream text;
    text << "demo " << name << ":\n";
    for (const std::string& line : cls.narrative) text << "  " << line << "\n";
    res.text = text.str();
    return res;
}

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"entropy vectors, information inequalities and multicast network codes"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json/--quiet follow the subcommand
    bool as_json = false, quiet = false;
    app.add_flag("--json", as_json, "print the JSON payload instead of text");
    app.add_flag("--quiet", quiet, "suppress output (exit code only)");

    std::string vector_ref, family = "all", ineq_ref, group_ref, demo_name, a_str = "1";
    bool permutations = true, emit_network = false, verify = false;
    int n = 0;

    CLI::App* check = app.add_subcommand("check", "membership checks for a vector");
    check->add_option("vector", vector_ref, "vector file, inline JSON, or builtin name")->required();
    check->add_option("--family", family, "gamma|ingleton|zy|all");
    check->add_flag("--permutations,!--no-permutations", permutations,
                    "sweep all variable permutations (default on)");
    check->add_option("--a", a_str, "parameter for the zy-gap builtin");

    CLI::App* prove = app.add_subcommand("prove", "decide Shannon provability with certificates");
    prove->add_option("inequality", ineq_ref, "inequality file, inline JSON, ingleton, or zy")
        ->required();
    prove->add_option("--n", n, "ground-set size (default: from the inequality)");

    CLI::App* gv = app.add_subcommand("group-vector", "entropy vector of a subgroup family");
    gv->add_option("group", group_ref, "group file or inline JSON")->required();

    CLI::App* solve = app.add_subcommand("solve", "build and solve MP(h) for a group vector");
    solve->add_option("group", group_ref, "group file or inline JSON")->required();
    solve->add_flag("--emit-network", emit_network, "include the network and manifest in the payload");
    solve->add_flag("--verify", verify, "recompute h from the solution");

    CLI::App* demo = app.add_subcommand("demo", "built-in vectors and their conclusions");
    demo->add_option("name", demo_name, "pg13 or zy-gap")->required();
    demo->add_option("--a", a_str, "parameter for zy-gap (rational, default 1)");

    std::vector<const char*> argv{"entronet"};
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        CommandResult res;
        if (check->parsed())
            res = cmd_check(vector_ref, family, permutations, parse_rational(a_str));
        else if (prove->parsed())
            res = cmd_prove(ineq_ref, n);
        else if (gv->parsed())
            res = cmd_group_vector(group_ref);
        else if (solve->parsed())
            res = cmd_solve(group_ref, emit_network, verify);
        else
            res = cmd_demo(demo_name, parse_rational(a_str));
        if (!quiet) out << (as_json ? res.payload.dump(2) + "\n" : res.text);
        return res.exit_code;
    } catch (const Error& e) {
        if (!quiet) out << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace entronet::cli
