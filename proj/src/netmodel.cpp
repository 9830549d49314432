#include "entronet/netmodel.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace entronet::netmodel {

const Edge& Network::edge(const std::string& id) const {
    for (const Edge& e : edges)
        if (e.id == id) return e;
    throw Error("no edge named '" + id + "'");
}

const Session& Network::session(const std::string& id) const {
    for (const Session& s : sessions)
        if (s.id == id) return s;
    throw Error("no session named '" + id + "'");
}

std::vector<std::string> Network::inputs_of_edge(const std::string& edge_id) const {
    return inputs_of_node(edge(edge_id).tail);
}

std::vector<std::string> Network::inputs_of_node(const std::string& node) const {
    std::vector<std::string> in;
    for (const Session& s : sessions)
        if (s.origin == node) in.push_back(s.id);
    for (const Edge& f : edges)
        if (f.head == node) in.push_back(f.id);
    return in;
}

std::vector<std::string> validate_network(const Network& net) {
    std::set<std::string> node_set(net.nodes.begin(), net.nodes.end());
    if (node_set.size() != net.nodes.size()) throw Error("duplicate node name");
    std::set<std::string> ids;
    for (const Edge& e : net.edges) {
        if (!ids.insert(e.id).second) throw Error("duplicate edge id '" + e.id + "'");
        if (!node_set.count(e.tail)) throw Error("edge '" + e.id + "' has dangling tail '" + e.tail + "'");
        if (!node_set.count(e.head)) throw Error("edge '" + e.id + "' has dangling head '" + e.head + "'");
        if (e.capacity && e.capacity->sign() < 0)
            throw Error("edge '" + e.id + "' has negative capacity");
    }
    for (const Session& s : net.sessions) {
        if (!ids.insert(s.id).second) throw Error("duplicate session id '" + s.id + "'");
        if (!node_set.count(s.origin))
            throw Error("session '" + s.id + "' has dangling origin '" + s.origin + "'");
        for (const std::string& d : s.destinations)
            if (!node_set.count(d)) throw Error("session '" + s.id + "' has dangling destination '" + d + "'");
    }

    // Kahn's algorithm; anything left over contains a cycle, which we walk out
    // for the error message.
    std::map<std::string, int> indeg;
    for (const std::string& n : net.nodes) indeg[n] = 0;
    for (const Edge& e : net.edges) ++indeg[e.head];
    std::vector<std::string> order;
    for (const std::string& n : net.nodes)
        if (indeg[n] == 0) order.push_back(n);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const Edge& e : net.edges)
            if (e.tail == order[i] && --indeg[e.head] == 0) order.push_back(e.head);

    if (order.size() != net.nodes.size()) {
        std::string at;
        for (const std::string& n : net.nodes)
            if (indeg[n] > 0) {
                at = n;
                break;
            }
        std::vector<std::string> walk{at};
        for (;;) {
            const std::string& cur = walk.back();
            for (const Edge& e : net.edges)
                if (e.tail == cur && indeg[e.head] > 0) {
                    auto seen = std::find(walk.begin(), walk.end(), e.head);
                    if (seen != walk.end()) {
                        std::string cyc;
                        for (auto it = seen; it != walk.end(); ++it) cyc += *it + " -> ";
                        throw Error("network has a cycle: " + cyc + e.head);
                    }
                    walk.push_back(e.head);
                    break;
                }
        }
    }
    return order;
}

int CodeEvaluation::edge_position(const std::string& id) const {
    auto it = std::find(edge_order.begin(), edge_order.end(), id);
    if (it == edge_order.end()) throw Error("no edge named '" + id + "'");
    return static_cast<int>(it - edge_order.begin());
}

CodeEvaluation evaluate_code(const Network& net, const NetworkCode& code) {
    std::vector<std::string> topo = validate_network(net);
    if (code.source_dist.pmf.size() > kMaxSourceOutcomes)
        throw Error("source distribution exceeds the joint outcome cap");
    if (code.source_dist.n_vars() != static_cast<int>(net.sessions.size()))
        throw Error("source distribution arity does not match the session count");
    for (std::size_t i = 0; i < net.sessions.size(); ++i)
        if (code.source_dist.vars[i] != net.sessions[i].id)
            throw Error("source distribution variables must follow network session order");

    std::map<std::string, int> node_rank;
    for (std::size_t i = 0; i < topo.size(); ++i) node_rank[topo[i]] = static_cast<int>(i);
    std::vector<int> edge_by_rank(net.edges.size());
    std::iota(edge_by_rank.begin(), edge_by_rank.end(), 0);
    std::stable_sort(edge_by_rank.begin(), edge_by_rank.end(), [&](int a, int b) {
        return node_rank[net.edges[a].tail] < node_rank[net.edges[b].tail];
    });

    CodeEvaluation out;
    for (const Session& s : net.sessions) out.session_order.push_back(s.id);
    for (const Edge& e : net.edges) out.edge_order.push_back(e.id);

    std::map<std::string, int> session_pos, edge_pos;
    for (std::size_t i = 0; i < out.session_order.size(); ++i) session_pos[out.session_order[i]] = i;
    for (std::size_t i = 0; i < out.edge_order.size(); ++i) edge_pos[out.edge_order[i]] = i;

    // Resolve each edge's in-set once: (from_session?, position) pairs.
    struct EdgePlan {
        int edge_index;
        const CodingTable* fn;
        int alphabet;
        std::vector<std::pair<bool, int>> key_sources;
    };
    std::vector<EdgePlan> plans;
    for (int ei : edge_by_rank) {
        const Edge& e = net.edges[ei];
        auto fit = code.functions.find(e.id);
        if (fit == code.functions.end()) throw Error("no coding function for edge '" + e.id + "'");
        const CodingTable& fn = fit->second;
        if (fn.inputs != net.inputs_of_edge(e.id))
            throw Error("coding table inputs for '" + e.id + "' do not match the network in-set");
        auto alpha = code.edge_alphabet.find(e.id);
        if (alpha == code.edge_alphabet.end())
            throw Error("no alphabet for edge '" + e.id + "'");
        EdgePlan plan{ei, &fn, alpha->second, {}};
        for (const std::string& f : fn.inputs) {
            auto sp = session_pos.find(f);
            if (sp != session_pos.end())
                plan.key_sources.emplace_back(true, sp->second);
            else
                plan.key_sources.emplace_back(false, edge_pos.at(f));
        }
        plans.push_back(std::move(plan));
    }

    for (const auto& [tuple, mass] : code.source_dist.pmf) {
        std::vector<int> symbols(net.edges.size(), -1);
        std::vector<int> key;
        for (const EdgePlan& plan : plans) {
            key.clear();
            for (auto [from_session, pos] : plan.key_sources)
                key.push_back(from_session ? tuple[pos] : symbols[pos]);
            auto row = plan.fn->table.find(key);
            if (row == plan.fn->table.end())
                throw Error("phi for edge '" + net.edges[plan.edge_index].id +
                            "' is undefined on a reachable input tuple");
            if (row->second < 0 || row->second >= plan.alphabet)
                throw Error("edge '" + net.edges[plan.edge_index].id +
                            "' emits a symbol outside its alphabet");
            symbols[plan.edge_index] = row->second;
        }
        out.rows.emplace(tuple, std::move(symbols));
    }
    return out;
}

std::vector<DecodeEntry> check_decodable(const Network& net, const NetworkCode& code) {
    return check_decodable(net, code, evaluate_code(net, code));
}

std::vector<DecodeEntry> check_decodable(const Network& net, const NetworkCode& code,
                                         const CodeEvaluation& eval) {
    (void)code;
    std::map<std::string, int> session_pos, edge_pos;
    for (std::size_t i = 0; i < eval.session_order.size(); ++i) session_pos[eval.session_order[i]] = i;
    for (std::size_t i = 0; i < eval.edge_order.size(); ++i) edge_pos[eval.edge_order[i]] = i;

    std::vector<DecodeEntry> out;
    for (const Session& s : net.sessions) {
        int spos = session_pos.at(s.id);
        for (const std::string& u : s.destinations) {
            DecodeEntry entry{s.id, u, true, 0, ""};
            std::vector<std::pair<bool, int>> key_sources;
            for (const std::string& f : net.inputs_of_node(u)) {
                auto sp = session_pos.find(f);
                if (sp != session_pos.end())
                    key_sources.emplace_back(true, sp->second);
                else
                    key_sources.emplace_back(false, edge_pos.at(f));
            }
            std::map<std::vector<int>, int> decoder;
            for (const auto& [tuple, symbols] : eval.rows) {
                std::vector<int> key;
                key.reserve(key_sources.size());
                for (auto [from_session, pos] : key_sources)
                    key.push_back(from_session ? tuple[pos] : symbols[pos]);
                auto [it, inserted] = decoder.emplace(std::move(key), tuple[spos]);
                if (!inserted && it->second != tuple[spos]) {
                    entry.decodable = false;
                    entry.detail = "inputs at '" + u + "' map to both symbol " +
                                   std::to_string(it->second) + " and " + std::to_string(tuple[spos]) +
                                   " of session '" + s.id + "'";
                }
            }
            entry.table_size = decoder.size();
            out.push_back(std::move(entry));
        }
    }
    return out;
}

bool all_decodable(const std::vector<DecodeEntry>& entries) {
    return std::all_of(entries.begin(), entries.end(),
                       [](const DecodeEntry& e) { return e.decodable; });
}

bool check_admissible(const Network& net, const NetworkCode& code, const RateCapacityTuple& tuple) {
    for (const auto& [id, omega] : tuple.edge_capacities) {
        net.edge(id);
        auto it = code.edge_alphabet.find(id);
        if (it == code.edge_alphabet.end()) throw Error("no alphabet for edge '" + id + "'");
        if (ExactScalar::compare(ExactScalar::log2_of(it->second), omega) > 0) return false;
    }
    for (const auto& [id, lambda] : tuple.session_rates) {
        net.session(id);
        auto it = code.session_alphabet.find(id);
        if (it == code.session_alphabet.end()) throw Error("no alphabet for session '" + id + "'");
        if (ExactScalar::compare(ExactScalar::log2_of(it->second), lambda) < 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// F_q linear algebra (q prime, subspaces as row bases)

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

int mod_inverse(int a, int q) {
    int r = 1;
    for (int e = q - 2; e > 0; e >>= 1) {  // Fermat
        if (e & 1) r = r * a % q;
        a = a * a % q;
    }
    return r;
}

// Reduced row echelon form; returns the nonzero rows.
std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, int q) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] % q == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        int inv = mod_inverse(((rows[r][c] % q) + q) % q, q);
        for (auto& x : rows[r]) x = ((x % q) + q) % q * inv % q;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            int f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = ((rows[i][j] - f * rows[r][j]) % q + q) % q;
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// Reduce v against an RREF basis; the residue is the canonical coset
// representative (zero iff v lies in the span).
std::vector<int> reduce_by(const std::vector<std::vector<int>>& basis, std::vector<int> v, int q) {
    for (const auto& row : basis) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        int f = v[p] % q;
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - f * row[j]) % q + q) % q;
    }
    return v;
}

bool in_span(const std::vector<std::vector<int>>& basis, const std::vector<int>& v, int q) {
    std::vector<int> r = reduce_by(basis, v, q);
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

bool subspace_contained(const std::vector<std::vector<int>>& a,
                        const std::vector<std::vector<int>>& b, int q) {
    return std::all_of(a.begin(), a.end(), [&](const auto& v) { return in_span(b, v, q); });
}

// Zassenhaus: basis of the intersection of two row spaces in F_q^dim.
std::vector<std::vector<int>> intersect_spaces(const std::vector<std::vector<int>>& a,
                                               const std::vector<std::vector<int>>& b, int q,
                                               int dim) {
    std::vector<std::vector<int>> block;
    for (const auto& v : a) {
        std::vector<int> row(2 * dim, 0);
        for (int j = 0; j < dim; ++j) row[j] = row[dim + j] = v[j];
        block.push_back(std::move(row));
    }
    for (const auto& v : b) {
        std::vector<int> row(2 * dim, 0);
        for (int j = 0; j < dim; ++j) row[j] = v[j];
        block.push_back(std::move(row));
    }
    std::vector<std::vector<int>> out;
    for (const auto& row : rref(std::move(block), q)) {
        bool left_zero = std::all_of(row.begin(), row.begin() + dim, [](int x) { return x == 0; });
        if (left_zero) out.emplace_back(row.begin() + dim, row.end());
    }
    return rref(std::move(out), q);
}

std::vector<std::vector<int>> full_space(int dim) {
    std::vector<std::vector<int>> rows(dim, std::vector<int>(dim, 0));
    for (int i = 0; i < dim; ++i) rows[i][i] = 1;
    return rows;
}

struct SubspaceSet {
    int q, dim;
    std::map<std::string, std::vector<std::vector<int>>> rref_bases;

    const std::vector<std::vector<int>>& of(const std::string& id) const {
        auto it = rref_bases.find(id);
        if (it == rref_bases.end()) throw Error("no subspace for '" + id + "'");
        return it->second;
    }
    std::vector<std::vector<int>> intersect_ids(const std::vector<std::string>& ids) const {
        if (ids.empty()) return full_space(dim);
        std::vector<std::vector<int>> acc = of(ids[0]);
        for (std::size_t i = 1; i < ids.size(); ++i) acc = intersect_spaces(acc, of(ids[i]), q, dim);
        return acc;
    }
};

SubspaceSet prepare_subspaces(const Network& net, const SubspaceFamily& fam) {
    if (!is_prime(fam.q)) throw Error("field order must be prime, got " + std::to_string(fam.q));
    if (fam.dim < 1) throw Error("ambient dimension must be positive");
    SubspaceSet set{fam.q, fam.dim, {}};
    auto take = [&](const std::string& id) {
        auto it = fam.bases.find(id);
        if (it == fam.bases.end()) throw Error("missing subspace for '" + id + "'");
        for (const auto& v : it->second)
            if (static_cast<int>(v.size()) != fam.dim) throw Error("basis vector dimension mismatch for '" + id + "'");
        std::vector<std::vector<int>> r = rref(it->second, fam.q);
        if (r.size() != it->second.size())
            throw Error("basis for '" + id + "' is linearly dependent");
        set.rref_bases.emplace(id, std::move(r));
    };
    for (const Session& s : net.sessions) take(s.id);
    for (const Edge& e : net.edges) take(e.id);
    return set;
}

ExactScalar q_power_bits(int q, int exponent) {
    return ExactScalar::log2_of(pow(BigInt(q), exponent));
}

}  // namespace

std::string StructureReport::first_failure() const {
    if (!independence_ok) return "session independence identity fails";
    if (!edge_failures.empty()) return edge_failures.front();
    if (!decode_failures.empty()) return decode_failures.front();
    return "";
}

StructureReport linear_rank_conditions(const Network& net, const SubspaceFamily& fam) {
    validate_network(net);
    SubspaceSet set = prepare_subspaces(net, fam);

    StructureReport rep;
    int sum_dims = 0;
    std::vector<std::string> session_ids;
    for (const Session& s : net.sessions) {
        session_ids.push_back(s.id);
        sum_dims += static_cast<int>(set.of(s.id).size());
    }
    int inter_dim = static_cast<int>(set.intersect_ids(session_ids).size());
    rep.independence_ok =
        static_cast<int>(net.sessions.size()) * fam.dim - sum_dims == fam.dim - inter_dim;

    for (const Edge& e : net.edges) {
        auto inflow = set.intersect_ids(net.inputs_of_edge(e.id));
        if (!subspace_contained(inflow, set.of(e.id), fam.q))
            rep.edge_failures.push_back("inflow intersection is not contained in the subspace of edge '" +
                                        e.id + "'");
    }
    for (const Session& s : net.sessions)
        for (const std::string& u : s.destinations) {
            auto at_node = set.intersect_ids(net.inputs_of_node(u));
            if (!subspace_contained(at_node, set.of(s.id), fam.q))
                rep.decode_failures.push_back("node '" + u + "' cannot linearly resolve session '" +
                                              s.id + "'");
        }

    for (const Session& s : net.sessions)
        rep.tuple.session_rates.emplace_back(
            s.id, q_power_bits(fam.q, fam.dim - static_cast<int>(set.of(s.id).size())));
    for (const Edge& e : net.edges)
        rep.tuple.edge_capacities.emplace_back(
            e.id, q_power_bits(fam.q, fam.dim - static_cast<int>(set.of(e.id).size())));
    return rep;
}

NetworkCode linear_code_from_subspaces(const Network& net, const SubspaceFamily& fam) {
    StructureReport rep = linear_rank_conditions(net, fam);
    if (!rep.ok()) throw Error("rank conditions fail: " + rep.first_failure());
    SubspaceSet set = prepare_subspaces(net, fam);

    BigInt total = pow(BigInt(fam.q), fam.dim);
    if (total > kMaxSourceOutcomes) throw Error("q^dim exceeds the joint outcome cap");
    const long count = total.convert_to<long>();

    // Canonical coset label: the representative's mixed-radix encoding,
    // compacted to 0..size-1 per symbol id.
    auto encode = [&](const std::vector<int>& v) {
        long acc = 0;
        for (int j = fam.dim - 1; j >= 0; --j) acc = acc * fam.q + v[j];
        return acc;
    };
    std::vector<std::string> ids;
    for (const Session& s : net.sessions) ids.push_back(s.id);
    for (const Edge& e : net.edges) ids.push_back(e.id);

    std::map<std::string, std::map<long, int>> labels;
    std::vector<int> x(fam.dim, 0);
    std::vector<std::map<std::string, int>> symbol_of(count);
    for (long i = 0; i < count; ++i) {
        long rem = i;
        for (int j = 0; j < fam.dim; ++j) {
            x[j] = rem % fam.q;
            rem /= fam.q;
        }
        for (const std::string& id : ids) {
            long code = encode(reduce_by(set.of(id), x, fam.q));
            labels[id].emplace(code, 0);
            symbol_of[i][id] = static_cast<int>(code);  // raw; compacted below
        }
    }
    for (auto& [id, m] : labels) {
        int next = 0;
        for (auto& [code, lab] : m) lab = next++;
    }
    for (long i = 0; i < count; ++i)
        for (auto& [id, raw] : symbol_of[i]) raw = labels[id].at(raw);

    NetworkCode code;
    for (const Session& s : net.sessions)
        code.session_alphabet[s.id] = static_cast<int>(labels[s.id].size());
    for (const Edge& e : net.edges) code.edge_alphabet[e.id] = static_cast<int>(labels[e.id].size());

    // The tuple is met with equality: alphabet sizes are q^(dim - dim V_f).
    for (const auto& [id, lambda] : rep.tuple.session_rates)
        if (ExactScalar::log2_of(code.session_alphabet[id]) != lambda)
            throw Error("defect: session alphabet misses the rank formula");
    for (const auto& [id, omega] : rep.tuple.edge_capacities)
        if (ExactScalar::log2_of(code.edge_alphabet[id]) != omega)
            throw Error("defect: edge alphabet misses the rank formula");

    std::map<std::vector<int>, Rational> src;
    const Rational unit(1, count);
    for (long i = 0; i < count; ++i) {
        std::vector<int> tuple;
        for (const Session& s : net.sessions) tuple.push_back(symbol_of[i][s.id]);
        src[tuple] += unit;
    }
    std::vector<std::string> session_names;
    for (const Session& s : net.sessions) session_names.push_back(s.id);
    code.source_dist = groups::JointDistribution(session_names, std::move(src));

    for (const Edge& e : net.edges) {
        CodingTable fn;
        fn.inputs = net.inputs_of_edge(e.id);
        for (long i = 0; i < count; ++i) {
            std::vector<int> key;
            for (const std::string& f : fn.inputs) key.push_back(symbol_of[i][f]);
            int value = symbol_of[i][e.id];
            auto [it, inserted] = fn.table.emplace(std::move(key), value);
            if (!inserted && it->second != value)
                throw Error("defect: coset map for edge '" + e.id + "' is not well defined");
        }
        code.functions.emplace(e.id, std::move(fn));
    }
    return code;
}

StructureReport group_code_conditions(const Network& net, const groups::FiniteGroup& group,
                                      const std::map<std::string, std::vector<int>>& subgroups) {
    validate_network(net);
    std::map<std::string, std::vector<int>> subs;
    auto take = [&](const std::string& id) {
        auto it = subgroups.find(id);
        if (it == subgroups.end()) throw Error("missing subgroup for '" + id + "'");
        std::vector<int> s = it->second;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!group.is_subgroup(s)) throw Error("subset for '" + id + "' is not a subgroup");
        subs.emplace(id, std::move(s));
    };
    for (const Session& s : net.sessions) take(s.id);
    for (const Edge& e : net.edges) take(e.id);

    auto intersect_ids = [&](const std::vector<std::string>& ids) {
        std::vector<int> acc(group.order());
        std::iota(acc.begin(), acc.end(), 0);
        for (const std::string& id : ids) {
            std::vector<int> next;
            std::set_intersection(acc.begin(), acc.end(), subs[id].begin(), subs[id].end(),
                                  std::back_inserter(next));
            acc = std::move(next);
        }
        return acc;
    };

    StructureReport rep;
    std::vector<std::string> session_ids;
    Rational product = 1;
    for (const Session& s : net.sessions) {
        session_ids.push_back(s.id);
        product *= Rational(group.order(), subs[s.id].size());
    }
    rep.independence_ok =
        Rational(group.order(), intersect_ids(session_ids).size()) == product;

    auto contained = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (const Edge& e : net.edges)
        if (!contained(intersect_ids(net.inputs_of_edge(e.id)), subs[e.id]))
            rep.edge_failures.push_back("inflow intersection is not a subgroup of edge '" + e.id + "'");
    for (const Session& s : net.sessions)
        for (const std::string& u : s.destinations)
            if (!contained(intersect_ids(net.inputs_of_node(u)), subs[s.id]))
                rep.decode_failures.push_back("node '" + u + "' cannot resolve session '" + s.id + "'");

    for (const Session& s : net.sessions)
        rep.tuple.session_rates.emplace_back(
            s.id, ExactScalar::log2_of(Rational(group.order(), subs[s.id].size())));
    for (const Edge& e : net.edges)
        rep.tuple.edge_capacities.emplace_back(
            e.id, ExactScalar::log2_of(Rational(group.order(), subs[e.id].size())));
    return rep;
}

}  // namespace entronet::netmodel
