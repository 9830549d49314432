#include "entronet/groups.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>

#include "entronet/cones.hpp"

namespace entronet::groups {

namespace {

// Closure under the raw table, usable before the axioms are verified.
std::vector<int> table_closure(const std::vector<std::vector<int>>& table, int identity,
                               const std::vector<int>& seed) {
    std::vector<char> in(table.size(), 0);
    std::vector<int> members;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    push(identity);
    for (int s : seed) push(s);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            push(table[members[i]][members[j]]);
            push(table[members[j]][members[i]]);
        }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    const int m = static_cast<int>(table.size());
    if (m < 1 || m > kMaxGroupOrder)
        throw GroupError("shape", "order must be in 1.." + std::to_string(kMaxGroupOrder));
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != m) throw GroupError("shape", "table is not square");
        for (int x : row)
            if (x < 0 || x >= m) throw GroupError("shape", "entry out of range 0.." + std::to_string(m - 1));
    }

    int identity = -1;
    for (int e = 0; e < m && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < m && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) identity = e;
    }
    if (identity < 0) throw GroupError("identity", "no two-sided identity element");

    std::vector<int> inverse(m, -1);
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y)
            if (table[x][y] == identity && table[y][x] == identity) {
                inverse[x] = y;
                break;
            }
        if (inverse[x] < 0)
            throw GroupError("inverse", "element " + std::to_string(x) + " has no two-sided inverse");
    }

    // Light's associativity test over a greedily grown generating set.
    std::vector<int> gens;
    std::vector<int> span = table_closure(table, identity, {});
    while (static_cast<int>(span.size()) < m) {
        int next = 0;
        while (std::binary_search(span.begin(), span.end(), next)) ++next;
        gens.push_back(next);
        span = table_closure(table, identity, gens);
    }
    for (int a : gens)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (table[table[x][a]][y] != table[x][table[a][y]])
                    throw GroupError("associativity",
                                     "(" + std::to_string(x) + "*" + std::to_string(a) + ")*" +
                                         std::to_string(y) + " != " + std::to_string(x) + "*(" +
                                         std::to_string(a) + "*" + std::to_string(y) + ")");

    FiniteGroup g;
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    g.identity_ = identity;
    return g;
}

FiniteGroup FiniteGroup::cyclic(int m) {
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int n = a.order() * b.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ai = i / b.order(), bi = i % b.order();
            int aj = j / b.order(), bj = j % b.order();
            t[i][j] = a.op(ai, aj) * b.order() + b.op(bi, bj);
        }
    return from_table(std::move(t));
}

ExpandedPermutationGroup expand_permutation_group(int degree,
                                                  const std::vector<std::vector<int>>& generators) {
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree) throw Error("generator degree mismatch");
        std::vector<bool> seen(degree, false);
        for (int x : g) {
            if (x < 0 || x >= degree || seen[x]) throw Error("generator is not a permutation");
            seen[x] = true;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);

    std::vector<std::vector<int>> elements{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (const auto& g : generators) {
            std::vector<int> prod(degree);
            for (int x = 0; x < degree; ++x) prod[x] = elements[i][g[x]];
            if (index.emplace(prod, elements.size()).second) {
                if (static_cast<int>(elements.size()) >= kMaxGroupOrder)
                    throw Error("permutation group exceeds the order cap");
                elements.push_back(std::move(prod));
            }
        }

    const int m = static_cast<int>(elements.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<int> prod(degree);
            for (int x = 0; x < degree; ++x) prod[x] = elements[i][elements[j][x]];
            t[i][j] = index.at(prod);
        }
    return {FiniteGroup::from_table(std::move(t)), std::move(elements)};
}

int ExpandedPermutationGroup::element_index(const std::vector<int>& perm) const {
    auto it = std::find(elements.begin(), elements.end(), perm);
    if (it == elements.end()) throw Error("permutation is not a group element");
    return static_cast<int>(it - elements.begin());
}

FiniteGroup FiniteGroup::symmetric(int degree) {
    if (degree < 1) throw Error("degree must be positive");
    if (degree == 1) return cyclic(1);
    std::vector<int> transposition(degree), cycle(degree);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    return expand_permutation_group(degree, {transposition, cycle}).group;
}

FiniteGroup FiniteGroup::alternating(int degree) {
    if (degree < 3) return cyclic(1);
    std::vector<int> c3(degree);
    std::iota(c3.begin(), c3.end(), 0);
    c3[0] = 1, c3[1] = 2, c3[2] = 0;
    if (degree == 3) return expand_permutation_group(degree, {c3}).group;
    std::vector<int> other(degree);
    std::iota(other.begin(), other.end(), 0);
    if (degree % 2 == 1) {  // full cycle is even
        for (int i = 0; i < degree; ++i) other[i] = (i + 1) % degree;
    } else {  // cycle on the last degree-1 points is even
        for (int i = 1; i < degree; ++i) other[i] = 1 + (i % (degree - 1));
    }
    return expand_permutation_group(degree, {c3, other}).group;
}

FiniteGroup FiniteGroup::dihedral(int ngon) {
    if (ngon < 1) throw Error("ngon must be positive");
    if (ngon == 1) return cyclic(2);
    std::vector<int> rot(ngon), refl(ngon);
    for (int i = 0; i < ngon; ++i) {
        rot[i] = (i + 1) % ngon;
        refl[i] = (ngon - i) % ngon;
    }
    return expand_permutation_group(ngon, {rot, refl}).group;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& seed) const {
    return table_closure(table_, identity_, seed);
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::vector<char> in(order(), 0);
    for (int x : elems) {
        if (x < 0 || x >= order()) return false;
        in[x] = 1;
    }
    if (!in[identity_]) return false;
    for (int x : elems) {
        if (!in[inverse_[x]]) return false;
        for (int y : elems)
            if (!in[op(x, y)]) return false;
    }
    return true;
}

std::vector<std::vector<int>> FiniteGroup::all_subgroups() const {
    std::set<std::vector<int>> seen{closure({})};
    std::vector<std::vector<int>> queue{closure({})};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::vector<int> h = queue[i];
        for (int g = 0; g < order(); ++g) {
            if (std::binary_search(h.begin(), h.end(), g)) continue;
            std::vector<int> seed = h;
            seed.push_back(g);
            std::vector<int> k = closure(seed);
            if (seen.insert(k).second) queue.push_back(std::move(k));
        }
    }
    return {seen.begin(), seen.end()};
}

SubgroupFamily::SubgroupFamily(FiniteGroup g, std::vector<std::vector<int>> subs)
    : group(std::move(g)), subgroups(std::move(subs)) {
    if (subgroups.empty() || subgroups.size() > setfn::kMaxGroundSet)
        throw Error("a subgroup family holds 1.." + std::to_string(setfn::kMaxGroundSet) + " subgroups");
    for (auto& s : subgroups) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!group.is_subgroup(s))
            throw Error("marked subset is not a subgroup (must contain the identity and be closed "
                        "under the operation and inverse)");
    }
}

std::vector<int> intersect_subgroups(const SubgroupFamily& fam, setfn::Subset alpha) {
    if (alpha == 0) throw Error("alpha must be nonempty");
    if (alpha >> fam.n()) throw Error("alpha indexes a missing subgroup");
    std::vector<int> acc;
    bool first = true;
    for (int i = 0; i < fam.n(); ++i) {
        if (!(alpha & (setfn::Subset(1) << i))) continue;
        if (first) {
            acc = fam.subgroups[i];
            first = false;
        } else {
            std::vector<int> next;
            std::set_intersection(acc.begin(), acc.end(), fam.subgroups[i].begin(),
                                  fam.subgroups[i].end(), std::back_inserter(next));
            acc = std::move(next);
        }
    }
    return acc;
}

setfn::SetFunction group_entropy_vector(const SubgroupFamily& fam) {
    const int n = fam.n();
    std::map<setfn::Subset, Rational> vals;
    for (setfn::Subset s = 1; s < (setfn::Subset(1) << n); ++s)
        vals.emplace(s, Rational(fam.group.order(), intersect_subgroups(fam, s).size()));
    setfn::SetFunction h(n, Domain::Log2Rational, std::move(vals));
    if (n >= 2 && !cones::in_gamma(h).holds)
        throw Error("defect: a group vector failed an elemental inequality");
    return h;
}

JointDistribution::JointDistribution(std::vector<std::string> vars_,
                                     std::map<std::vector<int>, Rational> pmf_)
    : vars(std::move(vars_)) {
    Rational total = 0;
    for (auto& [outcome, mass] : pmf_) {
        if (outcome.size() != vars.size()) throw Error("outcome arity mismatch");
        if (mass < 0) throw Error("negative probability mass");
        total += mass;
        if (mass > 0) pmf.emplace(outcome, mass);
    }
    if (total != 1) throw Error("probability masses must sum to 1, got " + rational_to_string(total));
}

int JointDistribution::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    throw Error("no variable named '" + name + "'");
}

JointDistribution JointDistribution::marginal(const std::vector<int>& idxs) const {
    std::vector<std::string> mvars;
    for (int i : idxs) {
        if (i < 0 || i >= n_vars()) throw Error("marginal index out of range");
        mvars.push_back(vars[i]);
    }
    std::map<std::vector<int>, Rational> mpmf;
    std::vector<int> key(idxs.size());
    for (const auto& [outcome, mass] : pmf) {
        for (std::size_t j = 0; j < idxs.size(); ++j) key[j] = outcome[idxs[j]];
        mpmf[key] += mass;
    }
    return JointDistribution(std::move(mvars), std::move(mpmf));
}

bool JointDistribution::uniform_on_support() const {
    if (pmf.empty()) return true;
    const Rational& first = pmf.begin()->second;
    for (const auto& [outcome, mass] : pmf)
        if (mass != first) return false;
    return true;
}

namespace {

// Mixed-radix packing of selected outcome coordinates into one word, the
// workhorse behind the marginal and quasi-uniformity checks. Returns false
// when the values do not fit (negative entries or > 64 bits).
bool pack_keys(const JointDistribution& dist, const std::vector<int>& idxs,
               std::vector<std::uint64_t>& out) {
    std::vector<int> width(idxs.size());
    for (std::size_t j = 0; j < idxs.size(); ++j) {
        int max_val = 0;
        for (const auto& [outcome, mass] : dist.pmf) {
            int v = outcome[idxs[j]];
            if (v < 0) return false;
            max_val = std::max(max_val, v);
        }
        width[j] = std::bit_width(static_cast<unsigned>(max_val) + 1);
    }
    int total = 0;
    for (int w : width) total += w;
    if (total > 64) return false;

    out.clear();
    out.reserve(dist.pmf.size());
    for (const auto& [outcome, mass] : dist.pmf) {
        std::uint64_t key = 0;
        for (std::size_t j = 0; j < idxs.size(); ++j)
            key = (key << width[j]) | static_cast<std::uint64_t>(outcome[idxs[j]]);
        out.push_back(key);
    }
    return true;
}

}  // namespace

std::size_t JointDistribution::uniform_marginal_support(const std::vector<int>& idxs) const {
    if (pmf.empty()) return 0;
    std::vector<std::uint64_t> keys;
    if (!pack_keys(*this, idxs, keys)) {
        JointDistribution m = marginal(idxs);
        return m.uniform_on_support() ? m.support_size() : 0;
    }
    std::vector<std::uint32_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });

    std::vector<const Rational*> masses;
    masses.reserve(keys.size());
    for (const auto& [outcome, mass] : pmf) masses.push_back(&mass);

    std::size_t support = 0;
    Rational first_total = 0, run = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        run += *masses[order[i]];
        if (i + 1 == order.size() || keys[order[i + 1]] != keys[order[i]]) {
            if (support == 0)
                first_total = run;
            else if (run != first_total)
                return 0;
            ++support;
            run = 0;
        }
    }
    return support;
}

JointDistribution quasi_uniform_distribution(const SubgroupFamily& fam) {
    const FiniteGroup& g = fam.group;
    std::vector<std::string> vars;
    for (int i = 1; i <= fam.n(); ++i) vars.push_back("U" + std::to_string(i));

    std::map<std::vector<int>, Rational> pmf;
    const Rational unit(1, g.order());
    std::vector<int> outcome(fam.n());
    for (int x = 0; x < g.order(); ++x) {
        for (int i = 0; i < fam.n(); ++i) {
            int label = g.order();
            for (int s : fam.subgroups[i]) label = std::min(label, g.op(x, s));
            outcome[i] = label;
        }
        pmf[outcome] += unit;
    }
    return JointDistribution(std::move(vars), std::move(pmf));
}

namespace {

// Reference implementation, also the fallback when outcomes cannot be
// packed into one word.
bool check_quasi_uniform_generic(const JointDistribution& dist) {
    const int n = dist.n_vars();
    for (unsigned beta = 0; beta < (1u << n); ++beta) {
        std::vector<int> bidx;
        for (int i = 0; i < n; ++i)
            if (beta & (1u << i)) bidx.push_back(i);

        // bucket outcomes by the beta projection (whole pmf when beta empty)
        std::map<std::vector<int>, std::vector<const std::pair<const std::vector<int>, Rational>*>>
            buckets;
        std::vector<int> bkey(bidx.size());
        for (const auto& entry : dist.pmf) {
            for (std::size_t j = 0; j < bidx.size(); ++j) bkey[j] = entry.first[bidx[j]];
            buckets[bkey].push_back(&entry);
        }

        for (unsigned alpha = 1; alpha < (1u << n); ++alpha) {
            std::vector<int> aidx;
            for (int i = 0; i < n; ++i)
                if (alpha & (1u << i)) aidx.push_back(i);

            std::size_t common_size = 0;
            bool first_bucket = true;
            std::vector<int> akey(aidx.size());
            for (const auto& [bk, entries] : buckets) {
                std::map<std::vector<int>, Rational> cond;
                for (const auto* e : entries) {
                    for (std::size_t j = 0; j < aidx.size(); ++j) akey[j] = e->first[aidx[j]];
                    cond[akey] += e->second;
                }
                const Rational& head = cond.begin()->second;
                for (const auto& [ak, mass] : cond)
                    if (mass != head) return false;  // conditional not uniform
                if (first_bucket) {
                    common_size = cond.size();
                    first_bucket = false;
                } else if (cond.size() != common_size) {
                    return false;  // conditional support size varies
                }
            }
        }
    }
    return true;
}

}  // namespace

bool check_quasi_uniform(const JointDistribution& dist) {
    const int n = dist.n_vars();
    if (dist.pmf.empty() || n == 0) return true;
    const std::size_t m = dist.pmf.size();

    // one packed word per outcome, with a bit range per variable, so a
    // variable subset becomes a mask
    std::vector<int> width(n);
    int total_bits = 0;
    for (int i = 0; i < n; ++i) {
        int max_val = 0;
        for (const auto& [outcome, mass] : dist.pmf) {
            if (outcome[i] < 0) return check_quasi_uniform_generic(dist);
            max_val = std::max(max_val, outcome[i]);
        }
        width[i] = std::bit_width(static_cast<unsigned>(max_val) + 1);
        total_bits += width[i];
    }
    if (total_bits > 64 || n >= 16) return check_quasi_uniform_generic(dist);

    std::vector<std::uint64_t> key(m), var_mask(n);
    std::vector<const Rational*> mass(m);
    {
        std::size_t row = 0;
        for (const auto& [outcome, prob] : dist.pmf) {
            std::uint64_t k = 0;
            int shift = 0;
            for (int i = 0; i < n; ++i) {
                k |= static_cast<std::uint64_t>(outcome[i]) << shift;
                if (row == 0) var_mask[i] = ((std::uint64_t(1) << width[i]) - 1) << shift;
                shift += width[i];
            }
            key[row] = k;
            mass[row] = &prob;
            ++row;
        }
    }
    auto subset_mask = [&](unsigned subset) {
        std::uint64_t msk = 0;
        for (int i = 0; i < n; ++i)
            if (subset & (1u << i)) msk |= var_mask[i];
        return msk;
    };

    std::vector<std::uint32_t> order(m);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> in_bucket;
    for (unsigned beta = 0; beta < (1u << n); ++beta) {
        const std::uint64_t bmask = subset_mask(beta);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return (key[a] & bmask) < (key[b] & bmask);
        });

        for (unsigned alpha = 1; alpha < (1u << n); ++alpha) {
            const std::uint64_t amask = subset_mask(alpha);
            std::size_t common_size = 0;
            bool first_bucket = true;
            for (std::size_t lo = 0; lo < m;) {
                std::size_t hi = lo;
                while (hi < m && (key[order[hi]] & bmask) == (key[order[lo]] & bmask)) ++hi;

                in_bucket.clear();
                for (std::size_t i = lo; i < hi; ++i)
                    in_bucket.emplace_back(key[order[i]] & amask, order[i]);
                std::sort(in_bucket.begin(), in_bucket.end());

                std::size_t support = 0;
                Rational head = 0, run = 0;
                for (std::size_t i = 0; i < in_bucket.size(); ++i) {
                    run += *mass[in_bucket[i].second];
                    if (i + 1 == in_bucket.size() || in_bucket[i + 1].first != in_bucket[i].first) {
                        if (support == 0)
                            head = run;
                        else if (run != head)
                            return false;  // conditional not uniform
                        ++support;
                        run = 0;
                    }
                }
                if (first_bucket) {
                    common_size = support;
                    first_bucket = false;
                } else if (support != common_size) {
                    return false;  // conditional support size varies
                }
                lo = hi;
            }
        }
    }
    return true;
}

ExactScalar entropy_of(const JointDistribution& dist, const std::vector<int>& idxs) {
    if (idxs.empty()) throw Error("alpha must be nonempty");
    for (int i : idxs)
        if (i < 0 || i >= dist.n_vars()) throw Error("marginal index out of range");
    std::size_t support = dist.uniform_marginal_support(idxs);
    if (support == 0)
        throw Error("marginal is not uniform on its support; exact entropy is only defined on the "
                    "quasi-uniform path");
    return ExactScalar::log2_of(Rational(support));
}

double entropy_bits_float(const JointDistribution& dist, const std::vector<int>& idxs) {
    JointDistribution m = dist.marginal(idxs);
    double h = 0;
    for (const auto& [outcome, mass] : m.pmf) {
        double p = numerator(mass).convert_to<double>() / denominator(mass).convert_to<double>();
        if (p > 0) h -= p * std::log2(p);
    }
    return h;
}

}  // namespace entronet::groups
