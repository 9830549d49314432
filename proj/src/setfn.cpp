#include "entronet/setfn.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace entronet::setfn {

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

bool is_permutation(const Permutation& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int x : p) {
        if (x < 1 || x > n || seen[x - 1]) return false;
        seen[x - 1] = true;
    }
    return true;
}

Permutation inverse_permutation(const Permutation& p) {
    Permutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
    return r;
}

Subset apply_permutation(const Permutation& p, Subset s) {
    Subset out = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (s & (Subset(1) << i)) out |= Subset(1) << (p[i] - 1);
    return out;
}

std::string permutation_to_string(const Permutation& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::vector<Permutation> all_permutations(int n) {
    Permutation p = identity_permutation(n);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string subset_to_string(Subset s) {
    std::string key;
    for (int i = 1; i <= kMaxGroundSet; ++i)
        if (s & (Subset(1) << (i - 1))) key += static_cast<char>('0' + i);
    return key;
}

Subset subset_from_string(const std::string& key, int n) {
    Subset s = 0;
    int prev = 0;
    for (char c : key) {
        int i = c - '0';
        if (i < 1 || i > n) throw Error("subset key '" + key + "' is out of range for n=" + std::to_string(n));
        if (i <= prev) throw Error("subset key '" + key + "' must list ascending distinct indices");
        prev = i;
        s |= Subset(1) << (i - 1);
    }
    if (s == 0) throw Error("subset key must be nonempty");
    return s;
}

int subset_size(Subset s) { return std::popcount(s); }

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int i = 1; i <= kMaxGroundSet; ++i)
        if (s & (Subset(1) << (i - 1))) out.push_back(i);
    return out;
}

void InfoExpr::add(Subset s, long c) {
    if (s == 0 || c == 0) return;  // h(empty) = 0
    auto [it, inserted] = coeffs.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

InfoExpr InfoExpr::operator+(const InfoExpr& o) const {
    InfoExpr out = *this;
    out.n = std::max(n, o.n);
    for (auto& [s, c] : o.coeffs) out.add(s, c);
    return out;
}

InfoExpr InfoExpr::scaled(long c) const {
    InfoExpr out;
    out.n = n;
    out.label = label;
    if (c != 0)
        for (auto& [s, k] : coeffs) out.coeffs.emplace(s, k * c);
    return out;
}

InfoExpr InfoExpr::permuted(const Permutation& p) const {
    // evaluate(result, v) == evaluate(this, permute(v, p)):
    // coefficient of this on p(s) lands on s.
    InfoExpr out;
    out.n = n;
    out.label = label + "@" + permutation_to_string(p);
    for (auto& [s, c] : coeffs) out.coeffs.emplace(apply_permutation(inverse_permutation(p), s), c);
    return out;
}

std::string InfoExpr::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [s, c] : coeffs) {
        if (!first) os << ' ';
        os << (c >= 0 ? "+" : "") << c << " h(" << subset_to_string(s) << ")";
        first = false;
    }
    return first ? "0" : os.str();
}

static void check_range(Subset s, int n, const char* what) {
    if (s >> n) throw Error(std::string(what) + " contains indices beyond the ground set");
}

InfoExpr make_entropy_expr(ExprKind kind, Subset alpha, Subset beta, Subset gamma, int n) {
    if (n < 1 || n > kMaxGroundSet) throw Error("ground set size out of range");
    check_range(alpha, n, "alpha");
    check_range(beta, n, "beta");
    check_range(gamma, n, "gamma");
    if (alpha == 0) throw Error("alpha must be nonempty");

    InfoExpr e;
    e.n = n;
    switch (kind) {
        case ExprKind::Joint:
            if (beta != 0) throw Error("joint entropy takes no beta argument");
            e.add(alpha | gamma, 1);
            e.add(gamma, -1);
            e.label = gamma ? "H(" + subset_to_string(alpha) + "|" + subset_to_string(gamma) + ")"
                            : "H(" + subset_to_string(alpha) + ")";
            break;
        case ExprKind::Conditional: {
            Subset cond = beta | gamma;
            e.add(alpha | cond, 1);
            e.add(cond, -1);
            e.label = cond ? "H(" + subset_to_string(alpha) + "|" + subset_to_string(cond) + ")"
                           : "H(" + subset_to_string(alpha) + ")";
            break;
        }
        case ExprKind::Mutual:
        case ExprKind::CondMutual: {
            if (beta == 0) throw Error("mutual information needs a nonempty beta");
            if (alpha & beta)
                throw Error("alpha and beta overlap in I(" + subset_to_string(alpha) + ";" +
                            subset_to_string(beta) + ")");
            e.add(alpha | gamma, 1);
            e.add(beta | gamma, 1);
            e.add(gamma, -1);
            e.add(alpha | beta | gamma, -1);
            e.label = "I(" + subset_to_string(alpha) + ";" + subset_to_string(beta) +
                      (gamma ? "|" + subset_to_string(gamma) : "") + ")";
            break;
        }
    }
    return e;
}

SetFunction::SetFunction(int n, Domain domain, std::map<Subset, Rational> raw_values)
    : n_(n), domain_(domain) {
    if (n < 1 || n > kMaxGroundSet) throw Error("ground set size out of range");
    Subset full = (Subset(1) << n) - 1;
    raw_.assign(full + 1, Rational(0));
    for (auto& [s, r] : raw_values) {
        if (s == 0 || s > full) throw Error("set function key out of range");
        if (domain == Domain::Log2Rational && r <= 0)
            throw Error("log2 argument must be positive at h(" + subset_to_string(s) + ")");
        raw_[s] = r;
    }
    if (raw_values.size() != full)
        throw Error("set function must be total on all " + std::to_string(full) +
                    " nonempty subsets, got " + std::to_string(raw_values.size()));
}

SetFunction SetFunction::from_raw_list(int n, Domain domain, const std::vector<Rational>& raw) {
    Subset full = (Subset(1) << n) - 1;
    if (raw.size() != full) throw Error("expected " + std::to_string(full) + " values");
    std::map<Subset, Rational> m;
    for (Subset s = 1; s <= full; ++s) m.emplace(s, raw[s - 1]);
    return SetFunction(n, domain, std::move(m));
}

SetFunction SetFunction::zero(int n, Domain domain) {
    Subset full = (Subset(1) << n) - 1;
    std::map<Subset, Rational> m;
    for (Subset s = 1; s <= full; ++s) m.emplace(s, domain == Domain::Rational ? 0 : 1);
    return SetFunction(n, domain, std::move(m));
}

ExactScalar SetFunction::value(Subset s) const { return ExactScalar::from_raw(domain_, raw(s)); }

const Rational& SetFunction::raw(Subset s) const {
    if (s == 0 || s >= raw_.size()) throw Error("subset out of range");
    return raw_[s];
}

SetFunction SetFunction::with_value(Subset s, ExactScalar v) const {
    if (v.domain() != domain_) throw Error("mixed scalar domains in with_value");
    SetFunction out = *this;
    out.raw_.at(s) = v.raw();
    return out;
}

SetFunction SetFunction::scaled_rational(const Rational& f) const {
    if (domain_ != Domain::Rational) throw Error("rational scaling is only defined in the rational domain");
    SetFunction out = *this;
    for (auto& r : out.raw_) r *= f;
    return out;
}

bool SetFunction::operator==(const SetFunction& o) const {
    return n_ == o.n_ && domain_ == o.domain_ && raw_ == o.raw_;
}

ExactScalar evaluate(const InfoExpr& expr, const SetFunction& v) {
    return evaluate_with_witness(expr, v).value;
}

Evaluation evaluate_with_witness(const InfoExpr& expr, const SetFunction& v) {
    if (expr.n > v.n()) throw Error("expression ground set exceeds the set function's");
    if (v.domain() == Domain::Rational) {
        Rational acc = 0;
        for (auto& [s, c] : expr.coeffs) acc += v.raw(s) * c;
        return {ExactScalar::rational(acc), std::nullopt};
    }
    // Sum of c * log2(r) = log2( prod r^{c+} / prod r^{c-} ); accumulate the
    // two integer products unreduced so the deciding comparison is reportable.
    BigInt lhs = 1, rhs = 1;
    for (auto& [s, c] : expr.coeffs) {
        const Rational& r = v.raw(s);
        unsigned long e = static_cast<unsigned long>(c < 0 ? -c : c);
        if (c > 0) {
            lhs *= pow(numerator(r), e);
            rhs *= pow(denominator(r), e);
        } else {
            lhs *= pow(denominator(r), e);
            rhs *= pow(numerator(r), e);
        }
    }
    return {ExactScalar::log2_of(Rational(lhs, rhs)), SignWitness{lhs, rhs}};
}

static const Subset kCondition1Terms[] = {
    0b0111,  // 123
    0b1011,  // 124
    0b1101,  // 134
    0b1110,  // 234
    0b1100,  // 34
};

std::vector<std::string> condition1_mismatches(const SetFunction& v) {
    if (v.n() != 4) throw Error("condition (1) is defined for n = 4");
    std::vector<std::string> out;
    const Rational& full = v.raw(0b1111);
    for (Subset s : kCondition1Terms)
        if (v.raw(s) != full)
            out.push_back("h(" + subset_to_string(s) + ")=" + v.value(s).to_string() +
                          " != h(1234)=" + v.value(0b1111).to_string());
    return out;
}

bool satisfies_condition1(const SetFunction& v) { return condition1_mismatches(v).empty(); }

InducedRates induced_rates(const SetFunction& v) {
    if (!satisfies_condition1(v)) throw Error("condition (1) fails: " + condition1_mismatches(v)[0]);
    ExactScalar h1 = v.value(0b0001), h12 = v.value(0b0011), h123 = v.value(0b0111);
    if (h1.sign() < 0) throw Error("negative induced rate: h(1) < 0");
    if (h12 < h1) throw Error("negative induced rate: h(12) < h(1)");
    if (h123 < h12) throw Error("negative induced rate: h(123) < h(12)");
    return {h1, h12 - h1, h123 - h12};
}

SetFunction permute(const SetFunction& v, const Permutation& sigma) {
    if (!is_permutation(sigma, v.n())) throw Error("sigma is not a permutation of {1.." + std::to_string(v.n()) + "}");
    Permutation inv = inverse_permutation(sigma);
    std::map<Subset, Rational> m;
    for (Subset s = 1; s <= v.full_set(); ++s) m.emplace(s, v.raw(apply_permutation(inv, s)));
    return SetFunction(v.n(), v.domain(), std::move(m));
}

}  // namespace entronet::setfn
