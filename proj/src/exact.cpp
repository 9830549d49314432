#include "entronet/exact.hpp"

#include <cmath>
#include <sstream>

namespace entronet {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) throw Error("rational denominator must be positive: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw Error("bad rational literal '" + text + "': " + e.what());
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string domain_name(Domain d) {
    return d == Domain::Rational ? "rational" : "log2-rational";
}

Domain parse_domain(const std::string& name) {
    if (name == "rational") return Domain::Rational;
    if (name == "log2-rational") return Domain::Log2Rational;
    throw Error("unknown scalar domain '" + name + "'");
}

ExactScalar ExactScalar::log2_of(Rational arg) {
    if (arg <= 0) throw Error("log2 argument must be positive, got " + rational_to_string(arg));
    return ExactScalar(Domain::Log2Rational, std::move(arg));
}

ExactScalar ExactScalar::zero(Domain d) {
    return d == Domain::Rational ? rational(0) : log2_of(1);
}

ExactScalar ExactScalar::from_raw(Domain d, Rational raw) {
    return d == Domain::Rational ? rational(std::move(raw)) : log2_of(std::move(raw));
}

int ExactScalar::sign() const {
    if (domain_ == Domain::Rational) return v_.sign();
    return v_ == 1 ? 0 : (v_ > 1 ? 1 : -1);
}

static void require_same_domain(const ExactScalar& a, const ExactScalar& b, const char* op) {
    if (a.domain() != b.domain())
        throw Error(std::string("mixed scalar domains in ") + op + ": " + a.to_string() +
                    " vs " + b.to_string());
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    require_same_domain(*this, o, "addition");
    if (domain_ == Domain::Rational) return rational(v_ + o.v_);
    return log2_of(v_ * o.v_);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    require_same_domain(*this, o, "subtraction");
    if (domain_ == Domain::Rational) return rational(v_ - o.v_);
    return log2_of(v_ / o.v_);
}

ExactScalar ExactScalar::scaled(long c) const {
    if (domain_ == Domain::Rational) return rational(v_ * c);
    if (c == 0) return log2_of(1);
    BigInt n = numerator(v_), d = denominator(v_);
    unsigned long e = static_cast<unsigned long>(c < 0 ? -c : c);
    Rational powed(pow(n, e), pow(d, e));
    return log2_of(c < 0 ? Rational(1) / powed : powed);
}

ExactScalar ExactScalar::scaled_rational(const Rational& f) const {
    if (domain_ != Domain::Rational)
        throw Error("rational scaling is only defined in the rational domain");
    return rational(v_ * f);
}

int compare_log2_to_rational(const Rational& arg, const Rational& pq) {
    // log2(a/b) vs p/q  <=>  a^q vs b^q * 2^p  (q > 0), folding the sign of p.
    BigInt a = numerator(arg), b = denominator(arg);
    BigInt p = numerator(pq), q = denominator(pq);
    unsigned long qe = q.convert_to<unsigned long>();
    BigInt lhs = pow(a, qe), rhs = pow(b, qe);
    if (p >= 0)
        rhs <<= p.convert_to<unsigned long>();
    else
        lhs <<= (-p).convert_to<unsigned long>();
    return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
}

int ExactScalar::compare(const ExactScalar& a, const ExactScalar& b) {
    if (a.domain_ == b.domain_) {
        if (a.v_ == b.v_) return 0;
        return a.v_ < b.v_ ? -1 : 1;
    }
    if (a.domain_ == Domain::Log2Rational) return compare_log2_to_rational(a.v_, b.v_);
    return -compare_log2_to_rational(b.v_, a.v_);
}

std::string ExactScalar::to_string() const {
    if (domain_ == Domain::Rational) return rational_to_string(v_);
    return "log2:" + rational_to_string(v_);
}

ExactScalar ExactScalar::from_string(const std::string& text) {
    if (text.rfind("log2:", 0) == 0) return log2_of(parse_rational(text.substr(5)));
    return rational(parse_rational(text));
}

double ExactScalar::approx() const {
    double x = numerator(v_).convert_to<double>() / denominator(v_).convert_to<double>();
    return domain_ == Domain::Rational ? x : std::log2(x);
}

}  // namespace entronet
