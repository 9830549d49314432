#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace entronet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse "p/q" (or "p") with optional leading minus; q must be positive.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

/// Two value domains, kept strictly apart:
///   Rational      -- the value itself, an exact rational
///   Log2Rational  -- log2 of a positive rational argument
enum class Domain { Rational, Log2Rational };

std::string domain_name(Domain d);
Domain parse_domain(const std::string& name);

/// Exact pair of integers whose comparison decided a log-domain sign test:
/// the value is log2(lhs/rhs), so sign(value) = cmp(lhs, rhs).
struct SignWitness {
    BigInt lhs;
    BigInt rhs;
};

/// An exact scalar in one of the two domains.
///
/// A Rational scalar stores its value; a Log2Rational scalar stores the
/// positive rational argument r and denotes log2(r). Integer-coefficient
/// linear combinations stay inside each domain (log arguments multiply),
/// and every sign/order query is decided by big-integer comparison. There
/// is no floating point anywhere in this type.
///
/// Addition and subtraction across domains are refused. Order comparison
/// across domains is well defined (log2(a/b) vs p/q resolves by integer
/// powering) and is provided because capacities in one domain are
/// routinely compared against alphabet sizes in the other.
class ExactScalar {
public:
    ExactScalar() : domain_(Domain::Rational), v_(0) {}

    static ExactScalar rational(Rational v) { return ExactScalar(Domain::Rational, std::move(v)); }
    static ExactScalar log2_of(Rational arg);
    static ExactScalar zero(Domain d);
    /// Interpret `raw` in the given domain (value, or log argument).
    static ExactScalar from_raw(Domain d, Rational raw);

    Domain domain() const { return domain_; }
    /// The stored rational: the value itself, or the log2 argument.
    const Rational& raw() const { return v_; }

    int sign() const;  // -1, 0, +1
    bool is_zero() const { return sign() == 0; }

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    /// Multiply by an integer (log domain: raises the argument to c).
    ExactScalar scaled(long c) const;
    /// Multiply by a rational factor; rational domain only.
    ExactScalar scaled_rational(const Rational& f) const;

    bool operator==(const ExactScalar& o) const { return compare(*this, o) == 0; }
    bool operator!=(const ExactScalar& o) const { return compare(*this, o) != 0; }
    bool operator<(const ExactScalar& o) const { return compare(*this, o) < 0; }
    bool operator<=(const ExactScalar& o) const { return compare(*this, o) <= 0; }
    bool operator>(const ExactScalar& o) const { return compare(*this, o) > 0; }
    bool operator>=(const ExactScalar& o) const { return compare(*this, o) >= 0; }

    /// Exact three-way comparison; works across domains.
    static int compare(const ExactScalar& a, const ExactScalar& b);

    /// "p/q" in the rational domain, "log2:p/q" in the log domain.
    std::string to_string() const;
    static ExactScalar from_string(const std::string& text);

    /// Diagnostic float approximation; never used in a decision path.
    double approx() const;

private:
    ExactScalar(Domain d, Rational v) : domain_(d), v_(std::move(v)) {}

    Domain domain_;
    Rational v_;
};

/// Exact comparison of log2(arg) against a plain rational p/q.
int compare_log2_to_rational(const Rational& arg, const Rational& pq);

}  // namespace entronet
