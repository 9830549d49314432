#include <doctest.h>

#include "entronet/exact.hpp"

using namespace entronet;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("13") == Rational(13));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(rational_to_string(Rational(4, 8)) == "1/2");
    CHECK(rational_to_string(Rational(-7)) == "-7");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("log-domain arithmetic stays exact") {
    ExactScalar two_bits = ExactScalar::log2_of(4);
    ExactScalar one_bit = ExactScalar::log2_of(2);
    CHECK((two_bits + one_bit).raw() == Rational(8));
    CHECK((two_bits - one_bit).raw() == Rational(2));
    CHECK(ExactScalar::log2_of(3).scaled(-2).raw() == Rational(1, 9));
    CHECK(ExactScalar::log2_of(5).scaled(0).sign() == 0);
    CHECK(ExactScalar::log2_of(Rational(1, 2)).sign() == -1);
    CHECK(ExactScalar::log2_of(1).sign() == 0);
    CHECK_THROWS_AS(ExactScalar::log2_of(0), Error);
    CHECK_THROWS_AS(ExactScalar::log2_of(Rational(-1)), Error);
}

TEST_CASE("mixed-domain addition is refused, comparison is exact") {
    ExactScalar log3 = ExactScalar::log2_of(3);
    ExactScalar r = ExactScalar::rational(Rational(8, 5));
    CHECK_THROWS_AS(log3 + r, Error);
    CHECK_THROWS_AS(r - log3, Error);

    // log2(3) = 1.584..., 8/5 = 1.6: decided by 3^5 = 243 < 2^8 = 256
    CHECK(ExactScalar::compare(log3, r) < 0);
    CHECK(ExactScalar::compare(r, log3) > 0);
    CHECK(ExactScalar::compare(ExactScalar::log2_of(2), ExactScalar::rational(1)) == 0);
    CHECK(ExactScalar::compare(ExactScalar::log2_of(2), ExactScalar::rational(Rational(9, 10))) > 0);
    CHECK(compare_log2_to_rational(Rational(1, 2), Rational(-1)) == 0);
}

TEST_CASE("string round trip") {
    for (const char* s : {"3/7", "-2", "log2:13", "log2:78/5"}) {
        ExactScalar v = ExactScalar::from_string(s);
        CHECK(v.to_string() == s);
    }
    CHECK(ExactScalar::log2_of(13).approx() == doctest::Approx(3.70044).epsilon(1e-4));
}
