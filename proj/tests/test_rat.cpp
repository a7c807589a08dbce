#include "doctest.h"
#include "test_support.hpp"

#include "orthofix/errors.hpp"
#include "orthofix/rat.hpp"

#include <boost/integer/common_factor.hpp>
#include <sstream>

using orthofix::Rat;

TEST_CASE("parse and print canonical forms")
{
    CHECK(Rat::parse("3/6") == Rat(1, 2));
    CHECK(Rat::parse("-4/2") == Rat(-2));
    CHECK(Rat::parse("0/7").is_zero());
    CHECK(Rat::parse("+5") == Rat(5));
    CHECK(Rat::parse("3/6").to_string() == "1/2");
    CHECK(Rat::parse("-4/2").to_string() == "-2");
    CHECK(Rat(6, -4).to_string() == "-3/2");
    CHECK(Rat::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
}

TEST_CASE("malformed input is rejected")
{
    for (const char* bad : {"", "/", "1/", "/2", "1.5", "1e3", "--1", "1/-2", " 1", "1 ", "a", "1/2/3", "0x10"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rat::parse(bad), orthofix::InputError);
    }
    CHECK_THROWS_WITH_AS(Rat::parse("1/0"), doctest::Contains("zero denominator"), orthofix::InputError);
    CHECK_THROWS_AS(Rat(1, 0), orthofix::DomainError);
}

TEST_CASE("arithmetic")
{
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
    CHECK(-Rat(2, 3) == Rat(-2, 3));
    CHECK(abs(Rat(-7, 3)) == Rat(7, 3));
    CHECK(pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(pow(Rat(0), 0) == Rat(1));
    CHECK(pow(Rat(-1, 2), 5) == Rat(-1, 32));
    CHECK_THROWS_AS(Rat(1) / Rat(0), orthofix::DomainError);
    CHECK(pow(Rat(1, 3), 200) * pow(Rat(3), 200) == Rat(1));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(4, 2).is_integer());
    CHECK_FALSE(Rat(1, 2).is_integer());
    std::ostringstream os;
    os << Rat(-5, 10);
    CHECK(os.str() == "-1/2");
}

TEST_CASE("field laws and canonical form on random values")
{
    orthofix::test::Gen g(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const Rat a = g.rat(), b = g.rat(), c = g.rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Rat(0));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        const Rat s = a * b + c;
        CHECK(s.denominator() > 0);
        CHECK(boost::integer::gcd(s.numerator(), s.denominator()) == 1);
        CHECK(Rat::parse(s.to_string()) == s);
        CHECK(((a < b) == ((b - a).sign() > 0)));
        CHECK(abs(a + b) <= abs(a) + abs(b));
    }
}
