#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "proprep/bounds.hpp"
#include "proprep/rational.hpp"

using namespace proprep;

TEST_CASE("rationals canonicalize and compare exactly") {
    CHECK(Rational(7, 14) == Rational(1, 2));
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(BigInt(6), BigInt(-4)).str() == "-3/2");
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1) / Rational(3) == Rational(1, 3));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parsing accepts integers, fractions and exact decimals") {
    CHECK(*Rational::parse("0.1") == Rational(1, 10));
    CHECK(*Rational::parse("3.25") == Rational(13, 4));
    CHECK(*Rational::parse(".5") == Rational(1, 2));
    CHECK(*Rational::parse("5.") == Rational(5));
    CHECK(*Rational::parse("7/14") == Rational(1, 2));
    CHECK(*Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(*Rational::parse("+2") == Rational(2));
    CHECK(*Rational::parse("123456789012345678901234567890") ==
          Rational(BigInt("123456789012345678901234567890")));
    CHECK_FALSE(Rational::parse("1/0"));
    CHECK_FALSE(Rational::parse("abc"));
    CHECK_FALSE(Rational::parse("1.2.3"));
    CHECK_FALSE(Rational::parse("1/2/3"));
    CHECK_FALSE(Rational::parse(""));
    CHECK_FALSE(Rational::parse("."));
    CHECK_FALSE(Rational::parse("1e3"));
}

TEST_CASE("parse and str round-trip") {
    for (const char* text : {"0", "1", "-1", "1/3", "-22/7", "1000000007"}) {
        auto r = Rational::parse(text);
        REQUIRE(r);
        CHECK(r->str() == text);
    }
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(Rational(1, 3).decimal() == "0.333333");
    CHECK(Rational(2, 3).decimal() == "0.666667");
    CHECK(Rational(-1, 8).decimal(3) == "-0.125");
    CHECK(Rational(1, 2).decimal(0) == "1");
    CHECK(Rational(0).decimal() == "0.000000");
    CHECK(Rational(5, 4).decimal(1) == "1.3");
}

TEST_CASE("ceil and floor of rationals") {
    CHECK(ceil_int(Rational(7, 2)) == 4);
    CHECK(floor_int(Rational(7, 2)) == 3);
    CHECK(ceil_int(Rational(-7, 2)) == -3);
    CHECK(floor_int(Rational(-7, 2)) == -4);
    CHECK(ceil_int(Rational(4)) == 4);
    CHECK(floor_int(Rational(4)) == 4);
}

TEST_CASE("audit ratio conventions at zero") {
    bool fired = false;
    CHECK(audit_ratio(Rational(0), Rational(0), &fired) == ExtRational(Rational(1)));
    CHECK(fired);
    CHECK(audit_ratio(Rational(3), Rational(0)).is_infinite());
    CHECK(audit_ratio(Rational(3), Rational(2)) == ExtRational(Rational(3, 2)));
    CHECK(audit_ratio(Rational(0), Rational(2)) == ExtRational(Rational(0)));
}

TEST_CASE("extended rationals order with infinity on top") {
    ExtRational inf = ExtRational::infinity();
    CHECK(ExtRational(Rational(5)) < inf);
    CHECK(inf == ExtRational::infinity());
    CHECK_FALSE(inf < inf);
    CHECK(inf.str() == "inf");
    CHECK(ExtRational(Rational(1, 2)).decimal() == "0.500000");
}

TEST_CASE("quadratic bounds compare exactly against rationals") {
    QuadBound ear = stability_bound_ear();  // (5+sqrt(41))/2
    CHECK(ear.admits(Rational(57, 10)));    // 5.7 is inside
    CHECK_FALSE(ear.admits(Rational(571, 100)));  // 5.71 is outside
    CHECK_FALSE(ear.admits(ExtRational::infinity()));
    CHECK(ear.admits(Rational(0)));
    CHECK(ear.decimal() == "5.701562");

    QuadBound tgc = stability_bound_tgc();  // 1+sqrt(2)
    CHECK(tgc.admits(Rational(241, 100)));
    CHECK_FALSE(tgc.admits(Rational(242, 100)));
    CHECK(tgc.decimal() == "2.414214");

    // alpha = 2 turns the representation bounds into 8+sqrt(41) and 5+2*sqrt(2).
    CHECK(pr_bound_ear(Rational(2)).decimal() == "14.403124");
    CHECK(pr_bound_tgc(Rational(2)).decimal() == "7.828427");
    CHECK(pr_bound_ear(Rational(2)).admits(Rational(144, 10)));
    CHECK_FALSE(pr_bound_ear(Rational(2)).admits(Rational(1441, 100)));

    CHECK(distortion_bound().admits(Rational(44)));
    CHECK_FALSE(distortion_bound().admits(Rational(4401, 100)));
    CHECK_THROWS_AS(pr_bound_ear(Rational(1)), Error);
}
