#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "doctest.h"
#include "minkpair/oracle.hpp"
#include "minkpair/scalar.hpp"

using namespace minkpair;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");  // denominator kept positive
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational().is_zero());
    CHECK_THROWS_AS(Rational(5, 0), DomainError);
}

TEST_CASE("rational parse accepts p and p/q") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("+3/4") == Rational(3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational::parse("10/4") == Rational(5, 2));  // canonicalized
}

TEST_CASE("rational parse rejects malformed literals") {
    for (const char* bad : {"", "/", "3/", "/4", "1.5", "a", " 5", "5 ", "++5", "--5", "1/-2",
                            "5/+2", "1/0", "0/0", "1e3", "3//4", "1/2/3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), ParseError);
    }
}

TEST_CASE("rational parse round-trips str()") {
    for (long n : {0L, 1L, -7L, 22L, -1000000L})
        for (long d : {1L, 2L, 3L, 97L}) {
            const Rational r(n, d);
            CHECK(Rational::parse(r.str()) == r);
        }
}

TEST_CASE("rational from_double is exact") {
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(-2.25) == Rational(-9, 4));
    // 0.1 is not 1/10 in binary; exactness means the double converts back bit-for-bit.
    CHECK(Rational::from_double(0.1).to_double() == 0.1);
    CHECK(Rational::from_double(0.1) != Rational(1, 10));
    CHECK_THROWS_AS(Rational::from_double(std::nan("")), DomainError);
    CHECK_THROWS_AS(Rational::from_double(HUGE_VAL), DomainError);
}

TEST_CASE("rational field operations are exact on random values") {
    DetRng rng(2024, 0);
    for (int i = 0; i < 200; ++i) {
        const Rational x = rng.fraction(-1000, 1000, 97);
        const Rational y = rng.fraction(-1000, 1000, 89);
        CHECK((x + y) - y == x);
        CHECK(x + y == y + x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
        CHECK(x * (y + Rational(1)) == x * y + x);
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("sign_of with declared zero band") {
    const TolerancePolicy p = TolerancePolicy::classification();
    CHECK(sign_of(0.0, 1.0, p) == 0);
    CHECK(sign_of(2.5, 1.0, p) == 1);
    CHECK(sign_of(-2.5, 1.0, p) == -1);
    // diagonal sum of gcheck = diag(a, -a) is exactly zero
    CHECK(sign_of(5.0 + (-5.0), 5.0, p) == 0);
    CHECK(sign_of(1e-15, 1.0, TolerancePolicy{1e-12, 1e-12}) == 0);
    // just outside the band |x| <= atol + rtol*scale = 2e-12
    CHECK(sign_of(3e-12, 1.0, TolerancePolicy{1e-12, 1e-12}) == 1);
    CHECK_THROWS_AS(sign_of(std::nan(""), 1.0, p), DomainError);
    CHECK_THROWS_AS(sign_of(1.0, -1.0, p), DomainError);
}

TEST_CASE("sign_of is odd outside the zero band") {
    const TolerancePolicy p = TolerancePolicy::classification();
    DetRng rng(7, 1);
    for (int i = 0; i < 1000; ++i) {
        const double x = (rng.fraction(-8000, 8000, 100).to_double());
        const double s = rng.fraction(0, 100, 10).to_double();
        if (std::fabs(x) <= p.band(s)) continue;
        CHECK(sign_of(-x, s, p) == -sign_of(x, s, p));
    }
}

TEST_CASE("sign_of on rationals ignores the policy") {
    const TolerancePolicy loose = TolerancePolicy::uniform(1e6);
    CHECK(sign_of(Rational(1, 1000000000), 1.0, loose) == 1);
    CHECK(sign_of(Rational(0), 1.0, loose) == 0);
    CHECK(sign_of(Rational(-1, 7), 1e9, loose) == -1);
}

TEST_CASE("atanh_checked values and domain") {
    CHECK(atanh_checked(0.0) == 0.0);
    CHECK(atanh_checked(-0.5) == doctest::Approx(-0.5493061443340549).epsilon(1e-15));
    CHECK_THROWS_AS(atanh_checked(1.0), DomainError);
    CHECK_THROWS_AS(atanh_checked(-1.0), DomainError);
    CHECK_THROWS_AS(atanh_checked(1.5), DomainError);
    CHECK_THROWS_AS(atanh_checked(std::nan("")), DomainError);
}

TEST_CASE("atanh_checked matches a bisection oracle") {
    // Invert tanh(x) = t by bisection, independent of std::atanh.
    auto bisect = [](double t) {
        double lo = -20.0, hi = 20.0;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (std::tanh(mid) < t ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    for (double t : {-0.9, -0.5, -0.1, 0.0, 0.3, 0.75, 0.99})
        CHECK(atanh_checked(t) == doctest::Approx(bisect(t)).epsilon(1e-12));
}

TEST_CASE("tanh composed with atanh_checked returns t within 4 ulps") {
    DetRng rng(99, 0);
    for (int i = 0; i < 10000; ++i) {
        const double t = rng.fraction(-998, 998, 1000).to_double();
        const double back = std::tanh(atanh_checked(t));
        const double ulp = std::ldexp(std::numeric_limits<double>::epsilon(),
                                      std::ilogb(std::max(std::fabs(t), 1e-300)) + 1);
        CHECK(std::fabs(back - t) <= 4 * ulp);
    }
}

TEST_CASE("tolerance policy band") {
    CHECK(TolerancePolicy::classification().band(0.0) == 1e-9);
    CHECK(TolerancePolicy::identity().band(1.0) == 2e-12);
    CHECK(TolerancePolicy::uniform(0.5).band(2.0) == doctest::Approx(1.5));
}
