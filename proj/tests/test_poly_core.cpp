#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "rng.hpp"
#include "unipoly.hpp"

using namespace kraw;

namespace {

// independent binomial oracle: multiplicative formula with exact division
Integer binomial_oracle(unsigned long a, unsigned long b) {
    if (b > a)
        return 0;
    Integer num = 1;
    Integer den = 1;
    for (unsigned long i = 0; i < b; ++i) {
        num *= Integer(static_cast<unsigned long>(a - i));
        den *= Integer(i + 1);
    }
    return num / den;
}

UniPoly poly(std::initializer_list<Rational> ascending) {
    return UniPoly(std::vector<Rational>(ascending));
}

}  // namespace

TEST_CASE("rational invariants: reduced, positive denominator") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");

    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(Integer(21), Integer(14)).str() == "3/2");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational parsing accepts p and p/q, rejects garbage") {
    CHECK(Rational::parse("22/7")->str() == "22/7");
    CHECK(Rational::parse("-6/4")->str() == "-3/2");
    CHECK(Rational::parse("42")->str() == "42");
    CHECK(Rational::parse("-0")->str() == "0");
    CHECK_FALSE(Rational::parse(""));
    CHECK_FALSE(Rational::parse("1/0"));
    CHECK_FALSE(Rational::parse("1.5"));
    CHECK_FALSE(Rational::parse("a/b"));
    CHECK_FALSE(Rational::parse("1/-2"));
    CHECK_FALSE(Rational::parse("1/"));

    SplitMix64 rng(7);
    for (int t = 0; t < 200; ++t) {
        long num = static_cast<long>(rng.below(20001)) - 10000;
        long den = static_cast<long>(rng.below(999)) + 1;
        Rational r(num, den);
        auto back = Rational::parse(r.str());
        REQUIRE(back);
        CHECK(*back == r);
    }
}

TEST_CASE("decimal rendering truncates exactly") {
    CHECK(Rational(1, 4).decimal_str(3) == "0.250");
    CHECK(Rational(-1, 4).decimal_str(3) == "-0.250");
    CHECK(Rational(10, 3).decimal_str(6) == "3.333333");
    CHECK(Rational(7).decimal_str(0) == "7");
}

TEST_CASE("binomial: hand cases and both oracles") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 5) == 0);  // b > a
    for (unsigned long n : {0UL, 1UL, 5UL, 17UL, 40UL})
        CHECK(binomial(n, 0) == 1);
    for (unsigned long a = 0; a <= 40; ++a)
        for (unsigned long b = 0; b <= a + 2; ++b)
            CHECK(binomial(a, b) == binomial_oracle(a, b));
}

TEST_CASE("falling basis: low degrees and the evaluation contract") {
    CHECK(falling_basis(0) == poly({1}));
    CHECK(falling_basis(1) == poly({0, 1}));
    CHECK(falling_basis(2) == poly({0, Rational(-1, 2), Rational(1, 2)}));

    for (unsigned long j = 0; j <= 20; ++j) {
        UniPoly pj = falling_basis(j);
        CHECK(pj.degree() == static_cast<int>(j));
        CHECK(pj.leading() == Rational(Integer(1), factorial(j)));
        for (long i = static_cast<long>(j); i <= 30; ++i)
            CHECK(pj.eval(Rational(i)) == Rational(binomial(static_cast<unsigned long>(i), j),
                                                   Integer(1)));
    }
}

TEST_CASE("polynomial ring operations") {
    UniPoly x = poly({0, 1});
    UniPoly zero = x + (-x);
    CHECK(zero.is_zero());
    CHECK(zero.coefficients().empty());
    CHECK(zero.degree() == -1);

    CHECK(poly({1, -1}) * poly({1, 1}) == poly({1, 0, -1}));

    UniPoly one_plus = poly({1, 1});
    UniPoly one_minus = poly({1, -1});
    CHECK(one_plus.pow(2) * one_minus.pow(2) == poly({1, 0, -2, 0, 1}));
}

TEST_CASE("evaluation is a ring homomorphism") {
    SplitMix64 rng(11);
    for (int t = 0; t < 60; ++t) {
        UniPoly p = draw_poly(rng, 6);
        UniPoly q = draw_poly(rng, 6);
        Rational x = draw_small_rational(rng);
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    }
}

TEST_CASE("affine composition") {
    UniPoly x2 = poly({0, 0, 1});
    CHECK(x2.compose_affine(Rational(1), Rational(-1)) == poly({1, -2, 1}));

    long n = 9;
    UniPoly x = poly({0, 1});
    CHECK(x.compose_affine(Rational(-1), Rational(n)) == poly({Rational(n), -1}));

    // K_{1,7,3}(X-1) = 14 + 3 - 3X
    UniPoly k1 = poly({14, -3});
    CHECK(k1.compose_affine(Rational(1), Rational(-1)) == poly({17, -3}));

    SplitMix64 rng(13);
    for (int t = 0; t < 40; ++t) {
        UniPoly p = draw_poly(rng, 7);
        CHECK(p.compose_affine(Rational(1), Rational(-1)).compose_affine(Rational(1), Rational(1)) ==
              p);
    }
}

TEST_CASE("evaluation hand cases") {
    CHECK(UniPoly().eval(Rational(17, 5)) == Rational(0));
    CHECK(poly({4, -2}).eval(Rational(2)) == Rational(0));  // K_{1,4,2} at its root
    CHECK(falling_basis(3).eval(Rational(5)) == Rational(10));
}

TEST_CASE("newton interpolation: hand cases and errors") {
    CHECK(newton_interpolate({{Rational(0), Rational(1)}}) == poly({1}));
    CHECK(newton_interpolate({{Rational(0), Rational(0)},
                              {Rational(1), Rational(1)},
                              {Rational(2), Rational(4)}}) == poly({0, 0, 1}));
    // values of K_{2,4,2} at 0,1,2; divided differences 6, -6, 2
    CHECK(newton_interpolate({{Rational(0), Rational(6)},
                              {Rational(1), Rational(0)},
                              {Rational(2), Rational(-2)}}) == poly({6, -8, 2}));

    CHECK_THROWS_AS(
        newton_interpolate({{Rational(1), Rational(2)}, {Rational(1), Rational(3)}}),
        std::invalid_argument);
}

TEST_CASE("interpolation is a left inverse of sampling") {
    SplitMix64 rng(17);
    for (int t = 0; t < 40; ++t) {
        UniPoly p = draw_poly(rng, 6);
        std::vector<std::pair<Rational, Rational>> samples;
        for (long i = 0; i <= p.degree(); ++i)
            samples.emplace_back(Rational(i), p.eval(Rational(i)));
        CHECK(newton_interpolate(samples) == p);
    }
}
