// Exact polynomial and rational-function arithmetic in the dimension symbol.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orthowg/poly.hpp>
#include <orthowg/ratfunc.hpp>

using namespace orthowg;

TEST_CASE("polynomial ring basics") {
    Poly a{1, 2, 1};   // 1 + 2d + d^2
    Poly b{1, 1};      // 1 + d
    CHECK(a == b * b);
    CHECK(a.degree() == 2);
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(a.evaluate(Rat(3)) == Rat(16));
    CHECK(Poly::monomial(Int(5), 3).to_string() == "5*d^3");
}

TEST_CASE("exact division and failure on inexact input") {
    Poly a{0, -1, 0, 1};  // d^3 - d = d(d-1)(d+1)
    Poly b{0, 1};         // d
    CHECK(a.divexact(b) == Poly{-1, 0, 1});
    CHECK_THROWS_AS(Poly({1, 1}).divexact(Poly{0, 1}), std::domain_error);
}

TEST_CASE("content and gcd") {
    Poly a{0, 2, 2};  // 2d + 2d^2 = 2d(1+d)
    Poly b{0, 0, 4, 4};  // 4d^2(1+d)
    CHECK(a.content() == 2);
    CHECK(Poly::gcd(a, b) == Poly{0, 2, 2});
    CHECK(Poly::gcd(Poly{1, 1}, Poly{1, 2, 1}) == Poly{1, 1});
    CHECK(Poly::gcd(Poly(), Poly{0, 3}).to_string() == "3*d");
}

TEST_CASE("rational function canonical form") {
    RatFunc f(Poly{0, 1, 1}, Poly{0, 2});  // (d + d^2) / 2d = (1+d)/2
    CHECK(f.num() == Poly{1, 1});
    CHECK(f.den() == Poly(Int(2)));
    RatFunc g(Poly{1}, Poly{0, -1});  // 1 / (-d) -> -1/d
    CHECK(g.den() == Poly{0, 1});
    CHECK(g.num() == Poly(Int(-1)));
    CHECK(RatFunc::zero().den() == Poly::one());
}

TEST_CASE("rational function arithmetic and degree") {
    RatFunc invd = RatFunc::monomial(Rat(1), -1);
    CHECK(invd.degree() == -1);
    CHECK(invd.leading_coefficient() == Rat(1));
    RatFunc one = invd * RatFunc::d();
    CHECK(one == RatFunc::one());
    RatFunc s = invd + invd;
    CHECK(s.evaluate(Rat(4)) == Rat(1, 2));
    CHECK_THROWS_AS(invd.evaluate(Rat(0)), std::domain_error);
    // (d+1)/(d(d-1)(d+2)) has degree 1 - 3 = -2
    RatFunc w(Poly{1, 1}, Poly{0, 1} * Poly{-1, 1} * Poly{2, 1});
    CHECK(w.degree() == -2);
    CHECK(w.evaluate(Rat(5)) == Rat(3, 70));
}

TEST_CASE("catalan and double factorial helpers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(double_factorial_odd(2) == 1);
    CHECK(double_factorial_odd(4) == 3);
    CHECK(double_factorial_odd(8) == 105);
    CHECK(double_factorial_odd(10) == 945);
    CHECK(rat_from_string("-3/6") == Rat(-1, 2));
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}
