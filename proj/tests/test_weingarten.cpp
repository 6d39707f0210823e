// Gram form inversion: exact numeric tables, symbolic tables in d, leading
// order coefficients and the blockwise (multiplicative) approximation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orthowg/weingarten.hpp>

using namespace orthowg;

namespace {

// expected symbolic n = 4 entries: inverse of (d^2 - d) I + d J
RatFunc n4_diagonal() {
    return RatFunc(Poly{1, 1}, Poly{0, 1} * Poly{-1, 1} * Poly{2, 1});
}
RatFunc n4_off_diagonal() {
    return RatFunc(-Poly::one(), Poly{0, 1} * Poly{-1, 1} * Poly{2, 1});
}

}  // namespace

TEST_CASE("gram matrices") {
    auto g2 = gram_symbolic(2);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0][0] == Poly{0, 1});

    auto g4 = gram_symbolic(4);
    REQUIRE(g4.size() == 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(g4[i][j] == (i == j ? Poly{0, 0, 1} : Poly{0, 1}));

    auto g4n = gram_numeric(4, Rat(5));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(g4n[i][j] == (i == j ? Rat(25) : Rat(5)));
}

TEST_CASE("numeric weingarten tables") {
    auto t2 = weingarten_numeric(2, Rat(5));
    CHECK(t2.entry(0, 0) == Rat(1, 5));

    auto t4 = weingarten_numeric(4, Rat(5));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(t4.entry(i, j) == (i == j ? Rat(3, 70) : Rat(-1, 140)));

    auto t4b = weingarten_numeric(4, Rat(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(t4b.entry(i, j) == (i == j ? Rat(2, 15) : Rat(-1, 30)));
}

TEST_CASE("gram times table is the identity, n in {2,4,6}, d in n..n+5") {
    for (int n : {2, 4, 6}) {
        for (int dd = n; dd <= n + 5; ++dd) {
            Rat d(dd);
            auto g = gram_numeric(n, d);
            auto t = weingarten_numeric(n, d);
            const size_t k = g.size();
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) {
                    Rat acc(0);
                    for (size_t l = 0; l < k; ++l) acc += g[i][l] * t.entry(static_cast<int>(l), static_cast<int>(j));
                    CHECK(acc == (i == j ? Rat(1) : Rat(0)));
                }
        }
    }
}

TEST_CASE("singular d is reported, not returned") {
    CHECK_THROWS_AS(weingarten_numeric(4, Rat(1)), std::domain_error);
    CHECK_THROWS_AS(weingarten_numeric(4, Rat(0)), std::domain_error);
}

TEST_CASE("size caps") {
    CHECK_THROWS_AS(weingarten_symbolic(8), std::invalid_argument);  // needs the flag
    CHECK_THROWS_AS(weingarten_symbolic(10, true), std::invalid_argument);
    CHECK_THROWS_AS(weingarten_numeric(12, Rat(20)), std::invalid_argument);
    CHECK_THROWS_AS(weingarten_symbolic(3), std::invalid_argument);  // odd n
}

TEST_CASE("symbolic n = 2 and n = 4 closed forms") {
    auto t2 = weingarten_symbolic(2);
    CHECK(t2.entry_symbolic(0, 0) == RatFunc(Poly::one(), Poly{0, 1}));

    auto t4 = weingarten_symbolic(4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(t4.entry_symbolic(i, j) == (i == j ? n4_diagonal() : n4_off_diagonal()));
}

TEST_CASE("symbolic and numeric agree entrywise") {
    for (int n : {2, 4, 6}) {
        auto sym = weingarten_symbolic(n);
        for (int dd : {n, n + 3, 17}) {
            auto num = weingarten_numeric(n, Rat(dd));
            const int k = static_cast<int>(sym.basis().size());
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    CHECK(sym.entry_symbolic(i, j).evaluate(Rat(dd)) == num.entry(i, j));
        }
    }
}

TEST_CASE("table symmetry") {
    auto t = weingarten_symbolic(6);
    const int k = static_cast<int>(t.basis().size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            CHECK(t.entry_symbolic(i, j) == t.entry_symbolic(j, i));
}

TEST_CASE("join-type reduction agrees with full elimination, n in {4, 6}") {
    for (int n : {4, 6}) {
        auto by_type = weingarten_symbolic_by_type(n);
        auto full = weingarten_symbolic(n);
        const auto& basis = full.basis();
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j)
                CHECK(by_type.at(join_type(basis[i], basis[j])) ==
                      full.entry_symbolic(static_cast<int>(i), static_cast<int>(j)));
    }
}

TEST_CASE("leading term examples") {
    auto p4 = all_pairings(4);
    auto same = leading_term(p4[0], p4[0]);
    CHECK(same.coefficient == 1);
    CHECK(same.exponent == -2);
    auto diff = leading_term(p4[0], p4[1]);
    CHECK(diff.coefficient == -1);
    CHECK(diff.exponent == -3);

    // n = 6 with a single join block of size 6: coefficient (+1)^2 C_2 = 2
    auto p = Pairing::from_pairs(6, {{1, 2}, {3, 4}, {5, 6}});
    auto q = Pairing::from_pairs(6, {{2, 3}, {4, 5}, {6, 1}});
    auto lt = leading_term(p, q);
    CHECK(lt.coefficient == 2);
    CHECK(lt.exponent == -5);
}

TEST_CASE("leading term law against symbolic expansion, n in {2, 4, 6}") {
    for (int n : {2, 4, 6}) {
        auto t = weingarten_symbolic(n);
        const auto& basis = t.basis();
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                auto lt = leading_term(basis[i], basis[j]);
                const RatFunc& w = t.entry_symbolic(static_cast<int>(i), static_cast<int>(j));
                CHECK(w.degree() == lt.exponent);
                CHECK(w.leading_coefficient() == Rat(lt.coefficient));
            }
    }
}

TEST_CASE("multiplicative weingarten") {
    WeingartenProvider sym(false);
    auto p4 = all_pairings(4);
    const Pairing& p0 = p4[0];  // (1,2)(3,4)

    // U = 1_n reproduces the plain entry
    CHECK(weingarten_multiplicative_symbolic(SetPartition::one_block(4), p0, p0, sym) ==
          weingarten_symbolic(4).entry_symbolic(p0, p0));

    // U = blocks of p with p = q gives (1/d)^{n/2}
    SetPartition blocks = SetPartition::from_pairing(p0);
    CHECK(weingarten_multiplicative_symbolic(blocks, p0, p0, sym) ==
          RatFunc(Poly::one(), Poly{0, 0, 1}));

    // difference from the full entry has degree <= -n + #(p v q) - 1 = -3
    RatFunc diff = weingarten_symbolic(4).entry_symbolic(p0, p0) -
                   weingarten_multiplicative_symbolic(blocks, p0, p0, sym);
    CHECK(diff.degree() <= -3);

    // p not below U is rejected
    CHECK_THROWS_AS(
        weingarten_multiplicative_symbolic(blocks, p4[1], p4[1], sym),
        std::invalid_argument);

    WeingartenProvider num(Rat(7));
    CHECK(weingarten_multiplicative_numeric(blocks, p0, p0, num) == Rat(1, 49));
}

TEST_CASE("n = 10 table satisfies the Gram identity on spot rows") {
    auto t = weingarten_numeric(10, Rat(13));
    const auto& basis = t.basis();
    REQUIRE(basis.size() == 945);
    for (size_t i : {size_t(0), size_t(400), size_t(944)}) {
        for (size_t j : {size_t(0), size_t(17), size_t(944)}) {
            Rat acc(0);
            for (size_t l = 0; l < basis.size(); ++l) {
                int blocks = join(SetPartition::from_pairing(basis[i]),
                                  SetPartition::from_pairing(basis[l]))
                                 .block_count();
                Rat g(1);
                for (int k = 0; k < blocks; ++k) g *= 13;
                acc += g * t.entry(static_cast<int>(l), static_cast<int>(j));
            }
            CHECK(acc == (i == j ? Rat(1) : Rat(0)));
        }
    }
}

TEST_CASE("subleading bound for all p, q below a two-block partition, n = 4") {
    // gamma blocks {1,2}{3,4}; only p0 = (1,2)(3,4) lies below
    WeingartenProvider sym(false);
    SetPartition u(4, {{1, 2}, {3, 4}});
    auto t = weingarten_symbolic(4);
    auto p0 = Pairing::from_pairs(4, {{1, 2}, {3, 4}});
    RatFunc diff = weingarten_multiplicative_symbolic(u, p0, p0, sym) - t.entry_symbolic(p0, p0);
    int bound = -4 + join_type(p0, p0).size();  // -n + #(p v q)
    CHECK(diff.degree() <= bound - 1);
}
