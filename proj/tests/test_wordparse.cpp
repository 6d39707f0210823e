// The trace-word grammar: examples, error positions, printer round trips and
// the lowering to engine word specifications.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orthowg/wordparse.hpp>

#include <random>

using namespace orthowg;

TEST_CASE("basic words") {
    auto ast = parse_word("o a1 o^-1 a2");
    REQUIRE(ast.traces.size() == 1);
    REQUIRE(ast.traces[0].size() == 4);
    CHECK(std::get<HaarFactor>(ast.traces[0][0]) == HaarFactor{1, false});
    CHECK(std::get<SymFactor>(ast.traces[0][1]) == SymFactor{"a1", false});
    CHECK(std::get<HaarFactor>(ast.traces[0][2]) == HaarFactor{1, true});

    auto two = parse_word("o a1 o a2 ; o a3 o a4");
    CHECK(two.traces.size() == 2);

    auto t = parse_word("o a1^t I");
    CHECK(std::get<SymFactor>(t.traces[0][1]) == SymFactor{"a1", true});
    CHECK(std::get<SymFactor>(t.traces[0][2]) == SymFactor{"I", false});

    auto lab = parse_word("o2 a1 o2^-1 a1");
    CHECK(std::get<HaarFactor>(lab.traces[0][0]) == HaarFactor{2, false});
    CHECK(std::get<HaarFactor>(lab.traces[0][2]) == HaarFactor{2, true});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_word(""), ParseError);
    CHECK_THROWS_AS(parse_word("o a1 ;"), ParseError);
    CHECK_THROWS_AS(parse_word("o^t"), ParseError);
    CHECK_THROWS_AS(parse_word("a1^-1"), ParseError);
    CHECK_THROWS_AS(parse_word("a1^x"), ParseError);
    CHECK_THROWS_AS(parse_word("a$b"), ParseError);
    try {
        parse_word("o a1 b^z");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("printer round trip on a generated corpus") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<int> ntraces(1, 3), nfactors(1, 6), kind(0, 3), label(1, 3),
        symidx(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        WordAst ast;
        int nt = ntraces(rng);
        for (int t = 0; t < nt; ++t) {
            std::vector<Factor> f;
            int nf = nfactors(rng);
            for (int k = 0; k < nf; ++k) {
                switch (kind(rng)) {
                    case 0: f.push_back(HaarFactor{label(rng), false}); break;
                    case 1: f.push_back(HaarFactor{label(rng), true}); break;
                    case 2: f.push_back(SymFactor{"a" + std::to_string(symidx(rng)), false}); break;
                    default: f.push_back(SymFactor{"a" + std::to_string(symidx(rng)), true}); break;
                }
            }
            ast.traces.push_back(std::move(f));
        }
        CHECK(parse_word(print_word(ast)) == ast);
    }
}

TEST_CASE("lowering to word specs") {
    // adjacent O's get identity slots implicitly (empty slot words)
    auto spec = to_word_spec(parse_word("o o a1"));
    REQUIRE(spec.haar_traces.size() == 1);
    REQUIRE(spec.haar_traces[0].size() == 2);
    CHECK(spec.haar_traces[0][0].word.empty());
    CHECK(spec.haar_traces[0][1].word.size() == 1);

    // traces are rotated to start at a haar factor
    auto rot = to_word_spec(parse_word("a1 o a2"));
    REQUIRE(rot.haar_traces[0].size() == 1);
    REQUIRE(rot.haar_traces[0][0].word.size() == 2);
    CHECK(rot.haar_traces[0][0].word[0].id == "a2");
    CHECK(rot.haar_traces[0][0].word[1].id == "a1");

    // O-free traces become plain traces
    auto plain = to_word_spec(parse_word("a1 a2 ; o I o^-1 I"));
    CHECK(plain.plain_traces.size() == 1);
    CHECK(plain.haar_traces.size() == 1);

    // rotation does not change the expectation
    MatrixSet mats(4);
    mats.insert("a1", SparseMat::from_entries(4, {{1, 2, Rat(1)}, {2, 1, Rat(1)},
                                                  {3, 4, Rat(2)}, {4, 3, Rat(-1)}}));
    mats.insert("a2", SparseMat::from_entries(4, {{1, 1, Rat(1)}, {2, 2, Rat(-1)},
                                                  {3, 3, Rat(2)}, {4, 4, Rat(-2)}}));
    auto w1 = to_word_spec(parse_word("o a1 o^-1 a2"));
    auto w2 = to_word_spec(parse_word("a2 o a1 o^-1"));
    CHECK(expected_trace_numeric(w1, mats) == expected_trace_numeric(w2, mats));

    // inserted identities match explicit ones: E(Tr(O O A1 O^-1 O^-1 A2))
    auto imp = to_word_spec(parse_word("o o a1 o^-1 o^-1 a2"));
    auto expl = to_word_spec(parse_word("o I o a1 o^-1 I o^-1 a2"));
    CHECK(expected_trace_numeric(imp, mats) == expected_trace_numeric(expl, mats));
}
