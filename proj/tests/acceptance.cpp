// Acceptance suite: runs every verification check at full strength (including
// the flagged n = 8 Weingarten sweep and the Monte Carlo arbitration at 2e5
// samples) and prints one line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orthowg/verify.hpp>

#include <cstdio>

using namespace orthowg;

TEST_CASE("acceptance criteria") {
    VerifyOptions opts;
    opts.weingarten_n8 = true;
    opts.mc_samples = 200000;
    opts.mc_seed = 20240901;
    VerifyReport rep = run_verify(VerifySuite::All, opts);
    for (const auto& c : rep.checks) {
        const char* tag = c.finding ? "FINDING" : (c.pass ? "PASS" : "FAIL");
        std::printf("[%s] %s\n    %s\n", tag, c.name.c_str(), c.detail.c_str());
        if (!c.finding) {
            INFO(c.name, ": ", c.detail);
            CHECK(c.pass);
        }
    }
    CHECK(rep.all_passed());
}
