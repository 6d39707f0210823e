// Built-in verification suites. Each acceptance criterion runs as a named
// check; comparisons against stated constants that exact computation
// contradicts are reported as findings (data, not failures), with both values.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orthowg {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool finding = false;  // informational; never fails the suite
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.finding && !c.pass) return false;
        return true;
    }
};

enum class VerifySuite { Intro, Weingarten, Spoke, Cumulant, All };
VerifySuite suite_from_name(const std::string& name);  // throws on unknown names

struct VerifyOptions {
    bool weingarten_n8 = false;    // include the flagged n = 8 leading-term sweep
    long mc_samples = 200000;      // Monte Carlo arbitration sample count
    std::uint64_t mc_seed = 20240901;
};

VerifyReport run_verify(VerifySuite suite, const VerifyOptions& opts = {});

}  // namespace orthowg
