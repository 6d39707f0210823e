// Exact arithmetic aliases and small helpers shared across the engine.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orthowg {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or a plain integer literal into an exact rational.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// C_m = binom(2m, m) / (m + 1)
inline Int catalan(unsigned long m) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * m, m);
    return b / Int(m + 1);
}

// (n-1)!! for even n >= 0; the number of pairings of [n].
inline Int double_factorial_odd(unsigned long n) {
    Int f = 1;
    for (unsigned long k = n >= 1 ? n - 1 : 0; k >= 1; k -= 2) {
        f *= Int(k);
        if (k <= 2) break;
    }
    return f;
}

}  // namespace orthowg
