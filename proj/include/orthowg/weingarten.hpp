// The orthogonal Weingarten function, obtained by exact inversion of the
// Gram form <phi(p), q> = d^{#(p v q)} on pairings of [n]. Tables come in two
// modes: numeric (exact rationals at a fixed d) and symbolic (rational
// functions of d). The symbolic route for n <= 6 is full fraction-free
// elimination; n = 8 reduces first to join-type classes (entries depend only
// on the block sizes of p v q) and must be enabled explicitly.
#pragma once

#include <orthowg/pairing.hpp>
#include <orthowg/ratfunc.hpp>
#include <orthowg/setpart.hpp>

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace orthowg {

// half block sizes of p v q, sorted descending; a partition of n/2
std::vector<int> join_type(const Pairing& p, const Pairing& q);

// Gram matrix indexed by all_pairings(n): entry d^{#(p v q)}
std::vector<std::vector<Poly>> gram_symbolic(int n);
std::vector<std::vector<Rat>> gram_numeric(int n, const Rat& d);

struct LaurentTerm {
    Int coefficient;
    int exponent = 0;
};

// Leading term of <Wg(p), q>: exponent -n + #(p v q), coefficient the product
// of signed Catalan numbers (-1)^(r-1) C_{r-1} over join blocks of 2r elements.
LaurentTerm leading_term(const Pairing& p, const Pairing& q);

class WeingartenTable {
public:
    enum class Mode { Numeric, Symbolic };

    Mode mode() const { return mode_; }
    int n() const { return n_; }
    const Rat& d() const { return d_; }
    const std::vector<Pairing>& basis() const { return basis_; }
    int index_of(const Pairing& p) const;

    const Rat& entry(const Pairing& p, const Pairing& q) const;
    const RatFunc& entry_symbolic(const Pairing& p, const Pairing& q) const;
    const Rat& entry(int i, int j) const { return num_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const RatFunc& entry_symbolic(int i, int j) const {
        return sym_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    friend WeingartenTable weingarten_numeric(int n, const Rat& d);
    friend WeingartenTable weingarten_symbolic(int n, bool allow_n8);

private:
    WeingartenTable() = default;
    Mode mode_ = Mode::Numeric;
    int n_ = 0;
    Rat d_;
    std::vector<Pairing> basis_;
    std::map<Pairing, int> index_;
    std::vector<std::vector<Rat>> num_;
    std::vector<std::vector<RatFunc>> sym_;
};

// Exact inverse of the Gram matrix at integer or rational d; throws
// std::domain_error naming d when the Gram matrix is singular there
// (invertibility is guaranteed for integer d >= n).
WeingartenTable weingarten_numeric(int n, const Rat& d);

// Entries as rational functions of d; n <= 6 unless allow_n8.
WeingartenTable weingarten_symbolic(int n, bool allow_n8 = false);

// Caches Weingarten tables by size for one mode (numeric at fixed d, or
// symbolic). Used by the trace engine, which needs several sizes at once for
// multi-Haar words.
class WeingartenProvider {
public:
    // numeric mode
    explicit WeingartenProvider(const Rat& d);
    // symbolic mode
    explicit WeingartenProvider(bool allow_n8 = false);

    bool symbolic() const { return symbolic_; }
    const Rat& d() const { return d_; }
    const WeingartenTable& table(int n);

private:
    bool symbolic_ = false;
    bool allow_n8_ = false;
    Rat d_;
    std::map<int, std::shared_ptr<WeingartenTable>> cache_;
};

// Wg(U, p, q) = prod over blocks U_i of <Wg(p|U_i), q|U_i>; requires p, q <= U.
RatFunc weingarten_multiplicative_symbolic(const SetPartition& U, const Pairing& p,
                                           const Pairing& q, WeingartenProvider& provider);
Rat weingarten_multiplicative_numeric(const SetPartition& U, const Pairing& p,
                                      const Pairing& q, WeingartenProvider& provider);

// test hook: the join-type-reduced symbolic solve, usable at any even n
std::map<std::vector<int>, RatFunc> weingarten_symbolic_by_type(int n);

}  // namespace orthowg
