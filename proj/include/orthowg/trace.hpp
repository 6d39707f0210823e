// The signed-pairing trace calculus: conjugated pairings p .eps q, extraction
// of the trace permutation and transpose pattern, canonical trace monomials,
// and exact expectations of products of traces of words in Haar orthogonal
// matrices and deterministic rational matrices.
#pragma once

#include <orthowg/ratfunc.hpp>
#include <orthowg/setpart.hpp>
#include <orthowg/signedperm.hpp>
#include <orthowg/weingarten.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orthowg {

// ---------------------------------------------------------------------------
// symbols, words, monomials
// ---------------------------------------------------------------------------

// reserved identifier for the identity matrix
inline const std::string kIdentitySymbol = "I";

struct Symbol {
    std::string id;
    bool transpose = false;

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.id == b.id && a.transpose == b.transpose;
    }
    friend bool operator<(const Symbol& a, const Symbol& b) {
        return a.id != b.id ? a.id < b.id : a.transpose < b.transpose;
    }
};

// a word is the content of one trace, read cyclically
using Word = std::vector<Symbol>;

// reverse the word and flip every transpose flag: Tr(W) = Tr(W^t reversed)
Word transpose_word(const Word& w);

// Drops identity symbols, then takes the lexicographic minimum over all
// rotations of the word and of its reverse-transpose. The empty result stands
// for Tr(I) = d and is handled by the monomial builder.
Word canonical_word(const Word& w);

// multiset of canonical trace words; product of traces
struct TraceMonomial {
    std::vector<Word> words;  // sorted

    friend bool operator==(const TraceMonomial& a, const TraceMonomial& b) {
        return a.words == b.words;
    }
    friend bool operator<(const TraceMonomial& a, const TraceMonomial& b) {
        return a.words < b.words;
    }
    std::string to_string() const;
};

// canonicalizes raw trace words; d_power counts the Tr(I) factors
struct CanonicalMonomial {
    TraceMonomial mono;
    int d_power = 0;
};
CanonicalMonomial make_monomial(const std::vector<Word>& raw_words);

// ---------------------------------------------------------------------------
// exact rational matrices
// ---------------------------------------------------------------------------

class SparseMat {
public:
    SparseMat() = default;
    static SparseMat identity(int d);
    static SparseMat from_dense(const std::vector<std::vector<Rat>>& rows);
    // entries (row, col, value), 1-based indices
    static SparseMat from_entries(int d, const std::vector<std::tuple<int, int, Rat>>& entries);

    int dim() const { return d_; }
    SparseMat transpose() const;
    SparseMat operator*(const SparseMat& o) const;
    Rat trace() const;
    Rat entry(int row, int col) const;  // 1-based

private:
    int d_ = 0;
    // per row: (col, value) sorted by col, zero values omitted
    std::vector<std::vector<std::pair<int, Rat>>> rows_;
};

class MatrixSet {
public:
    explicit MatrixSet(int d) : d_(d) {}
    int dim() const { return d_; }
    void insert(const std::string& id, SparseMat m);
    const SparseMat& matrix(const std::string& id) const;  // "I" resolves implicitly
    bool contains(const std::string& id) const;
    const std::map<std::string, SparseMat>& matrices() const { return mats_; }

    // exact trace of the word product; empty word gives d; results are cached
    Rat trace_of_word(const Word& w) const;

private:
    int d_;
    std::map<std::string, SparseMat> mats_;
    mutable std::map<std::string, SparseMat> transposed_;
    mutable std::map<Word, Rat> cache_;
};

// Tr_sigma: product over cycles (i1,...,ir) of Tr(A_{i1} ... A_{ir})
Rat tr_sigma(const Permutation& sigma, const std::vector<SparseMat>& matrices);

// ---------------------------------------------------------------------------
// trace expressions over Q(d)
// ---------------------------------------------------------------------------

class TraceExpression {
public:
    TraceExpression() = default;
    static TraceExpression constant(const RatFunc& c);

    void add(const TraceMonomial& mono, const RatFunc& coeff);
    const std::map<TraceMonomial, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TraceExpression operator+(const TraceExpression& o) const;
    TraceExpression operator-(const TraceExpression& o) const;
    TraceExpression operator*(const TraceExpression& o) const;
    TraceExpression operator*(const RatFunc& c) const;

    bool operator==(const TraceExpression& o) const { return terms_ == o.terms_; }
    bool operator!=(const TraceExpression& o) const { return terms_ != o.terms_; }

    Rat evaluate(const MatrixSet& mats) const;
    std::string to_string() const;

private:
    std::map<TraceMonomial, RatFunc> terms_;
};

// ---------------------------------------------------------------------------
// word specifications
// ---------------------------------------------------------------------------

// One O-factor slot: O_{label}^{eps} followed by the deterministic word.
// An empty word stands for the identity matrix.
struct Slot {
    int label = 1;   // which independent Haar matrix
    int eps = 1;     // +1 for O, -1 for O^{-1} = O^t
    Word word;
};

// Tr_gamma(O^{eps_1} Y_1, ..., O^{eps_n} Y_n) with gamma one cycle per haar
// trace, times deterministic trace factors Tr(w) for each plain trace.
struct WordSpec {
    std::vector<std::vector<Slot>> haar_traces;
    std::vector<Word> plain_traces;

    int total_slots() const;
    static WordSpec concat(const WordSpec& a, const WordSpec& b);

    Permutation gamma() const;          // on [total_slots]
    std::vector<int> eps() const;       // +-1 per slot
    std::vector<int> labels() const;    // haar label per slot
    std::vector<Word> slot_words() const;
};

// ---------------------------------------------------------------------------
// the pairing calculus
// ---------------------------------------------------------------------------

// p .eps q = (gamma delta)^{-1} delta_eps p (delta q delta) delta_eps (gamma delta),
// a fixed-point-free involution of [+-n].
SignedPermutation dot_epsilon(const Pairing& p, const Pairing& q, const Permutation& gamma,
                              const std::vector<int>& eps);

// Decomposition of r delta into cycle pairs {c, delta c^{-1} delta}; one
// representative per pair, canonically the cycle in which the element of
// least absolute value is positive (the test hook flips the choice).
struct PairingTrace {
    std::vector<std::vector<int>> signed_cycles;
    Permutation pi;
    std::vector<int> eta;  // +-1 per position of [n]
};
PairingTrace pairing_to_trace(const SignedPermutation& r, bool opposite_representative = false);

// trace words induced by the cycles: slot words concatenated, transposed
// where the cycle entry is negative
std::vector<Word> monomial_words(const PairingTrace& pt, const std::vector<Word>& slots);

// Lemma check: with all gamma cycles even and eps_k = (-1)^{k+1}, pi_{p.eps q}
// maps odds to odds and evens to evens. Throws on violated preconditions.
bool parity_check(const Pairing& p, const Pairing& q, const Permutation& gamma,
                  const std::vector<int>& eps);

// ---------------------------------------------------------------------------
// exact expectations
// ---------------------------------------------------------------------------

struct EngineOptions {
    bool allow_n8_symbolic = false;
    // (p, q) double sums are refused above this many combinations
    long max_combinations = 50'000'000;
};

// E(Tr_gamma(O^{eps_1} Y_1, ...) Tr(w_1) ...) as an exact element of the
// span of trace monomials over Q(d); zero when the slot count is odd.
TraceExpression expected_trace_symbolic(const WordSpec& spec, const EngineOptions& opts = {});

// same sum with the Weingarten table evaluated at fixed d (exact rationals)
TraceExpression expected_trace_at(const WordSpec& spec, const Rat& d,
                                  const EngineOptions& opts = {});

// fully evaluated expectation on concrete matrices; requires d >= slot count
Rat expected_trace_numeric(const WordSpec& spec, const MatrixSet& mats,
                           const EngineOptions& opts = {});

// cov(X, Y) = E(XY) - E(X) E(Y), exactly in Q(d)
TraceExpression covariance_symbolic(const WordSpec& x, const WordSpec& y,
                                    const EngineOptions& opts = {});
Rat covariance_numeric(const WordSpec& x, const WordSpec& y, const MatrixSet& mats,
                       const EngineOptions& opts = {});

// classical joint cumulant k_r of the trace variables described by words,
// via Moebius inversion over the partitions of [r]
Rat exact_cumulant(const std::vector<WordSpec>& words, const MatrixSet& mats,
                   const EngineOptions& opts = {});

}  // namespace orthowg
