#include <orthowg/asymptotics.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orthowg {

namespace {

bool killed_by_centring(const TraceMonomial& mono, const DegreeAssignment& asg) {
    for (const auto& w : mono.words)
        if (w.size() == 1 && asg.centred.count(w[0].id)) return true;
    return false;
}

}  // namespace

std::optional<int> asymptotic_degree(const TraceExpression& expr, const DegreeAssignment& asg) {
    std::optional<int> best;
    for (const auto& [mono, coeff] : expr.terms()) {
        if (killed_by_centring(mono, asg)) continue;
        int deg = coeff.degree() + static_cast<int>(mono.words.size());
        if (!best || deg > *best) best = deg;
    }
    return best;
}

LeadingLimit leading_limit(const TraceExpression& expr, const DegreeAssignment& asg) {
    LeadingLimit out;
    out.max_degree = asymptotic_degree(expr, asg);
    for (const auto& [mono, coeff] : expr.terms()) {
        if (killed_by_centring(mono, asg)) continue;
        if (coeff.degree() + static_cast<int>(mono.words.size()) == 0)
            out.order_one_terms.emplace(mono, coeff.leading_coefficient());
    }
    return out;
}

// ---------------------------------------------------------------------------
// spoke diagrams
// ---------------------------------------------------------------------------

SpokeClass spoke_classify(const Pairing& p, const std::vector<int>& eps, int m) {
    if (p.size() != 2 * m || static_cast<int>(eps.size()) != 2 * m)
        throw std::invalid_argument("spoke_classify expects a pairing of [2m]");
    Permutation gamma = annulus_gamma(m, m);
    auto pt = pairing_to_trace(dot_epsilon(p, p, gamma, eps));
    if (!pt.pi.is_pairing()) return SpokeClass{};
    if (orbit_count(p.as_permutation(), gamma) != 1) return SpokeClass{};

    // the sign pattern across one pair decides the family; the lemmas force it
    // to be uniform across all pairs
    auto prs = p.pairs();
    bool opposite = eps[static_cast<size_t>(prs[0].first) - 1] !=
                    eps[static_cast<size_t>(prs[0].second) - 1];
    for (auto [r, s] : prs) {
        bool o = eps[static_cast<size_t>(r) - 1] != eps[static_cast<size_t>(s) - 1];
        if (o != opposite)
            throw std::logic_error("spoke lemma violated: mixed epsilon pattern across pairs");
    }

    // all pairs must connect the two circles and m = n is forced
    for (auto [r, s] : prs)
        if ((r <= m) == (s <= m))
            throw std::logic_error("spoke lemma violated: pair inside one circle");

    // locate l: at k = m the pairs (m, gamma^{-m}(l)) and (m, gamma^{m}(l))
    // both reduce to (m, l) since gamma^m fixes the second circle
    int l = p.apply(m);
    SpokeClass out;
    out.l = l;
    out.kind = opposite ? SpokeClass::Standard : SpokeClass::Reversed;

    // conclusion (a): the cycle form of p
    for (int k = 1; k <= m; ++k) {
        int expect = opposite ? gamma.power(-k).apply(l) : gamma.power(k).apply(l);
        if (p.apply(k) != expect)
            throw std::logic_error("spoke lemma violated: p does not have the spoke cycle form");
    }
    // conclusion (b): the cycle form of pi_{p.eps p}
    for (int k = 1; k <= m; ++k) {
        int expect = opposite ? gamma.power(-k - 1).apply(l) : gamma.power(k).apply(l);
        if (pt.pi.apply(k) != expect)
            throw std::logic_error("spoke lemma violated: pi does not have the spoke cycle form");
    }
    // conclusion (d): the transpose pattern. With the canonical representative
    // (least absolute value positive) a standard spoke has eta identically +1;
    // a reversed spoke has eta = +1 on [m] and -1 on the second circle, which
    // is the lemma's "eta = -1 on [m]" under the opposite representative.
    for (int k = 1; k <= 2 * m; ++k) {
        int expect = opposite ? 1 : (k <= m ? 1 : -1);
        if (pt.eta[static_cast<size_t>(k) - 1] != expect)
            throw std::logic_error("spoke lemma violated: unexpected transpose pattern");
    }
    return out;
}

// ---------------------------------------------------------------------------
// limit formulas
// ---------------------------------------------------------------------------

namespace {

// maps any integer to [1, m] cyclically
int cyc(long idx, int m) {
    long r = ((idx - 1) % m + m) % m;
    return static_cast<int>(r) + 1;
}

}  // namespace

double limit_covariance_spoke(const std::vector<std::vector<double>>& phi,
                              const std::vector<std::vector<double>>& phi_t,
                              const std::vector<long>& k_exponents,
                              const std::vector<long>& l_exponents) {
    const int m = static_cast<int>(k_exponents.size());
    const int n = static_cast<int>(l_exponents.size());
    if (m != n) return 0.0;
    if (static_cast<int>(phi.size()) != m || static_cast<int>(phi_t.size()) != m)
        throw std::invalid_argument("phi tables must be m x m");
    double total = 0.0;
    for (int r = 1; r <= m; ++r) {
        double straight = 1.0, reversed = 1.0;
        for (int i = 1; i <= m; ++i) {
            // phi(a_i b_{r-i}) phi(o^{k_i + l_{r-(i-1)}})
            if (k_exponents[static_cast<size_t>(i) - 1] +
                    l_exponents[static_cast<size_t>(cyc(r - (i - 1), m)) - 1] !=
                0)
                straight = 0.0;
            else
                straight *= phi[static_cast<size_t>(i) - 1][static_cast<size_t>(cyc(r - i, m)) - 1];
            // phi(a_i b_{r+i}^t) phi(o^{k_i - l_{r+i}})
            if (k_exponents[static_cast<size_t>(i) - 1] -
                    l_exponents[static_cast<size_t>(cyc(r + i, m)) - 1] !=
                0)
                reversed = 0.0;
            else
                reversed *=
                    phi_t[static_cast<size_t>(i) - 1][static_cast<size_t>(cyc(r + i, m)) - 1];
        }
        total += straight + reversed;
    }
    return total;
}

TraceExpression spoke_limit_terms(const std::vector<long>& k_exponents,
                                  const std::vector<long>& l_exponents,
                                  const std::vector<std::string>& a_ids,
                                  const std::vector<std::string>& b_ids) {
    const int m = static_cast<int>(k_exponents.size());
    TraceExpression out;
    if (m != static_cast<int>(l_exponents.size())) return out;
    for (int r = 1; r <= m; ++r) {
        bool straight = true, reversed = true;
        std::vector<Word> straight_words, reversed_words;
        for (int i = 1; i <= m; ++i) {
            if (k_exponents[static_cast<size_t>(i) - 1] +
                    l_exponents[static_cast<size_t>(cyc(r - (i - 1), m)) - 1] !=
                0)
                straight = false;
            else
                straight_words.push_back(
                    {Symbol{a_ids[static_cast<size_t>(i) - 1], false},
                     Symbol{b_ids[static_cast<size_t>(cyc(r - i, m)) - 1], false}});
            if (k_exponents[static_cast<size_t>(i) - 1] -
                    l_exponents[static_cast<size_t>(cyc(r + i, m)) - 1] !=
                0)
                reversed = false;
            else
                reversed_words.push_back(
                    {Symbol{a_ids[static_cast<size_t>(i) - 1], false},
                     Symbol{b_ids[static_cast<size_t>(cyc(r + i, m)) - 1], true}});
        }
        if (straight) out.add(make_monomial(straight_words).mono, RatFunc::one());
        if (reversed) out.add(make_monomial(reversed_words).mono, RatFunc::one());
    }
    return out;
}

double second_order_free_cov(const std::vector<std::vector<double>>& phi,
                             const std::vector<std::vector<double>>& phi_t,
                             bool same_subalgebra_when_n1) {
    const int n = static_cast<int>(phi.size());
    if (n < 1) throw std::invalid_argument("second_order_free_cov needs n >= 1");
    if (n == 1 && !same_subalgebra_when_n1) return 0.0;
    double total = 0.0;
    for (int k = 1; k <= n; ++k) {
        double prod = 1.0;
        for (int i = 1; i <= n; ++i)
            prod *= phi[static_cast<size_t>(i) - 1][static_cast<size_t>(cyc(k - i, n)) - 1] +
                    phi_t[static_cast<size_t>(i) - 1][static_cast<size_t>(cyc(i - k, n)) - 1];
        total += prod;
    }
    return total;
}

PowerCovLimit limit_cov_powers(long m, long n) {
    if (m == 0 || n == 0) throw std::invalid_argument("exponents must be nonzero");
    PowerCovLimit out;
    if (std::labs(m) != std::labs(n)) return out;
    const int mm = static_cast<int>(std::labs(m));
    std::vector<int> eps(static_cast<size_t>(2 * mm));
    for (int k = 0; k < mm; ++k) eps[static_cast<size_t>(k)] = m > 0 ? 1 : -1;
    for (int k = mm; k < 2 * mm; ++k) eps[static_cast<size_t>(k)] = n > 0 ? 1 : -1;
    int survivors = 0;
    for (const auto& p : all_pairings(2 * mm))
        if (spoke_classify(p, eps, mm).kind != SpokeClass::NotSpoke) ++survivors;
    out.engine_value = survivors;
    out.both_families_value = 2.0 * mm;
    return out;
}

}  // namespace orthowg
