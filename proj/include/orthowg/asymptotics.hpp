// Large-d analysis: degree bookkeeping for trace expressions (each surviving
// trace factor contributes one power of d), spoke-diagram classification, and
// the universal limit formulas for trace-fluctuation covariances.
#pragma once

#include <orthowg/trace.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orthowg {

// symbols whose singleton traces are centred (substitute to zero)
struct DegreeAssignment {
    std::set<std::string> centred;
};

// Max over monomials of deg coefficient + number of trace factors, after
// deleting monomials containing a singleton trace of a centred symbol.
// nullopt plays the role of -infinity (zero expression / everything killed).
std::optional<int> asymptotic_degree(const TraceExpression& expr, const DegreeAssignment& asg);

// Monomials achieving degree 0 with their leading coefficients; max_degree is
// over the surviving monomials (nullopt when none survive).
struct LeadingLimit {
    std::optional<int> max_degree;
    std::map<TraceMonomial, Rat> order_one_terms;
};
LeadingLimit leading_limit(const TraceExpression& expr, const DegreeAssignment& asg);

// ---------------------------------------------------------------------------
// spoke diagrams
// ---------------------------------------------------------------------------

struct SpokeClass {
    enum Kind { Standard, Reversed, NotSpoke } kind = NotSpoke;
    int l = 0;  // the index in [m+1, 2m] identifying the diagram
};

// Classifies p in P_2(2m) with signs eps against gamma = (1..m)(m+1..2m).
// NotSpoke when pi_{p.eps p} is not a pairing or p does not connect the two
// circles. Otherwise verifies the full set of spoke-lemma conclusions (cycle
// forms of p and pi, the sign pattern of eps across pairs, and the transpose
// pattern eta) and throws std::logic_error if any of them fails.
SpokeClass spoke_classify(const Pairing& p, const std::vector<int>& eps, int m);

// ---------------------------------------------------------------------------
// second-order limit formulas
// ---------------------------------------------------------------------------

// Limiting covariance of Tr(O^{k_1} a_1 ... O^{k_m} a_m) and
// Tr(O^{l_1} b_1 ... O^{l_n} b_n): 0 when m != n, else
//   sum_r { prod_i phi(a_i b_{r-i}) [k_i + l_{r-(i-1)} = 0]
//         + prod_i phi(a_i b_{r+i}^t) [k_i - l_{r+i} = 0] },
// indices of the b's and l's mod m. phi(o^j) = [j = 0] is built in.
// phi[i][j] = phi(a_{i+1} b_{j+1}), phi_t[i][j] = phi(a_{i+1} b_{j+1}^t).
double limit_covariance_spoke(const std::vector<std::vector<double>>& phi,
                              const std::vector<std::vector<double>>& phi_t,
                              const std::vector<long>& k_exponents,
                              const std::vector<long>& l_exponents);

// The same sum with formal phi's: each surviving (r, family) contributes the
// monomial prod_i Tr(a_i b_{r-i}) resp. prod_i Tr(a_i b_{r+i}^t) with
// coefficient 1. Used to compare against engine limits monomial by monomial.
TraceExpression spoke_limit_terms(const std::vector<long>& k_exponents,
                                  const std::vector<long>& l_exponents,
                                  const std::vector<std::string>& a_ids,
                                  const std::vector<std::string>& b_ids);

// The defining second-order freeness sum: for n >= 2 (and n = 1 in the same
// subalgebra), sum_k prod_i (phi(a_i b_{k-i}) + phi(a_i b_{i-k}^t)); zero for
// n = 1 with a_1, b_1 from different subalgebras.
double second_order_free_cov(const std::vector<std::vector<double>>& phi,
                             const std::vector<std::vector<double>>& phi_t,
                             bool same_subalgebra_when_n1 = false);

// lim cov(Tr(O^m), Tr(O^n)): 0 when |m| != |n|; for |m| = |n| the engine
// value is the number of pairings surviving spoke classification under eps
// built from sgn(m), sgn(n). Counting both spoke families without the sign
// constraint would give 2|m| instead; that constant is carried alongside for
// comparison. Exact finite-d computation supports the constrained count.
struct PowerCovLimit {
    double engine_value = 0;
    double both_families_value = 0;
};
PowerCovLimit limit_cov_powers(long m, long n);

}  // namespace orthowg
