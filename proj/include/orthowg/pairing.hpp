// Pairings (perfect matchings) of [n] as fixed-point-free involutions,
// enumeration of P_2(n), and the spoke-diagram families.
#pragma once

#include <orthowg/perm.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace orthowg {

class Pairing {
public:
    Pairing() = default;
    // partner[k-1] = element paired with k; must be a fixed-point-free involution.
    explicit Pairing(std::vector<int> partner);
    // from a pair list, e.g. {{1,2},{3,4}}
    static Pairing from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return static_cast<int>(partner_.size()); }
    int apply(int k) const { return partner_[static_cast<size_t>(k) - 1]; }
    int operator()(int k) const { return apply(k); }

    // pairs (r, s) with r < s, sorted by r
    std::vector<std::pair<int, int>> pairs() const;
    Permutation as_permutation() const;

    bool operator==(const Pairing& o) const { return partner_ == o.partner_; }
    bool operator!=(const Pairing& o) const { return partner_ != o.partner_; }
    bool operator<(const Pairing& o) const { return partner_ < o.partner_; }

    std::string to_string() const;

private:
    std::vector<int> partner_;
};

// Composition pq as a permutation of [n]; satisfies 2 #(p v q) = #(pq).
Permutation pairing_product(const Pairing& p, const Pairing& q);

// All pairings of [n] (n even), visiting each exactly once in the canonical
// order: the smallest free element is paired with each larger free element in
// increasing order, recursively. Count is (n-1)!!.
void enumerate_pairings(int n, const std::function<void(const Pairing&)>& visit);
std::vector<Pairing> all_pairings(int n);

// Spoke diagrams on the (m,m)-annulus: for each l in [m+1, 2m] the pairing
// with pairs (k, gamma^{-k}(l)) (standard) or (k, gamma^{k}(l)) (reversed).
std::vector<Pairing> enumerate_spokes(int m, bool reversed);

}  // namespace orthowg
