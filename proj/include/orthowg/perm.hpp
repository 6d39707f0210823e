// Permutations of the 1-based ground set [n], with the cycle machinery used
// throughout: cycle counts, canonical cycle form, annular non-crossing tests
// and the genus-expansion defect.
#pragma once

#include <string>
#include <vector>

namespace orthowg {

class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    // images[k-1] = sigma(k); validates bijectivity.
    explicit Permutation(std::vector<int> images);
    // cycles given as value lists, e.g. {{1,2,4},{5,7}}; unlisted points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int apply(int k) const { return img_[static_cast<size_t>(k) - 1]; }
    int operator()(int k) const { return apply(k); }

    Permutation inverse() const;
    // function composition: (a * b)(k) = a(b(k))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    // a^e for any integer exponent
    Permutation power(long e) const;

    int cycle_count() const;
    // canonical cycle form: each cycle starts at its minimum, cycles sorted by minimum,
    // fixed points included.
    std::vector<std::vector<int>> cycles() const;
    bool is_identity() const;
    // fixed-point-free involution test
    bool is_pairing() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string to_string() const;

private:
    std::vector<int> img_;
};

// gamma for the (m,n)-annulus: (1,...,m)(m+1,...,m+n)
Permutation annulus_gamma(int m, int n);
// the reversed annulus: (1,...,m)(m+n, m+n-1, ..., m+1)
Permutation annulus_gamma_reversed(int m, int n);

// number of orbits of the group generated by pi and gamma
int orbit_count(const Permutation& pi, const Permutation& gamma);

// #(pi) + #(pi^-1 gamma) = m + n, valid only when <pi, gamma> is transitive;
// throws std::invalid_argument("disconnected") otherwise.
bool is_annular_noncrossing(const Permutation& pi, int m, int n, bool reversed = false);

// n + 2k - (#(pi) + #(pi^-1 gamma) + #(gamma)) with k the orbit count; always >= 0.
int genus_defect(const Permutation& pi, const Permutation& gamma);

}  // namespace orthowg
