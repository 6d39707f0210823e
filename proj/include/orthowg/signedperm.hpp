// Permutations of the signed domain [+-n] = {-n,...,-1,1,...,n}, storage
// interleaved as (1,-1,2,-2,...). Carries delta (k -> -k), the sign flips
// delta_epsilon, and embeddings of ordinary permutations fixing all negatives.
#pragma once

#include <orthowg/pairing.hpp>
#include <orthowg/perm.hpp>

#include <string>
#include <vector>

namespace orthowg {

class SignedPermutation {
public:
    SignedPermutation() = default;
    static SignedPermutation identity(int n);
    // delta: k -> -k
    static SignedPermutation delta(int n);
    // delta_epsilon: k -> eps_{|k|} k; eps entries are +-1
    static SignedPermutation delta_epsilon(const std::vector<int>& eps);
    // p extended to [+-n] with p(-k) = -k
    static SignedPermutation embed(const Permutation& p);
    // q acting on the negatives: -k -> -q(k), positives fixed (= delta q delta)
    static SignedPermutation embed_negative(const Permutation& q);

    int n() const { return n_; }
    int apply(int k) const { return img_[index(k)]; }
    int operator()(int k) const { return apply(k); }

    SignedPermutation inverse() const;
    // function composition: (a * b)(k) = a(b(k))
    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);

    bool is_identity() const;
    // fixed-point-free involution of [+-n]
    bool is_pairing() const;

    bool operator==(const SignedPermutation& o) const { return img_ == o.img_; }
    bool operator!=(const SignedPermutation& o) const { return img_ != o.img_; }

    // cycles over [+-n]; each cycle starts at its minimum element under the
    // order 1 < -1 < 2 < -2 < ...
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const { return static_cast<int>(cycles().size()); }

    std::string to_string() const;

private:
    explicit SignedPermutation(int n) : n_(n), img_(static_cast<size_t>(2 * n), 0) {}
    size_t index(int k) const;
    void set(int k, int v) { img_[index(k)] = v; }

    int n_ = 0;
    std::vector<int> img_;  // interleaved (1,-1,2,-2,...)
};

}  // namespace orthowg
