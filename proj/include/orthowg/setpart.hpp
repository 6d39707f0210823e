// Set partitions of [n] with the lattice structure driving classical
// cumulants: join, the partition-lattice Moebius function and the
// moment-cumulant inversion.
#pragma once

#include <orthowg/pairing.hpp>
#include <orthowg/perm.hpp>
#include <orthowg/rational.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthowg {

class SetPartition {
public:
    SetPartition() = default;
    // blocks must be disjoint, nonempty and cover [n]
    SetPartition(int n, std::vector<std::vector<int>> blocks);
    static SetPartition singletons(int n);
    static SetPartition one_block(int n);
    static SetPartition from_permutation_cycles(const Permutation& p);
    static SetPartition from_pairing(const Pairing& p);

    int size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    // index of the block containing k (0-based block index)
    int block_of(int k) const { return block_index_[static_cast<size_t>(k) - 1]; }
    // canonical form: blocks sorted by minimum, elements ascending
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // every block of *this contained in a block of coarser
    bool refines(const SetPartition& coarser) const;

    bool operator==(const SetPartition& o) const {
        return n_ == o.n_ && blocks_ == o.blocks_;
    }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    bool operator<(const SetPartition& o) const { return blocks_ < o.blocks_; }

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;
};

// least upper bound in the partition lattice
SetPartition join(const SetPartition& a, const SetPartition& b);

// Moebius function of the interval [V, U]; V must refine U. Computed as the
// product over blocks of U of (-1)^(b-1) (b-1)! with b the number of V-blocks
// in the block.
Int mobius(const SetPartition& V, const SetPartition& U);

// all partitions of [n], by restricted-growth enumeration
void enumerate_partitions(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> all_partitions(int n);

// Joint cumulant k_U = sum_{V <= U} mobius(V, U) E_V, where moments(V) = E_V.
// Scalar must support +, *, and construction from long.
template <typename Scalar>
Scalar joint_cumulant(const std::function<Scalar(const SetPartition&)>& moments,
                      const SetPartition& U) {
    Scalar acc(0);
    enumerate_partitions(U.size(), [&](const SetPartition& V) {
        if (!V.refines(U)) return;
        Int mu = mobius(V, U);
        Scalar term = moments(V);
        Scalar factor(0);
        bool neg = mu < 0;
        Int mag = abs(mu);
        // scalar types in use (Rat, double, RatFunc) all construct from long
        factor = Scalar(static_cast<long>(mag.get_si()));
        if (neg) factor = Scalar(0) - factor;
        acc = acc + factor * term;
    });
    return acc;
}

}  // namespace orthowg
