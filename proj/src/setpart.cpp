#include <orthowg/setpart.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orthowg {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), block_index_(static_cast<size_t>(n), -1) {
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    int idx = 0;
    for (const auto& b : blocks_) {
        for (int k : b) {
            if (k < 1 || k > n_ || block_index_[static_cast<size_t>(k) - 1] != -1)
                throw std::invalid_argument("blocks must partition [n]");
            block_index_[static_cast<size_t>(k) - 1] = idx;
        }
        ++idx;
    }
    for (int v : block_index_)
        if (v == -1) throw std::invalid_argument("blocks must cover [n]");
}

SetPartition SetPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    for (int k = 1; k <= n; ++k) blocks.push_back({k});
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one_block(int n) {
    std::vector<int> b(static_cast<size_t>(n));
    std::iota(b.begin(), b.end(), 1);
    return SetPartition(n, {std::move(b)});
}

SetPartition SetPartition::from_permutation_cycles(const Permutation& p) {
    return SetPartition(p.size(), p.cycles());
}

SetPartition SetPartition::from_pairing(const Pairing& p) {
    std::vector<std::vector<int>> blocks;
    for (auto [r, s] : p.pairs()) blocks.push_back({r, s});
    return SetPartition(p.size(), std::move(blocks));
}

bool SetPartition::refines(const SetPartition& coarser) const {
    if (n_ != coarser.n_) throw std::invalid_argument("ground set mismatch");
    for (const auto& b : blocks_) {
        int target = coarser.block_of(b.front());
        for (int k : b)
            if (coarser.block_of(k) != target) return false;
    }
    return true;
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    for (const auto& b : blocks_) {
        os << "{";
        for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
        os << "}";
    }
    return os.str();
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("ground set mismatch");
    const int n = a.size();
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };
    for (const auto& blk : a.blocks())
        for (size_t i = 1; i < blk.size(); ++i) unite(blk[0] - 1, blk[i] - 1);
    for (const auto& blk : b.blocks())
        for (size_t i = 1; i < blk.size(); ++i) unite(blk[0] - 1, blk[i] - 1);
    std::vector<std::vector<int>> by_root(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) by_root[static_cast<size_t>(find(k))].push_back(k + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& blk : by_root)
        if (!blk.empty()) blocks.push_back(std::move(blk));
    return SetPartition(n, std::move(blocks));
}

Int mobius(const SetPartition& V, const SetPartition& U) {
    if (!V.refines(U)) throw std::invalid_argument("mobius requires V <= U");
    Int result(1);
    for (const auto& blk : U.blocks()) {
        std::vector<char> seen(static_cast<size_t>(V.block_count()), 0);
        int b = 0;
        for (int k : blk) {
            int vb = V.block_of(k);
            if (!seen[static_cast<size_t>(vb)]) {
                seen[static_cast<size_t>(vb)] = 1;
                ++b;
            }
        }
        Int f = factorial(static_cast<unsigned long>(b - 1));
        if ((b - 1) % 2 != 0) f = -f;
        result *= f;
    }
    return result;
}

void enumerate_partitions(int n, const std::function<void(const SetPartition&)>& visit) {
    if (n == 0) return;
    // restricted growth strings: a[0] = 0, a[k] <= 1 + max(a[0..k-1])
    std::vector<int> a(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int k, int maxv) {
        if (k == n) {
            std::vector<std::vector<int>> blocks(static_cast<size_t>(maxv + 1));
            for (int i = 0; i < n; ++i) blocks[static_cast<size_t>(a[static_cast<size_t>(i)])].push_back(i + 1);
            visit(SetPartition(n, std::move(blocks)));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[static_cast<size_t>(k)] = v;
            rec(k + 1, std::max(maxv, v));
        }
    };
    rec(1, 0);
}

std::vector<SetPartition> all_partitions(int n) {
    std::vector<SetPartition> out;
    enumerate_partitions(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

}  // namespace orthowg
