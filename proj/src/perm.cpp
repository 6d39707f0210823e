#include <orthowg/perm.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orthowg {

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    for (const auto& c : cycles) {
        for (size_t i = 0; i < c.size(); ++i) {
            int from = c[i], to = c[(i + 1) % c.size()];
            if (from < 1 || from > n) throw std::invalid_argument("cycle entry out of range");
            im[static_cast<size_t>(from) - 1] = to;
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(img_.size());
    for (int k = 1; k <= size(); ++k) im[static_cast<size_t>(apply(k)) - 1] = k;
    return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> im(a.img_.size());
    for (int k = 1; k <= a.size(); ++k) im[static_cast<size_t>(k) - 1] = a.apply(b.apply(k));
    return Permutation(std::move(im));
}

Permutation Permutation::power(long e) const {
    Permutation base = e >= 0 ? *this : inverse();
    long k = e >= 0 ? e : -e;
    Permutation acc = identity(size());
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

int Permutation::cycle_count() const {
    std::vector<char> seen(img_.size(), 0);
    int count = 0;
    for (int k = 1; k <= size(); ++k) {
        if (seen[static_cast<size_t>(k) - 1]) continue;
        ++count;
        for (int j = k; !seen[static_cast<size_t>(j) - 1]; j = apply(j))
            seen[static_cast<size_t>(j) - 1] = 1;
    }
    return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<char> seen(img_.size(), 0);
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= size(); ++k) {
        if (seen[static_cast<size_t>(k) - 1]) continue;
        std::vector<int> c;
        for (int j = k; !seen[static_cast<size_t>(j) - 1]; j = apply(j)) {
            seen[static_cast<size_t>(j) - 1] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= size(); ++k)
        if (apply(k) != k) return false;
    return true;
}

bool Permutation::is_pairing() const {
    if (size() % 2 != 0) return false;
    for (int k = 1; k <= size(); ++k)
        if (apply(k) == k || apply(apply(k)) != k) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() == 1) continue;
        any = true;
        os << "(";
        for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << ")";
    }
    if (!any) os << "id";
    return os.str();
}

Permutation annulus_gamma(int m, int n) {
    std::vector<int> first(static_cast<size_t>(m)), second(static_cast<size_t>(n));
    std::iota(first.begin(), first.end(), 1);
    std::iota(second.begin(), second.end(), m + 1);
    return Permutation::from_cycles(m + n, {first, second});
}

Permutation annulus_gamma_reversed(int m, int n) {
    std::vector<int> first(static_cast<size_t>(m)), second(static_cast<size_t>(n));
    std::iota(first.begin(), first.end(), 1);
    for (int i = 0; i < n; ++i) second[static_cast<size_t>(i)] = m + n - i;
    return Permutation::from_cycles(m + n, {first, second});
}

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
    std::vector<int> parent;
};

}  // namespace

int orbit_count(const Permutation& pi, const Permutation& gamma) {
    if (pi.size() != gamma.size()) throw std::invalid_argument("size mismatch");
    UnionFind uf(pi.size());
    for (int k = 1; k <= pi.size(); ++k) {
        uf.unite(k - 1, pi.apply(k) - 1);
        uf.unite(k - 1, gamma.apply(k) - 1);
    }
    int count = 0;
    for (int k = 0; k < pi.size(); ++k)
        if (uf.find(k) == k) ++count;
    return count;
}

bool is_annular_noncrossing(const Permutation& pi, int m, int n, bool reversed) {
    Permutation gamma = reversed ? annulus_gamma_reversed(m, n) : annulus_gamma(m, n);
    if (pi.size() != m + n) throw std::invalid_argument("size mismatch");
    if (orbit_count(pi, gamma) != 1) throw std::invalid_argument("disconnected");
    return pi.cycle_count() + (pi.inverse() * gamma).cycle_count() == m + n;
}

int genus_defect(const Permutation& pi, const Permutation& gamma) {
    int n = pi.size();
    int k = orbit_count(pi, gamma);
    return n + 2 * k -
           (pi.cycle_count() + (pi.inverse() * gamma).cycle_count() + gamma.cycle_count());
}

}  // namespace orthowg
