#include <orthowg/pairing.hpp>

#include <sstream>
#include <stdexcept>

namespace orthowg {

Pairing::Pairing(std::vector<int> partner) : partner_(std::move(partner)) {
    const int n = size();
    if (n % 2 != 0) throw std::invalid_argument("pairing needs an even ground set");
    for (int k = 1; k <= n; ++k) {
        int v = apply(k);
        if (v < 1 || v > n || v == k || apply(v) != k)
            throw std::invalid_argument("not a fixed-point-free involution");
    }
}

Pairing Pairing::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> partner(static_cast<size_t>(n), 0);
    for (auto [r, s] : pairs) {
        if (r < 1 || s < 1 || r > n || s > n) throw std::invalid_argument("pair out of range");
        partner[static_cast<size_t>(r) - 1] = s;
        partner[static_cast<size_t>(s) - 1] = r;
    }
    return Pairing(std::move(partner));
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= size(); ++k)
        if (k < apply(k)) out.emplace_back(k, apply(k));
    return out;
}

Permutation Pairing::as_permutation() const { return Permutation(partner_); }

std::string Pairing::to_string() const {
    std::ostringstream os;
    for (auto [r, s] : pairs()) os << "(" << r << "," << s << ")";
    return os.str();
}

Permutation pairing_product(const Pairing& p, const Pairing& q) {
    if (p.size() != q.size()) throw std::invalid_argument("pairing size mismatch");
    return p.as_permutation() * q.as_permutation();
}

namespace {

void enumerate_rec(std::vector<int>& partner, const std::function<void(const Pairing&)>& visit) {
    const int n = static_cast<int>(partner.size());
    int a = 0;
    while (a < n && partner[static_cast<size_t>(a)] != 0) ++a;
    if (a == n) {
        visit(Pairing(partner));
        return;
    }
    for (int b = a + 1; b < n; ++b) {
        if (partner[static_cast<size_t>(b)] != 0) continue;
        partner[static_cast<size_t>(a)] = b + 1;
        partner[static_cast<size_t>(b)] = a + 1;
        enumerate_rec(partner, visit);
        partner[static_cast<size_t>(a)] = 0;
        partner[static_cast<size_t>(b)] = 0;
    }
}

}  // namespace

void enumerate_pairings(int n, const std::function<void(const Pairing&)>& visit) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("pairings need even n");
    std::vector<int> partner(static_cast<size_t>(n), 0);
    enumerate_rec(partner, visit);  // n = 0 visits the empty pairing once
}

std::vector<Pairing> all_pairings(int n) {
    std::vector<Pairing> out;
    enumerate_pairings(n, [&](const Pairing& p) { out.push_back(p); });
    return out;
}

std::vector<Pairing> enumerate_spokes(int m, bool reversed) {
    if (m < 1) throw std::invalid_argument("spoke diagrams need m >= 1");
    Permutation gamma = annulus_gamma(m, m);
    std::vector<Pairing> out;
    for (int l = m + 1; l <= 2 * m; ++l) {
        std::vector<std::pair<int, int>> pairs;
        for (int k = 1; k <= m; ++k) {
            int partner = reversed ? gamma.power(k).apply(l) : gamma.power(-k).apply(l);
            pairs.emplace_back(k, partner);
        }
        out.push_back(Pairing::from_pairs(2 * m, pairs));
    }
    return out;
}

}  // namespace orthowg
