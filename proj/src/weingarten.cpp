#include <orthowg/weingarten.hpp>

#include <algorithm>
#include <stdexcept>

namespace orthowg {

std::vector<int> join_type(const Pairing& p, const Pairing& q) {
    SetPartition j = join(SetPartition::from_pairing(p), SetPartition::from_pairing(q));
    std::vector<int> sizes;
    for (const auto& b : j.blocks()) sizes.push_back(static_cast<int>(b.size()) / 2);
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

std::vector<std::vector<Poly>> gram_symbolic(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("gram needs even n >= 2");
    auto basis = all_pairings(n);
    const size_t k = basis.size();
    std::vector<std::vector<Poly>> g(k, std::vector<Poly>(k));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i; j < k; ++j) {
            int blocks = join(SetPartition::from_pairing(basis[i]),
                              SetPartition::from_pairing(basis[j]))
                             .block_count();
            g[i][j] = Poly::monomial(Int(1), blocks);
            g[j][i] = g[i][j];
        }
    }
    return g;
}

std::vector<std::vector<Rat>> gram_numeric(int n, const Rat& d) {
    auto g = gram_symbolic(n);
    std::vector<std::vector<Rat>> out(g.size(), std::vector<Rat>(g.size()));
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) out[i][j] = g[i][j].evaluate(d);
    return out;
}

LaurentTerm leading_term(const Pairing& p, const Pairing& q) {
    if (p.size() != q.size()) throw std::invalid_argument("pairing size mismatch");
    SetPartition j = join(SetPartition::from_pairing(p), SetPartition::from_pairing(q));
    LaurentTerm t;
    t.exponent = -p.size() + j.block_count();
    t.coefficient = 1;
    for (const auto& b : j.blocks()) {
        unsigned long r = b.size() / 2;
        Int c = catalan(r - 1);
        if ((r - 1) % 2 != 0) c = -c;
        t.coefficient *= c;
    }
    return t;
}

namespace {

// Exact Gauss-Jordan inverse over Q; throws on a singular matrix.
std::vector<std::vector<Rat>> rational_inverse(std::vector<std::vector<Rat>> m) {
    const size_t k = m.size();
    std::vector<std::vector<Rat>> inv(k, std::vector<Rat>(k, Rat(0)));
    for (size_t i = 0; i < k; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) throw std::domain_error("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = m[col][col];
        for (size_t j = 0; j < k; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t i = 0; i < k; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j < k; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Fraction-free forward elimination (Bareiss) on [A | B], then back
// substitution over Q(d). Returns X with A X = B.
std::vector<std::vector<RatFunc>> bareiss_solve(std::vector<std::vector<Poly>> a,
                                                std::vector<std::vector<Poly>> b) {
    const size_t k = a.size();
    const size_t w = b[0].size();
    Poly prev = Poly::one();
    for (size_t piv = 0; piv + 1 < k; ++piv) {
        if (a[piv][piv].is_zero()) {
            size_t swp = piv + 1;
            while (swp < k && a[swp][piv].is_zero()) ++swp;
            if (swp == k) throw std::domain_error("singular matrix");
            std::swap(a[piv], a[swp]);
            std::swap(b[piv], b[swp]);
        }
        for (size_t i = piv + 1; i < k; ++i) {
            for (size_t j = piv + 1; j < k; ++j)
                a[i][j] = (a[piv][piv] * a[i][j] - a[i][piv] * a[piv][j]).divexact(prev);
            for (size_t j = 0; j < w; ++j)
                b[i][j] = (a[piv][piv] * b[i][j] - a[i][piv] * b[piv][j]).divexact(prev);
            a[i][piv] = Poly::zero();
        }
        prev = a[piv][piv];
    }
    if (a[k - 1][k - 1].is_zero()) throw std::domain_error("singular matrix");
    std::vector<std::vector<RatFunc>> x(k, std::vector<RatFunc>(w));
    for (size_t c = 0; c < w; ++c) {
        for (size_t i = k; i-- > 0;) {
            RatFunc acc(RatFunc(b[i][c], Poly::one()));
            for (size_t j = i + 1; j < k; ++j)
                acc = acc - RatFunc(a[i][j], Poly::one()) * x[j][c];
            x[i][c] = acc / RatFunc(a[i][i], Poly::one());
        }
    }
    return x;
}

// Determinant over Z[d] by Bareiss.
Poly poly_det(std::vector<std::vector<Poly>> a) {
    const size_t k = a.size();
    Poly prev = Poly::one();
    int sign = 1;
    for (size_t piv = 0; piv + 1 < k; ++piv) {
        if (a[piv][piv].is_zero()) {
            size_t swp = piv + 1;
            while (swp < k && a[swp][piv].is_zero()) ++swp;
            if (swp == k) return Poly::zero();
            std::swap(a[piv], a[swp]);
            sign = -sign;
        }
        for (size_t i = piv + 1; i < k; ++i)
            for (size_t j = piv + 1; j < k; ++j)
                a[i][j] = (a[piv][piv] * a[i][j] - a[i][piv] * a[piv][j]).divexact(prev);
        prev = a[piv][piv];
    }
    Poly det = a[k - 1][k - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

std::map<std::vector<int>, RatFunc> weingarten_symbolic_by_type(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("even n >= 2 required");
    auto basis = all_pairings(n);
    const Pairing& r0 = basis.front();  // (1,2)(3,4)...
    // bucket the basis by join type against r0
    std::map<std::vector<int>, std::vector<size_t>> buckets;
    for (size_t i = 0; i < basis.size(); ++i) buckets[join_type(basis[i], r0)].push_back(i);
    std::vector<std::vector<int>> types;
    for (const auto& [t, members] : buckets) types.push_back(t);
    const size_t k = types.size();
    // reduced system: rows indexed by representative p_t, unknowns w_s
    std::vector<std::vector<Poly>> a(k, std::vector<Poly>(k, Poly::zero()));
    std::vector<Poly> rhs(k, Poly::zero());
    const std::vector<int> ones(static_cast<size_t>(n / 2), 1);
    for (size_t t = 0; t < k; ++t) {
        const Pairing& rep = basis[buckets[types[t]].front()];
        for (size_t s = 0; s < k; ++s)
            for (size_t qi : buckets[types[s]]) {
                int blocks = join(SetPartition::from_pairing(rep),
                                  SetPartition::from_pairing(basis[qi]))
                                 .block_count();
                a[t][s] = a[t][s] + Poly::monomial(Int(1), blocks);
            }
        rhs[t] = types[t] == ones ? Poly::one() : Poly::zero();
    }
    // Cramer with Bareiss determinants; the reduced matrix is tiny.
    Poly det = poly_det(a);
    if (det.is_zero()) throw std::domain_error("singular reduced Gram system");
    std::map<std::vector<int>, RatFunc> out;
    for (size_t s = 0; s < k; ++s) {
        auto a2 = a;
        for (size_t t = 0; t < k; ++t) a2[t][s] = rhs[t];
        out[types[s]] = RatFunc(poly_det(a2), det);
    }
    return out;
}

WeingartenTable weingarten_numeric(int n, const Rat& d) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("even n >= 2 required");
    if (n > 10) throw std::invalid_argument("weingarten tables capped at n = 10");
    WeingartenTable t;
    t.mode_ = WeingartenTable::Mode::Numeric;
    t.n_ = n;
    t.d_ = d;
    t.basis_ = all_pairings(n);
    for (size_t i = 0; i < t.basis_.size(); ++i) t.index_[t.basis_[i]] = static_cast<int>(i);
    if (n <= 8) {
        try {
            t.num_ = rational_inverse(gram_numeric(n, d));
        } catch (const std::domain_error&) {
            throw std::domain_error("Gram matrix singular at d = " + rat_to_string(d) +
                                    " (n = " + std::to_string(n) + ")");
        }
        return t;
    }
    // n = 10: the 945x945 inverse is assembled from the join-type classes.
    auto by_type = weingarten_symbolic_by_type(n);
    const size_t k = t.basis_.size();
    std::map<std::vector<int>, Rat> values;
    for (const auto& [type, rf] : by_type) {
        try {
            values[type] = rf.evaluate(d);
        } catch (const std::domain_error&) {
            throw std::domain_error("Gram matrix singular at d = " + rat_to_string(d) +
                                    " (n = " + std::to_string(n) + ")");
        }
    }
    t.num_.assign(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            t.num_[i][j] = values.at(join_type(t.basis_[i], t.basis_[j]));
            t.num_[j][i] = t.num_[i][j];
        }
    return t;
}

WeingartenTable weingarten_symbolic(int n, bool allow_n8) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("even n >= 2 required");
    if (n > 8 || (n == 8 && !allow_n8))
        throw std::invalid_argument("symbolic weingarten capped at n = 6 (n = 8 behind flag)");
    WeingartenTable t;
    t.mode_ = WeingartenTable::Mode::Symbolic;
    t.n_ = n;
    t.basis_ = all_pairings(n);
    for (size_t i = 0; i < t.basis_.size(); ++i) t.index_[t.basis_[i]] = static_cast<int>(i);
    const size_t k = t.basis_.size();
    if (n <= 6) {
        std::vector<std::vector<Poly>> id(k, std::vector<Poly>(k, Poly::zero()));
        for (size_t i = 0; i < k; ++i) id[i][i] = Poly::one();
        t.sym_ = bareiss_solve(gram_symbolic(n), std::move(id));
        return t;
    }
    auto by_type = weingarten_symbolic_by_type(n);
    t.sym_.assign(k, std::vector<RatFunc>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            t.sym_[i][j] = by_type.at(join_type(t.basis_[i], t.basis_[j]));
            t.sym_[j][i] = t.sym_[i][j];
        }
    return t;
}

int WeingartenTable::index_of(const Pairing& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("pairing not in table basis");
    return it->second;
}

const Rat& WeingartenTable::entry(const Pairing& p, const Pairing& q) const {
    if (mode_ != Mode::Numeric) throw std::logic_error("numeric entry from symbolic table");
    return num_[static_cast<size_t>(index_of(p))][static_cast<size_t>(index_of(q))];
}

const RatFunc& WeingartenTable::entry_symbolic(const Pairing& p, const Pairing& q) const {
    if (mode_ != Mode::Symbolic) throw std::logic_error("symbolic entry from numeric table");
    return sym_[static_cast<size_t>(index_of(p))][static_cast<size_t>(index_of(q))];
}

WeingartenProvider::WeingartenProvider(const Rat& d) : symbolic_(false), d_(d) {}
WeingartenProvider::WeingartenProvider(bool allow_n8) : symbolic_(true), allow_n8_(allow_n8) {}

const WeingartenTable& WeingartenProvider::table(int n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return *it->second;
    auto t = std::make_shared<WeingartenTable>(
        symbolic_ ? weingarten_symbolic(n, allow_n8_) : weingarten_numeric(n, d_));
    cache_[n] = t;
    return *t;
}

namespace {

// relabels p restricted to a sorted block onto [|block|]; requires closure
Pairing restrict_pairing(const Pairing& p, const std::vector<int>& block) {
    std::map<int, int> rank;
    for (size_t i = 0; i < block.size(); ++i) rank[block[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> pairs;
    for (int e : block) {
        int f = p.apply(e);
        if (!rank.count(f)) throw std::invalid_argument("pairing does not refine the partition");
        if (e < f) pairs.emplace_back(rank[e], rank[f]);
    }
    return Pairing::from_pairs(static_cast<int>(block.size()), pairs);
}

}  // namespace

RatFunc weingarten_multiplicative_symbolic(const SetPartition& U, const Pairing& p,
                                           const Pairing& q, WeingartenProvider& provider) {
    RatFunc acc = RatFunc::one();
    for (const auto& block : U.blocks()) {
        Pairing pb = restrict_pairing(p, block);
        Pairing qb = restrict_pairing(q, block);
        acc = acc * provider.table(static_cast<int>(block.size())).entry_symbolic(pb, qb);
    }
    return acc;
}

Rat weingarten_multiplicative_numeric(const SetPartition& U, const Pairing& p, const Pairing& q,
                                      WeingartenProvider& provider) {
    Rat acc(1);
    for (const auto& block : U.blocks()) {
        Pairing pb = restrict_pairing(p, block);
        Pairing qb = restrict_pairing(q, block);
        acc *= provider.table(static_cast<int>(block.size())).entry(pb, qb);
    }
    return acc;
}

}  // namespace orthowg
