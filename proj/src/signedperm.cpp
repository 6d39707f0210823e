#include <orthowg/signedperm.hpp>

#include <sstream>
#include <stdexcept>

namespace orthowg {

size_t SignedPermutation::index(int k) const {
    if (k == 0 || k > n_ || k < -n_) throw std::out_of_range("signed domain index");
    int a = k > 0 ? k : -k;
    return static_cast<size_t>(2 * (a - 1) + (k < 0 ? 1 : 0));
}

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation s(n);
    for (int k = 1; k <= n; ++k) {
        s.set(k, k);
        s.set(-k, -k);
    }
    return s;
}

SignedPermutation SignedPermutation::delta(int n) {
    SignedPermutation s(n);
    for (int k = 1; k <= n; ++k) {
        s.set(k, -k);
        s.set(-k, k);
    }
    return s;
}

SignedPermutation SignedPermutation::delta_epsilon(const std::vector<int>& eps) {
    const int n = static_cast<int>(eps.size());
    SignedPermutation s(n);
    for (int k = 1; k <= n; ++k) {
        int e = eps[static_cast<size_t>(k) - 1];
        if (e != 1 && e != -1) throw std::invalid_argument("epsilon entries must be +-1");
        s.set(k, e * k);
        s.set(-k, -e * k);
    }
    return s;
}

SignedPermutation SignedPermutation::embed(const Permutation& p) {
    SignedPermutation s(p.size());
    for (int k = 1; k <= p.size(); ++k) {
        s.set(k, p.apply(k));
        s.set(-k, -k);
    }
    return s;
}

SignedPermutation SignedPermutation::embed_negative(const Permutation& q) {
    SignedPermutation s(q.size());
    for (int k = 1; k <= q.size(); ++k) {
        s.set(k, k);
        s.set(-k, -q.apply(k));
    }
    return s;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation s(n_);
    for (int k = 1; k <= n_; ++k) {
        s.set(apply(k), k);
        s.set(apply(-k), -k);
    }
    return s;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("signed permutation size mismatch");
    SignedPermutation s(a.n());
    for (int k = 1; k <= a.n(); ++k) {
        s.set(k, a.apply(b.apply(k)));
        s.set(-k, a.apply(b.apply(-k)));
    }
    return s;
}

bool SignedPermutation::is_identity() const {
    for (int k = 1; k <= n_; ++k)
        if (apply(k) != k || apply(-k) != -k) return false;
    return true;
}

bool SignedPermutation::is_pairing() const {
    for (int k = 1; k <= n_; ++k) {
        if (apply(k) == k || apply(apply(k)) != k) return false;
        if (apply(-k) == -k || apply(apply(-k)) != -k) return false;
    }
    return true;
}

std::vector<std::vector<int>> SignedPermutation::cycles() const {
    std::vector<char> seen(static_cast<size_t>(2 * n_), 0);
    std::vector<std::vector<int>> out;
    // storage order (1,-1,2,-2,...) gives the element order 1 < -1 < 2 < ...
    for (size_t start = 0; start < seen.size(); ++start) {
        if (seen[start]) continue;
        int first = start % 2 == 0 ? static_cast<int>(start / 2) + 1
                                   : -(static_cast<int>(start / 2) + 1);
        std::vector<int> c;
        int j = first;
        while (!seen[index(j)]) {
            seen[index(j)] = 1;
            c.push_back(j);
            j = apply(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string SignedPermutation::to_string() const {
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

}  // namespace orthowg
