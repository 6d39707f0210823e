#include <orthowg/poly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orthowg {

Poly::Poly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Int> ascending_coeffs) : c_(std::move(ascending_coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> ascending_coeffs) {
    for (long v : ascending_coeffs) c_.emplace_back(v);
    trim();
}

Poly Poly::monomial(Int c, int k) {
    if (c == 0) return Poly();
    std::vector<Int> v(static_cast<size_t>(k) + 1, Int(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::nonzero_terms() const {
    int count = 0;
    for (const Int& x : c_)
        if (x != 0) ++count;
    return count;
}

const Int& Poly::coeff(int k) const {
    static const Int zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

const Int& Poly::leading_coeff() const {
    static const Int zero(0);
    return c_.empty() ? zero : c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

Poly Poly::divexact(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return Poly();
    if (degree() < divisor.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Int> rem = c_;
    std::vector<Int> quo(c_.size() - divisor.c_.size() + 1, Int(0));
    const Int& lead = divisor.c_.back();
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        Int& top = rem[static_cast<size_t>(k) + divisor.c_.size() - 1];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw std::domain_error("inexact polynomial division");
        quo[static_cast<size_t>(k)] = q;
        for (size_t j = 0; j < divisor.c_.size(); ++j)
            rem[static_cast<size_t>(k) + j] -= q * divisor.c_[j];
    }
    for (const Int& x : rem)
        if (x != 0) throw std::domain_error("inexact polynomial division");
    return Poly(std::move(quo));
}

Rat Poly::evaluate(const Rat& d) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * d + Rat(*it);
    return acc;
}

Int Poly::content() const {
    Int g(0);
    for (const Int& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    Int g = content();
    if (g == 0 || g == 1) return *this;
    Poly r = *this;
    for (auto& x : r.c_) x /= g;
    return r;
}

namespace {

// prem(a, b): pseudo-remainder of lc(b)^(deg a - deg b + 1) * a by b.
Poly pseudo_rem(Poly a, const Poly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        Poly scaled = a * Poly(b.leading_coeff());
        scaled = scaled - Poly::monomial(a.leading_coeff(), shift) * b;
        a = std::move(scaled);
    }
    return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_zero()) {
        Poly g = b.primitive_part() * Poly(cg);
        if (g.leading_coeff() < 0) g = -g;
        return g;
    }
    if (b.is_zero()) {
        Poly g = a.primitive_part() * Poly(cg);
        if (g.leading_coeff() < 0) g = -g;
        return g;
    }
    Poly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    Poly g = u * Poly(cg == 0 ? Int(1) : cg);
    if (g.leading_coeff() < 0) g = -g;
    return g;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& a = coeff(k);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int mag = abs(a);
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace orthowg
