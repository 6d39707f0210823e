#include <orthowg/ratfunc.hpp>

#include <climits>
#include <stdexcept>

namespace orthowg {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

RatFunc::RatFunc(const Rat& constant)
    : num_(Int(constant.get_num())), den_(Int(constant.get_den())) {}

RatFunc RatFunc::monomial(const Rat& c, int k) {
    if (k >= 0) return RatFunc(Poly::monomial(Int(c.get_num()), k), Poly(Int(c.get_den())));
    return RatFunc(Poly(Int(c.get_num())), Poly::monomial(Int(c.get_den()), -k));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0 || g.leading_coeff() != 1) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Int cn = num_.content(), cd = den_.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg > 1) {
        num_ = num_.divexact(Poly(cg));
        den_ = den_.divexact(Poly(cg));
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

int RatFunc::degree() const {
    if (is_zero()) return INT_MIN;
    return num_.degree() - den_.degree();
}

Rat RatFunc::leading_coefficient() const {
    if (is_zero()) return Rat(0);
    Rat r(num_.leading_coeff());
    r /= Rat(den_.leading_coeff());
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    if (is_zero()) return RatFunc();
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

Rat RatFunc::evaluate(const Rat& d) const {
    Rat den = den_.evaluate(d);
    if (den == 0) throw std::domain_error("rational function pole at d = " + rat_to_string(d));
    return num_.evaluate(d) / den;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    if (den_ == Poly::one()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    if (num_.nonzero_terms() > 1) n = "(" + n + ")";
    // a bare power of the variable needs no parentheses; anything else does
    if (den_.nonzero_terms() > 1 || (den_.degree() > 0 && den_.leading_coeff() != 1))
        d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace orthowg
