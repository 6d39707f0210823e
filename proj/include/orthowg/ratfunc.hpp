// Rational functions of the dimension symbol d with integer-coefficient
// numerator and denominator, kept in canonical form: gcd(num, den) = 1,
// joint content 1, and a positive leading coefficient in the denominator.
#pragma once

#include <orthowg/poly.hpp>
#include <orthowg/rational.hpp>

#include <string>

namespace orthowg {

class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(const Rat& constant);
    explicit RatFunc(long constant) : RatFunc(Rat(constant)) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rat(1)); }
    // c * d^k, k may be negative
    static RatFunc monomial(const Rat& c, int k);
    static RatFunc d() { return RatFunc(Poly{0, 1}, Poly::one()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // deg num - deg den; meaningless (INT_MIN) for the zero function.
    int degree() const;
    // leading coefficient of the d -> infinity expansion
    Rat leading_coefficient() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Exact evaluation; throws std::domain_error if d is a pole.
    Rat evaluate(const Rat& d) const;

    std::string to_string(const std::string& var = "d") const;

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace orthowg
