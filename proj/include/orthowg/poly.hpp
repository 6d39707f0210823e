// Dense univariate polynomials over the integers, in the dimension symbol d.
// Supports the exact operations needed for fraction-free elimination:
// ring arithmetic, exact division, content/primitive part and gcd.
#pragma once

#include <orthowg/rational.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace orthowg {

class Poly {
public:
    Poly() = default;
    explicit Poly(Int constant);
    // coefficients in ascending order: c[0] + c[1] d + c[2] d^2 + ...
    explicit Poly(std::vector<Int> ascending_coeffs);
    Poly(std::initializer_list<long> ascending_coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Int(1)); }
    // d^k with integer coefficient c
    static Poly monomial(Int c, int k);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int nonzero_terms() const;
    const Int& coeff(int k) const;
    const Int& leading_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // Division known to be exact; throws std::domain_error on a nonzero remainder.
    Poly divexact(const Poly& divisor) const;

    Rat evaluate(const Rat& d) const;

    // gcd of the absolute values of the coefficients (0 for the zero polynomial).
    Int content() const;
    Poly primitive_part() const;

    std::string to_string(const std::string& var = "d") const;

    static Poly gcd(const Poly& a, const Poly& b);

private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace orthowg
