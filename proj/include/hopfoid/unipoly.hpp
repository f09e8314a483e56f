#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hopfoid/rational.hpp"

namespace hopfoid {

// Univariate polynomial over the rationals, dense ascending coefficients
// with no trailing zeros.  The zero polynomial has degree -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c);
    UniPoly(long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly monomial(const Rational& c, int deg);
    static UniPoly x() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const;
    Rational lead() const;  // throws on zero
    Rational constant_term() const { return coeff(0); }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& c) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly derivative() const;
    UniPoly pow(unsigned e) const;
    Rational eval(const Rational& at) const;
    UniPoly monic() const;  // throws on zero

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    // Exact division; throws if the remainder is nonzero.
    UniPoly divexact(const UniPoly& d) const;

    // Monic gcd, and the extended form g = u*a + w*b with g monic
    // (g = 0 when both inputs are zero).
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);
    struct Xgcd;
    static Xgcd xgcd(const UniPoly& a, const UniPoly& b);

    // Conventional descending-degree rendering, e.g. "x^3 - 2*x + 1/2".
    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

private:
    void trim();
    std::vector<Rational> c_;
};

struct UniPoly::Xgcd {
    UniPoly g, u, w;
};

}  // namespace hopfoid
