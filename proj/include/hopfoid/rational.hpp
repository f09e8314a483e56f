#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace hopfoid {

// Arbitrary-precision rational, always kept in lowest terms with a
// positive denominator.  Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);
    // Accepts "p", "-p", or "p/q".
    explicit Rational(const std::string& text);

    static Rational factorial(unsigned n);
    static Rational binomial(unsigned n, unsigned k);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const;
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational pow(long e) const;  // negative e requires nonzero value
    Rational abs() const;
    Rational inverse() const;

    const mpq_class& raw() const { return v_; }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;
    std::string numerator_str() const;
    std::string denominator_str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

}  // namespace hopfoid
