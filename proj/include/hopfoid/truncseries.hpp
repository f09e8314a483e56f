#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hopfoid/unipoly.hpp"

namespace hopfoid {

// Raised when a computation would need more series terms than are carried.
struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Truncated power series in Z over Q[x]: exactly order+1 stored
// coefficients c_0..c_order, representing sum c_n Z^n + O(Z^{order+1}).
class TruncSeries {
public:
    // Zero series of the given order; order < 0 is rejected.
    explicit TruncSeries(int order);
    TruncSeries(int order, std::vector<UniPoly> coeffs);  // pads/truncates to order+1
    static TruncSeries constant(int order, const UniPoly& a);

    // Default truncation order: HOPFOID_TRUNC when set, else 20.
    static int default_order();

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const UniPoly& coeff(int n) const;  // throws TruncationError past the order
    bool is_zero() const;

    TruncSeries operator-() const;
    TruncSeries operator+(const TruncSeries& o) const;  // truncates to min order
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const UniPoly& a) const;
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    TruncSeries derivative_z() const;  // d/dZ, order drops by one

    // Rendering in ascending powers of Z, e.g. "1 + x*Z + (x^2 + 1)*Z^2".
    std::string str() const;

private:
    std::vector<UniPoly> c_;
};

// Universal Taylor expansion sum delta^n(a)/n! Z^n for the derivation
// delta = c(x) d/dx given by its value c on x.
TruncSeries taylor(const UniPoly& a, const UniPoly& delta_of_x, int order);

}  // namespace hopfoid
