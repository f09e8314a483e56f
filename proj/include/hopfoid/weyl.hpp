#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfoid/parse.hpp"
#include "hopfoid/unipoly.hpp"

namespace hopfoid {

// Commutation data for A[Y, delta]: a*Y = Y*a + delta(a) with
// delta(a) = c(x)*a'.  The default c = 1 is the ring of differential
// operators on the affine line; c = x gives the Euler-operator variant.
class WeylContext {
public:
    WeylContext() : c_(UniPoly(1)) {}
    explicit WeylContext(UniPoly delta_of_x) : c_(std::move(delta_of_x)) {}
    UniPoly delta(const UniPoly& a) const { return a.derivative() * c_; }
    const UniPoly& delta_of_x() const { return c_; }
    friend bool operator==(const WeylContext& a, const WeylContext& b) = default;

private:
    UniPoly c_;
};

using WeylCtxPtr = std::shared_ptr<const WeylContext>;

WeylCtxPtr standard_weyl();

// Element of the Weyl algebra in right normal form: sum of Y^n * a_n(x)
// with the polynomial coefficients written on the right.
class WeylElement {
public:
    explicit WeylElement(WeylCtxPtr ctx);
    static WeylElement from_poly(WeylCtxPtr ctx, const UniPoly& a);
    static WeylElement term(WeylCtxPtr ctx, int n, const UniPoly& a);  // Y^n * a
    static WeylElement y(WeylCtxPtr ctx) { return term(std::move(ctx), 1, UniPoly(1)); }

    const WeylCtxPtr& context() const { return ctx_; }
    const std::map<int, UniPoly>& coeffs() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int y_degree() const;  // -1 for zero
    UniPoly coeff(int n) const;

    WeylElement operator-() const;
    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement operator*(const UniPoly& a) const;  // right multiplication
    friend bool operator==(const WeylElement& a, const WeylElement& b);

    // Counit of the coring: the degree-0 coefficient.
    UniPoly counit() const;
    // Coproduct as a formal sum of tensor pairs; for a term Y^n * a the
    // image is sum_k C(n,k) Y^k (x) Y^{n-k} * a (coefficient on the right
    // factor's right side).
    std::vector<std::pair<WeylElement, WeylElement>> coproduct() const;
    // Translation map on generator-level elements a + Y*b:
    // 1 (x) (a + Y*b) - Y (x) b.  Errors on Y-degree >= 2.
    std::vector<std::pair<WeylElement, WeylElement>> translation() const;

    std::string str() const;

private:
    void add_term(int n, const UniPoly& a);
    WeylCtxPtr ctx_;
    std::map<int, UniPoly> terms_;
};

// Commutative reading of the input syntax: each monomial Y^a x^b c denotes
// the normal-form term Y^a * (c x^b).
WeylElement parse_weyl(const std::string& src, const WeylCtxPtr& ctx);

}  // namespace hopfoid
