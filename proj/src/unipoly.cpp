#include "hopfoid/unipoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hopfoid {

UniPoly::UniPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int deg) {
    if (deg < 0) throw std::domain_error("UniPoly: negative degree");
    UniPoly p;
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, Rational(0));
        p.c_[deg] = c;
    }
    return p;
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

Rational UniPoly::lead() const {
    if (is_zero()) throw std::domain_error("UniPoly: leading coefficient of zero");
    return c_.back();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly UniPoly::operator*(const Rational& c) const {
    UniPoly r = *this;
    for (auto& x : r.c_) x *= c;
    r.trim();
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc(Rational(1)), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational UniPoly::eval(const Rational& at) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * at + c_[i];
    return r;
}

UniPoly UniPoly::monic() const { return *this * lead().inverse(); }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: division by zero");
    UniPoly q, r = *this;
    Rational dl = d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rational c = r.lead() / dl;
        int k = r.degree() - d.degree();
        UniPoly m = monomial(c, k);
        q += m;
        r -= m * d;
    }
    return {q, r};
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
    return q;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

UniPoly::Xgcd UniPoly::xgcd(const UniPoly& a, const UniPoly& b) {
    // Invariants: r0 = u0*a + w0*b, r1 = u1*a + w1*b.
    UniPoly r0 = a, r1 = b;
    UniPoly u0(Rational(1)), u1, w0, w1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UniPoly u2 = u0 - q * u1, w2 = w0 - q * w1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        w0 = w1; w1 = w2;
    }
    if (r0.is_zero()) return {UniPoly(), UniPoly(), UniPoly()};
    Rational inv = r0.lead().inverse();
    return {r0 * inv, u0 * inv, w0 * inv};
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = c_[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

}  // namespace hopfoid
