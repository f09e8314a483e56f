#include "hopfoid/truncseries.hpp"

#include <cstdlib>
#include <sstream>

namespace hopfoid {

TruncSeries::TruncSeries(int order) {
    if (order < 0) throw std::domain_error("TruncSeries: negative order");
    c_.assign(order + 1, UniPoly());
}

TruncSeries::TruncSeries(int order, std::vector<UniPoly> coeffs) : TruncSeries(order) {
    for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

TruncSeries TruncSeries::constant(int order, const UniPoly& a) {
    TruncSeries s(order);
    s.c_[0] = a;
    return s;
}

int TruncSeries::default_order() {
    if (const char* env = std::getenv("HOPFOID_TRUNC")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 20;
}

const UniPoly& TruncSeries::coeff(int n) const {
    if (n < 0 || n > order())
        throw TruncationError("TruncSeries: coefficient of Z^" + std::to_string(n) +
                              " requested; needs order >= " + std::to_string(n) +
                              ", have " + std::to_string(order()));
    return c_[n];
}

bool TruncSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    int n = std::min(order(), o.order());
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    int n = std::min(order(), o.order());
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j <= o.order(); ++j)
            if (i <= order()) r.c_[i + j] += c_[i] * o.c_[j];
    return r;
}

TruncSeries TruncSeries::operator*(const UniPoly& a) const {
    TruncSeries r = *this;
    for (auto& p : r.c_) p *= a;
    return r;
}

TruncSeries TruncSeries::derivative_z() const {
    if (order() == 0)
        throw TruncationError("TruncSeries: d/dZ of an order-0 series; needs order >= 1");
    TruncSeries r(order() - 1);
    for (int i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * Rational(i);
    return r;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
        if (c_[n].is_zero()) continue;
        std::string cs = c_[n].str();
        bool needs_parens = cs.find(' ') != std::string::npos || (n > 0 && cs[0] == '-');
        if (!first) os << " + ";
        if (n == 0) {
            os << cs;
        } else {
            if (c_[n].is_one()) {
                // bare power
            } else if (needs_parens) {
                os << "(" << cs << ")*";
            } else {
                os << cs << "*";
            }
            os << "Z";
            if (n > 1) os << "^" << n;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

TruncSeries taylor(const UniPoly& a, const UniPoly& delta_of_x, int order) {
    TruncSeries s(order);
    UniPoly cur = a;
    Rational nfact(1);
    s = TruncSeries::constant(order, a);
    std::vector<UniPoly> coeffs(order + 1);
    coeffs[0] = a;
    for (int n = 1; n <= order; ++n) {
        cur = cur.derivative() * delta_of_x;  // delta(p) = c(x) p'
        nfact *= Rational(n);
        coeffs[n] = cur * nfact.inverse();
    }
    return TruncSeries(order, std::move(coeffs));
}

}  // namespace hopfoid
