#include "hopfoid/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfoid {

WeylCtxPtr standard_weyl() {
    static const WeylCtxPtr ctx = std::make_shared<WeylContext>();
    return ctx;
}

WeylElement::WeylElement(WeylCtxPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::domain_error("WeylElement: null context");
}

WeylElement WeylElement::from_poly(WeylCtxPtr ctx, const UniPoly& a) {
    return term(std::move(ctx), 0, a);
}

WeylElement WeylElement::term(WeylCtxPtr ctx, int n, const UniPoly& a) {
    if (n < 0) throw std::domain_error("WeylElement: negative Y-degree");
    WeylElement u(std::move(ctx));
    if (!a.is_zero()) u.terms_[n] = a;
    return u;
}

int WeylElement::y_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

UniPoly WeylElement::coeff(int n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? UniPoly() : it->second;
}

void WeylElement::add_term(int n, const UniPoly& a) {
    if (a.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(n, a);
    if (!fresh) {
        it->second += a;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(ctx_);
    for (const auto& [n, a] : terms_) r.terms_[n] = -a;
    return r;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    WeylElement r = *this;
    for (const auto& [n, a] : o.terms_) r.add_term(n, a);
    return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + (-o); }

WeylElement WeylElement::operator*(const WeylElement& o) const {
    // (Y^n a)(Y^m b) = sum_k C(m,k) Y^{n+m-k} delta^k(a) b, from the
    // commutation rule a Y = Y a + delta(a).
    WeylElement r(ctx_);
    for (const auto& [n, a] : terms_)
        for (const auto& [m, b] : o.terms_) {
            UniPoly da = a;
            for (int k = 0; k <= m; ++k) {
                if (!da.is_zero())
                    r.add_term(n + m - k, da * b * Rational::binomial(m, k));
                da = ctx_->delta(da);
            }
        }
    return r;
}

WeylElement WeylElement::operator*(const UniPoly& a) const {
    WeylElement r(ctx_);
    for (const auto& [n, b] : terms_) r.add_term(n, b * a);
    return r;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
    return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
}

UniPoly WeylElement::counit() const { return coeff(0); }

std::vector<std::pair<WeylElement, WeylElement>> WeylElement::coproduct() const {
    std::vector<std::pair<WeylElement, WeylElement>> out;
    for (const auto& [n, a] : terms_)
        for (int k = 0; k <= n; ++k)
            out.emplace_back(term(ctx_, k, UniPoly(Rational::binomial(n, k))),
                             term(ctx_, n - k, a));
    return out;
}

std::vector<std::pair<WeylElement, WeylElement>> WeylElement::translation() const {
    if (y_degree() > 1)
        throw std::domain_error("WeylElement: translation is generator-level (Y-degree <= 1)");
    std::vector<std::pair<WeylElement, WeylElement>> out;
    WeylElement one = from_poly(ctx_, UniPoly(1));
    if (!is_zero()) out.emplace_back(one, *this);
    UniPoly b = coeff(1);
    if (!b.is_zero()) out.emplace_back(-y(ctx_), from_poly(ctx_, b));
    return out;
}

std::string WeylElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [n, a] = *it;
        if (!first) os << " + ";
        std::string cs = a.str();
        if (n == 0) {
            os << (cs.find(' ') != std::string::npos && terms_.size() > 1 ? "(" + cs + ")" : cs);
        } else {
            os << "Y";
            if (n > 1) os << "^" << n;
            if (!a.is_one()) {
                bool wrap = cs.find(' ') != std::string::npos || cs[0] == '-';
                os << "*" << (wrap ? "(" + cs + ")" : cs);
            }
        }
        first = false;
    }
    return os.str();
}

WeylElement parse_weyl(const std::string& src, const WeylCtxPtr& ctx) {
    static const VarTablePtr table = make_vars({{"Y", false}, {"x", false}});
    MultiPoly p = parse_multipoly(src, table);
    WeylElement u(ctx);
    for (const auto& [e, c] : p.terms()) {
        UniPoly a = UniPoly::monomial(c, e[1]);
        u = u + WeylElement::term(ctx, e[0], a);
    }
    return u;
}

}  // namespace hopfoid
