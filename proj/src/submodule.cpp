#include "hopfoid/submodule.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hopfoid {

namespace {

// Scale a polynomial column by a positive rational so its coefficients
// become coprime integers; keeps bignum growth in check across reductions.
void make_primitive(std::vector<UniPoly>& col) {
    mpz_class den(1), num(0);
    for (const auto& p : col)
        for (int i = 0; i <= p.degree(); ++i) {
            const Rational c = p.coeff(i);
            const mpq_class& q = c.raw();
            if (sgn(q) == 0) continue;
            mpz_class d = q.get_den();
            den = den / gcd(den, d) * d;
            num = gcd(num, mpz_class(q.get_num()));
        }
    if (num == 0) return;
    mpq_class scale(den, num);
    scale.canonicalize();
    Rational s{scale};
    for (auto& p : col) p = p * s;
}

}  // namespace

SubmoduleBasis::SubmoduleBasis(int ambient_rank) : m_(ambient_rank) {
    if (ambient_rank < 0) throw std::domain_error("SubmoduleBasis: negative rank");
}

int SubmoduleBasis::pivot_of(const std::vector<UniPoly>& v) {
    int best = -1, dmax = -1;
    for (std::size_t j = 0; j < v.size(); ++j) {
        int d = v[j].degree();
        if (d >= 0 && d >= dmax) {
            dmax = d;
            best = static_cast<int>(j);
        }
    }
    return best;
}

bool SubmoduleBasis::insert(std::vector<UniPoly> v) {
    if (static_cast<int>(v.size()) != m_) throw std::domain_error("SubmoduleBasis: length mismatch");
    make_primitive(v);
    bool changed = false;
    while (true) {
        int p = pivot_of(v);
        if (p < 0) return changed;  // v reduced to zero
        auto it = std::find_if(cols_.begin(), cols_.end(),
                               [&](const auto& c) { return pivot_of(c) == p; });
        if (it == cols_.end()) {
            cols_.push_back(std::move(v));
            return true;
        }
        std::vector<UniPoly>& b = *it;
        int d = v[static_cast<std::size_t>(p)].degree();
        int db = b[static_cast<std::size_t>(p)].degree();
        if (db > d) {
            // v carries a strictly smaller pivot degree: it replaces the
            // basis column, and the displaced column keeps reducing.  A
            // swap can only happen when the span grows.
            std::swap(v, b);
            changed = true;
        } else {
            Rational lam = v[static_cast<std::size_t>(p)].lead() /
                           b[static_cast<std::size_t>(p)].lead();
            UniPoly mono = UniPoly::monomial(lam, d - db);
            for (int i = 0; i < m_; ++i)
                v[static_cast<std::size_t>(i)] -= b[static_cast<std::size_t>(i)] * mono;
            make_primitive(v);
        }
    }
}

std::optional<std::vector<UniPoly>> SubmoduleBasis::membership(std::vector<UniPoly> v) const {
    if (static_cast<int>(v.size()) != m_) throw std::domain_error("SubmoduleBasis: length mismatch");
    std::vector<UniPoly> cof(cols_.size());
    while (true) {
        int p = pivot_of(v);
        if (p < 0) return cof;
        auto it = std::find_if(cols_.begin(), cols_.end(),
                               [&](const auto& c) { return pivot_of(c) == p; });
        if (it == cols_.end()) return std::nullopt;
        const std::vector<UniPoly>& b = *it;
        int d = v[static_cast<std::size_t>(p)].degree();
        int db = b[static_cast<std::size_t>(p)].degree();
        if (db > d) return std::nullopt;  // span elements never need a swap
        Rational lam = v[static_cast<std::size_t>(p)].lead() /
                       b[static_cast<std::size_t>(p)].lead();
        UniPoly mono = UniPoly::monomial(lam, d - db);
        for (int i = 0; i < m_; ++i)
            v[static_cast<std::size_t>(i)] -= b[static_cast<std::size_t>(i)] * mono;
        cof[static_cast<std::size_t>(it - cols_.begin())] += mono;
    }
}

SubmoduleBasis span_basis(int ambient_rank, const std::vector<std::vector<UniPoly>>& cols) {
    SubmoduleBasis b(ambient_rank);
    for (const auto& c : cols) b.insert(c);
    return b;
}

}  // namespace hopfoid
