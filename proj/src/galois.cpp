#include "hopfoid/galois.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hopfoid/parse.hpp"

namespace hopfoid {

namespace {

int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

DualClass galois_generator(const DiffModule& m, int i, int j) {
    return DualClass(m, basis_functional(m.rank(), j), basis_vector(m.rank(), i));
}

DualClass galois_det(const DiffModule& m) {
    const int r = m.rank();
    DiffModule power = tensor_power(m, r);

    // Functional e_m^* @ ... @ e_1^*.
    ModFunctional fun = basis_functional(r, r - 1);
    for (int t = r - 2; t >= 0; --t) fun = kron(fun, basis_functional(r, t));

    // Vector sum_sigma sgn(sigma) e_{sigma(m)} @ ... @ e_{sigma(1)}.
    ModVector vec(static_cast<std::size_t>(power.rank()), UniPoly(0));
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sgn = permutation_sign(perm);
        ModVector term = basis_vector(r, perm[static_cast<std::size_t>(r - 1)]);
        for (int t = r - 2; t >= 0; --t)
            term = kron(term, basis_vector(r, perm[static_cast<std::size_t>(t)]));
        for (std::size_t a = 0; a < vec.size(); ++a)
            vec[a] += term[a] * Rational(sgn);
    } while (std::next_permutation(perm.begin(), perm.end()));

    return DualClass(std::move(power), std::move(fun), std::move(vec));
}

DualClass galois_det_inverse(const DiffModule& m) {
    return DualClass(wedge_top(dual(m)), {UniPoly(1)}, {UniPoly(1)});
}

GaloisContext::GaloisContext(DiffModule m)
    : m_(std::move(m)),
      det_(galois_det(m_)),
      det_min_(minimize(det_)),
      det_inv_(galois_det_inverse(m_)) {
    const int r = m_.rank();
    gens_.reserve(static_cast<std::size_t>(r * r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gens_.push_back(galois_generator(m_, i, j));
}

const DualClass& GaloisContext::generator(int i, int j) const {
    const int r = m_.rank();
    if (i < 0 || j < 0 || i >= r || j >= r)
        throw std::domain_error("GaloisContext::generator: index out of range");
    return gens_[static_cast<std::size_t>(i * r + j)];
}

const DualClass& GaloisContext::cofactor(int j, int i) const {
    const int r = m_.rank();
    if (r > 4) throw std::domain_error("cofactor classes are limited to rank <= 4");
    if (i < 0 || j < 0 || i >= r || j >= r)
        throw std::domain_error("GaloisContext::cofactor: index out of range");
    auto hit = cof_cache_.find({j, i});
    if (hit != cof_cache_.end()) return hit->second;

    DualClass result = zero_class();
    if (r == 1) {
        result = unit_class(UniPoly(1), UniPoly(1));  // empty product
    } else {
        std::vector<int> rows, cols;
        for (int a = 0; a < r; ++a) {
            if (a != j) rows.push_back(a);
            if (a != i) cols.push_back(a);
        }
        const int n = r - 1;

        std::vector<int> pos(static_cast<std::size_t>(n));  // cols[pos[k]] pairs with rows[k]
        std::iota(pos.begin(), pos.end(), 0);
        std::vector<DualClass> terms;
        do {
            DualClass acc = generator(rows[0], cols[static_cast<std::size_t>(pos[0])]);
            for (int k = 1; k < n; ++k)
                acc = dual_mul(acc, generator(rows[static_cast<std::size_t>(k)],
                                              cols[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])]));
            int sgn = permutation_sign(pos);
            if ((i + j) % 2 != 0) sgn = -sgn;
            terms.push_back(sgn == 1 ? acc : dual_negate(acc));
        } while (std::next_permutation(pos.begin(), pos.end()));

        result = normalize_sum(terms);
    }
    return cof_cache_.emplace(std::make_pair(j, i), std::move(result)).first->second;
}

bool GaloisContext::antipode_cofactor_check(int i, int j) const {
    DualClass lhs = tensor_class(det_inv_, cofactor(j, i));
    DualClass rhs = dual_antipode(generator(i, j));
    return dual_equal(lhs, rhs).equal;
}

bool GaloisContext::laplace_check(int i, int j) const {
    // Equality is representative-independent, so assemble the sum on the raw
    // tensor/direct-sum carriers and skip the reductions.
    std::vector<DualClass> terms;
    for (int k = 0; k < m_.rank(); ++k)
        terms.push_back(tensor_class(generator(i, k), cofactor(j, k)));
    DualClass lhs = sum_class(terms);
    if (i == j) return dual_equal(lhs, det_min_).equal;
    return is_zero_class(lhs);
}

bool GaloisContext::grouplike_check() const {
    DualClass canonical(wedge_top(m_), {UniPoly(1)}, {UniPoly(1)});
    return dual_equal(det_, canonical).equal;
}

MultiPoly mp_det(const std::vector<std::vector<MultiPoly>>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw std::domain_error("mp_det: empty matrix");
    if (n == 1) return a[0][0];
    MultiPoly acc(a[0][0].vars());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = a[0][j] * mp_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Presentation::Presentation(int m) : m_(m) {
    if (m < 1) throw std::domain_error("Presentation: rank must be >= 1");
    std::vector<std::pair<std::string, bool>> spec;
    spec.emplace_back("xs", false);
    spec.emplace_back("xt", false);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            spec.emplace_back("X" + std::to_string(i) + std::to_string(j), false);
    spec.emplace_back("Dinv", true);
    vars_ = make_vars(std::move(spec));

    // S(X_ij) = Dinv * cofactor_ji of the symbol matrix; S swaps xs and xt.
    antipode_images_.reserve(static_cast<std::size_t>(vars_->size()));
    antipode_images_.push_back(xt());
    antipode_images_.push_back(xs());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<std::vector<MultiPoly>> minor;
            for (int a = 0; a < m; ++a) {
                if (a == j) continue;
                std::vector<MultiPoly> row;
                for (int b = 0; b < m; ++b)
                    if (b != i) row.push_back(X(a, b));
                minor.push_back(std::move(row));
            }
            MultiPoly cof = minor.empty() ? MultiPoly::constant(vars_, Rational(1)) : mp_det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            antipode_images_.push_back(dinv() * cof);
        }
    antipode_images_.push_back(det_poly());
}

MultiPoly Presentation::xs() const { return MultiPoly::var(vars_, 0); }
MultiPoly Presentation::xt() const { return MultiPoly::var(vars_, 1); }

MultiPoly Presentation::X(int i, int j) const {
    if (i < 0 || j < 0 || i >= m_ || j >= m_)
        throw std::domain_error("Presentation::X: index out of range");
    return MultiPoly::var(vars_, 2 + i * m_ + j);
}

MultiPoly Presentation::dinv() const { return MultiPoly::var(vars_, 2 + m_ * m_); }

MultiPoly Presentation::det_poly() const {
    std::vector<std::vector<MultiPoly>> x(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) x[static_cast<std::size_t>(i)].push_back(X(i, j));
    return mp_det(x);
}

MultiPoly Presentation::parse(const std::string& src) const { return parse_multipoly(src, vars_); }

MultiPoly Presentation::normalize(const MultiPoly& p) const {
    const int dv = 2 + m_ * m_;
    MultiPoly det = det_poly();
    std::map<int, MultiPoly> parts = p.decompose_by(dv);

    // Dinv^-1 is det in the quotient: clear negative powers first.
    MultiPoly zero(vars_);
    for (auto& [k, q] : parts) {
        if (k >= 0) continue;
        MultiPoly lifted = q;
        for (int t = 0; t < -k; ++t) lifted = lifted * det;
        auto it0 = parts.find(0);
        if (it0 == parts.end())
            parts.emplace(0, lifted);
        else
            it0->second = it0->second + lifted;
        q = zero;
    }
    // Cancel Dinv against exact det factors, top power first.
    int top = 0;
    for (const auto& [k, q] : parts) top = std::max(top, k);
    for (int k = top; k >= 1; --k) {
        auto it = parts.find(k);
        if (it == parts.end() || it->second.is_zero()) continue;
        if (auto q = it->second.divide_exact(det)) {
            auto lower = parts.find(k - 1);
            if (lower == parts.end())
                parts.emplace(k - 1, *q);
            else
                lower->second = lower->second + *q;
            it->second = zero;
        }
    }

    MultiPoly out(vars_);
    for (const auto& [k, q] : parts)
        if (!q.is_zero()) out = out + q * MultiPoly::var(vars_, dv, k);
    return out;
}

std::vector<std::pair<MultiPoly, MultiPoly>> Presentation::coproduct(const MultiPoly& p) const {
    using Exps = MultiPoly::Exps;
    const int nv = vars_->size();
    const int dv = 2 + m_ * m_;

    // Tensor legs of each generator's coproduct.
    std::vector<std::vector<std::pair<MultiPoly, MultiPoly>>> leg(static_cast<std::size_t>(nv));
    MultiPoly one = MultiPoly::constant(vars_, Rational(1));
    leg[0] = {{xs(), one}};
    leg[1] = {{one, xt()}};
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) {
            auto& l = leg[static_cast<std::size_t>(2 + i * m_ + j)];
            for (int k = 0; k < m_; ++k) l.emplace_back(X(i, k), X(k, j));
        }

    std::map<std::pair<Exps, Exps>, Rational> acc;
    for (const auto& [exps, coeff] : p.terms()) {
        std::map<std::pair<Exps, Exps>, Rational> cur;
        cur[{Exps(static_cast<std::size_t>(nv), 0), Exps(static_cast<std::size_t>(nv), 0)}] = coeff;
        for (int v = 0; v < nv; ++v) {
            int e = exps[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            if (v == dv) {
                // Dinv^e @ Dinv^e, valid for negative e as well.
                std::map<std::pair<Exps, Exps>, Rational> next;
                for (const auto& [key, c] : cur) {
                    auto k2 = key;
                    k2.first[static_cast<std::size_t>(dv)] += e;
                    k2.second[static_cast<std::size_t>(dv)] += e;
                    next[k2] += c;
                }
                cur = std::move(next);
                continue;
            }
            if (e < 0) throw std::domain_error("Presentation::coproduct: negative exponent");
            for (int t = 0; t < e; ++t) {
                std::map<std::pair<Exps, Exps>, Rational> next;
                for (const auto& [key, c] : cur) {
                    for (const auto& [lf, rf] : leg[static_cast<std::size_t>(v)]) {
                        // Each leg factor is a single monomial by construction.
                        auto k2 = key;
                        const auto& lt = *lf.terms().begin();
                        const auto& rt = *rf.terms().begin();
                        for (int w = 0; w < nv; ++w) {
                            k2.first[static_cast<std::size_t>(w)] += lt.first[static_cast<std::size_t>(w)];
                            k2.second[static_cast<std::size_t>(w)] += rt.first[static_cast<std::size_t>(w)];
                        }
                        Rational c2 = c * lt.second * rt.second;
                        auto it = next.find(k2);
                        if (it == next.end())
                            next.emplace(std::move(k2), c2);
                        else
                            it->second += c2;
                    }
                }
                cur = std::move(next);
            }
        }
        for (const auto& [key, c] : cur) acc[key] += c;
    }

    std::vector<std::pair<MultiPoly, MultiPoly>> out;
    for (const auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        out.emplace_back(MultiPoly::monomial(vars_, c, key.first),
                         MultiPoly::monomial(vars_, Rational(1), key.second));
    }
    return out;
}

UniPoly Presentation::counit(const MultiPoly& p) const {
    VarTablePtr base = make_vars({{"x", false}});
    MultiPoly x = MultiPoly::var(base, 0);
    MultiPoly one = MultiPoly::constant(base, Rational(1));
    MultiPoly zero(base);
    std::vector<MultiPoly> images;
    images.push_back(x);
    images.push_back(x);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) images.push_back(i == j ? one : zero);
    images.push_back(one);
    return p.substitute(images).to_unipoly();
}

MultiPoly Presentation::antipode(const MultiPoly& p) const { return p.substitute(antipode_images_); }

bool Presentation::antipode_axiom() const {
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) {
            MultiPoly acc(vars_);
            for (int k = 0; k < m_; ++k) acc = acc + X(i, k) * antipode(X(k, j));
            MultiPoly expected =
                i == j ? MultiPoly::constant(vars_, Rational(1)) : MultiPoly(vars_);
            if (!(normalize(acc) == expected)) return false;
        }
    return true;
}

DualClass phi_map(const GaloisContext& ctx, const MultiPoly& p) {
    const int m = ctx.rank();
    const auto& vars = p.vars();
    if (vars->size() != 2 + m * m + 1)
        throw std::domain_error("phi_map: presentation table does not match module rank");
    const int dv = 2 + m * m;

    std::vector<DualClass> terms;
    for (const auto& [exps, coeff] : p.terms()) {
        UniPoly xs_part = UniPoly::monomial(coeff, exps[0]);
        UniPoly xt_part = UniPoly::monomial(Rational(1), exps[1]);
        DualClass acc = unit_class(xs_part, xt_part);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                int e = exps[static_cast<std::size_t>(2 + i * m + j)];
                if (e < 0) throw std::domain_error("phi_map: matrix generators are not invertible");
                for (int t = 0; t < e; ++t) acc = dual_mul(acc, ctx.generator(i, j));
            }
        int f = exps[static_cast<std::size_t>(dv)];
        for (int t = 0; t < f; ++t) acc = dual_mul(acc, ctx.det_inverse());
        for (int t = 0; t < -f; ++t) acc = dual_mul(acc, ctx.det_minimized());
        terms.push_back(std::move(acc));
    }
    return normalize_sum(terms);
}

}  // namespace hopfoid
