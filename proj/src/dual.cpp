#include "hopfoid/dual.hpp"

#include <stdexcept>

namespace hopfoid {

namespace {

// Incremental Gaussian elimination over Q; tracks the rank of a stream of
// sample-point evaluations of polynomial vectors.
class EvalRank {
public:
    bool add(std::vector<Rational> v) {
        for (auto& [lead, row] : rows_) {
            if (v[static_cast<std::size_t>(lead)].is_zero()) continue;
            Rational f = v[static_cast<std::size_t>(lead)] / row[static_cast<std::size_t>(lead)];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * row[i];
        }
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                rows_.emplace_back(static_cast<int>(i), std::move(v));
                return true;
            }
        return false;
    }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::pair<int, std::vector<Rational>>> rows_;
};

std::vector<Rational> eval_at(const ModVector& w, const Rational& x0) {
    std::vector<Rational> out;
    out.reserve(w.size());
    for (const auto& p : w) out.push_back(p.eval(x0));
    return out;
}

}  // namespace

DualClass::DualClass(DiffModule m, ModFunctional f, ModVector v)
    : module(std::move(m)), functional(std::move(f)), vector(std::move(v)) {
    if (static_cast<int>(functional.size()) != module.rank() ||
        static_cast<int>(vector.size()) != module.rank())
        throw std::domain_error("DualClass: functional/vector length must match module rank");
}

DualClass unit_class(const UniPoly& a, const UniPoly& b) {
    return DualClass(DiffModule::trivial(1), {a}, {b});
}

DualClass zero_class() { return unit_class(UniPoly(0), UniPoly(0)); }

UniPoly zeta_eval(const DualClass& c, const WeylElement& u) {
    if (!(*u.context() == *standard_weyl()))
        throw std::domain_error("zeta_eval: requires the standard commutation rule");
    UniPoly acc;
    ModVector dv = c.vector;
    int reached = 0;
    for (const auto& [n, a] : u.coeffs()) {
        while (reached < n) {
            dv = apply_D(c.module, dv);
            ++reached;
        }
        acc += a * pairing(c.functional, dv);
    }
    return acc;
}

UniPoly dual_counit(const DualClass& c) { return pairing(c.functional, c.vector); }

DualClass tensor_class(const DualClass& c, const DualClass& d) {
    DiffModule prod = tensor(d.module, c.module);
    return DualClass(std::move(prod), kron(d.functional, c.functional), kron(d.vector, c.vector));
}

DualClass dual_mul(const DualClass& c, const DualClass& d) { return minimize(tensor_class(c, d)); }

DualClass dual_add(const DualClass& c, const DualClass& d) { return normalize_sum({c, d}); }

DualClass sum_class(const std::vector<DualClass>& terms) {
    if (terms.empty()) return zero_class();
    DiffModule acc = terms[0].module;
    ModFunctional f = terms[0].functional;
    ModVector v = terms[0].vector;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        acc = direct_sum(acc, terms[i].module);
        f.insert(f.end(), terms[i].functional.begin(), terms[i].functional.end());
        v.insert(v.end(), terms[i].vector.begin(), terms[i].vector.end());
    }
    return DualClass(std::move(acc), std::move(f), std::move(v));
}

DualClass normalize_sum(const std::vector<DualClass>& terms) { return minimize(sum_class(terms)); }

DualClass bimodule_act(const DualClass& c, const UniPoly& left, const UniPoly& right) {
    ModFunctional f = c.functional;
    ModVector v = c.vector;
    for (auto& p : f) p = p * left;
    for (auto& p : v) p = p * right;
    return DualClass(c.module, std::move(f), std::move(v));
}

DualClass dual_negate(const DualClass& c) { return bimodule_act(c, UniPoly(-1), UniPoly(1)); }

std::vector<std::pair<DualClass, DualClass>> dual_coproduct(const DualClass& c) {
    const int r = c.module.rank();
    std::vector<std::pair<DualClass, DualClass>> out;
    out.reserve(static_cast<std::size_t>(r));
    for (int alpha = 0; alpha < r; ++alpha) {
        out.emplace_back(DualClass(c.module, c.functional, basis_vector(r, alpha)),
                         DualClass(c.module, basis_functional(r, alpha), c.vector));
    }
    return out;
}

DualClass dual_antipode(const DualClass& c) {
    return DualClass(dual(c.module), c.vector, c.functional);
}

std::vector<std::pair<ModVector, DualClass>> dual_coaction(const DiffModule& m, const ModVector& p) {
    const int r = m.rank();
    std::vector<std::pair<ModVector, DualClass>> out;
    out.reserve(static_cast<std::size_t>(r));
    for (int alpha = 0; alpha < r; ++alpha)
        out.emplace_back(basis_vector(r, alpha), DualClass(m, basis_functional(r, alpha), p));
    return out;
}

Saturation d_saturate(const DiffModule& m, const std::vector<ModVector>& seeds) {
    SubmoduleBasis basis(m.rank());
    for (const ModVector& s : seeds) basis.insert(s);
    int sweeps = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<std::vector<UniPoly>> snapshot = basis.columns();
        for (const auto& col : snapshot)
            if (basis.insert(apply_D(m, col))) grew = true;
        ++sweeps;
    }
    return Saturation{std::move(basis), sweeps};
}

namespace {

// Vector-side reduction: restrict the carrier to the D-closure of the
// class vector.
DualClass minimize_vec(const DualClass& c) {
    const int n = c.module.rank();
    // Fast path: when the evaluation of the derivative chain at a sample
    // point already has full scalar rank, the D-closure of the vector is a
    // full-rank submodule and the carrier cannot shrink.  Sample-point rank
    // never overestimates, so this direction is deterministic.
    {
        const Rational x0(7, 3);
        EvalRank er;
        ModVector w = c.vector;
        er.add(eval_at(w, x0));
        for (int k = 0; k < n + 1 && er.rank() < n; ++k) {
            w = apply_D(c.module, w);
            er.add(eval_at(w, x0));
        }
        if (er.rank() == n) return c;
    }

    Saturation sat = d_saturate(c.module, {c.vector});
    const int k = sat.basis.rank();
    if (k == 0) return zero_class();
    if (k == c.module.rank()) return c;

    const auto& cols = sat.basis.columns();
    PolyMatrix nmat(k, k);
    for (int j = 0; j < k; ++j) {
        ModVector db = apply_D(c.module, cols[static_cast<std::size_t>(j)]);
        for (auto& p : db) p = -p;  // M B - B' as coordinates of -D(b_j)
        auto cof = sat.basis.membership(db);
        if (!cof) throw std::logic_error("minimize: saturation not derivation-stable");
        for (int i = 0; i < k; ++i) nmat.at(i, j) = (*cof)[static_cast<std::size_t>(i)];
    }
    auto vec_cof = sat.basis.membership(c.vector);
    if (!vec_cof) throw std::logic_error("minimize: vector escaped its own saturation");
    ModFunctional f(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        f[static_cast<std::size_t>(j)] = pairing(c.functional, cols[static_cast<std::size_t>(j)]);
    return DualClass(DiffModule(std::move(nmat)), std::move(f), std::move(*vec_cof));
}

}  // namespace

DualClass minimize(const DualClass& c) {
    // Reduce the vector side, then the functional side through the antipode
    // swap; the quotient of a reachable realization stays reachable, so the
    // result is two-sided minimal.
    DualClass r = minimize_vec(c);
    return dual_antipode(minimize_vec(dual_antipode(r)));
}

EqualityResult dual_equal(const DualClass& c, const DualClass& d) {
    DiffModule p = direct_sum(c.module, d.module);
    ModVector v = c.vector;
    v.insert(v.end(), d.vector.begin(), d.vector.end());
    ModFunctional phi = c.functional;
    for (const UniPoly& q : d.functional) phi.push_back(-q);

    // The chain of Q(x)-spans of {D^k v} stabilizes within the ambient rank
    // n, and the pairing is Q(x)-bilinear, so phi annihilates the whole
    // D-closure if and only if <phi, D^k v> = 0 for every k <= n.
    const int n = p.rank();
    const Rational x0(7, 3);
    EvalRank er;
    ModVector w = v;
    er.add(eval_at(w, x0));
    bool equal = true;
    int steps = 0;
    for (int k = 0; k <= n; ++k) {
        ++steps;
        if (!pairing(phi, w).is_zero()) {
            equal = false;
            break;
        }
        if (k < n) {
            w = apply_D(p, w);
            er.add(eval_at(w, x0));
        }
    }
    return EqualityResult{equal, er.rank(), steps, n};
}

bool is_zero_class(const DualClass& c) { return dual_equal(c, zero_class()).equal; }

}  // namespace hopfoid
