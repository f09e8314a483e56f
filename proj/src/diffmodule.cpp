#include "hopfoid/diffmodule.hpp"

#include <stdexcept>

namespace hopfoid {

DiffModule::DiffModule(PolyMatrix m) : matrix(std::move(m)) {
    if (matrix.rows() != matrix.cols()) throw std::domain_error("DiffModule: non-square matrix");
}

ModVector basis_vector(int rank, int i) {
    ModVector v(rank);
    v[i] = UniPoly(1);
    return v;
}

ModFunctional basis_functional(int rank, int i) { return basis_vector(rank, i); }

UniPoly pairing(const ModFunctional& f, const ModVector& v) {
    if (f.size() != v.size()) throw std::domain_error("pairing: length mismatch");
    UniPoly r;
    for (size_t i = 0; i < f.size(); ++i) r += f[i] * v[i];
    return r;
}

ModVector apply_D(const DiffModule& m, const ModVector& v) {
    if (static_cast<int>(v.size()) != m.rank()) throw std::domain_error("apply_D: rank mismatch");
    ModVector r(v.size());
    ModVector mv = m.matrix.apply(v);
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].derivative() - mv[i];
    return r;
}

ModVector act_weyl(const DiffModule& m, const ModVector& v, const WeylElement& u) {
    if (!(u.context()->delta_of_x() == UniPoly(1)))
        throw std::domain_error("act_weyl: module action requires the standard commutation rule");
    ModVector out(m.rank());
    ModVector dv = v;
    int reached = 0;
    for (const auto& [n, a] : u.coeffs()) {
        while (reached < n) {
            dv = apply_D(m, dv);
            ++reached;
        }
        for (int i = 0; i < m.rank(); ++i) out[i] += dv[i] * a;
    }
    return out;
}

DiffModule tensor(const DiffModule& m, const DiffModule& n) {
    return DiffModule(PolyMatrix::kronecker_sum(m.matrix, n.matrix));
}

DiffModule dual(const DiffModule& m) { return DiffModule(-m.matrix.transpose()); }

DiffModule hom_module(const DiffModule& m, const DiffModule& n) { return tensor(dual(m), n); }

DiffModule wedge_top(const DiffModule& m) {
    PolyMatrix t(1, 1);
    t.at(0, 0) = m.matrix.trace();
    return DiffModule(t);
}

DiffModule direct_sum(const DiffModule& m, const DiffModule& n) {
    return DiffModule(PolyMatrix::direct_sum(m.matrix, n.matrix));
}

DiffModule tensor_power(const DiffModule& m, int k) {
    if (k < 1) throw std::domain_error("tensor_power: k >= 1 required");
    DiffModule r = m;
    for (int i = 1; i < k; ++i) r = tensor(r, m);
    return r;
}

bool is_morphism(const DiffModule& m, const DiffModule& n, const PolyMatrix& l) {
    if (l.rows() != n.rank() || l.cols() != m.rank())
        throw std::domain_error("is_morphism: shape mismatch");
    return l.derivative() == n.matrix * l - l * m.matrix;
}

std::vector<UniPoly> kron(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b) {
    std::vector<UniPoly> r(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
    return r;
}

}  // namespace hopfoid
