#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hopfoid/dual.hpp"
#include "hopfoid/multipoly.hpp"

namespace hopfoid {

// The sub-algebroid of the finite dual generated by the matrix coefficients
// of one differential module: generators u_ij = [e_j^* @ e_i], the
// determinant grouplike and its inverse, cofactor classes, and the
// commutative presentation ring that surjects onto it.
class GaloisContext {
public:
    explicit GaloisContext(DiffModule m);

    const DiffModule& module() const { return m_; }
    int rank() const { return m_.rank(); }

    // u_ij (0-based): functional index j, vector index i.
    const DualClass& generator(int i, int j) const;
    // Antisymmetrized class over the m-th tensor power.
    const DualClass& det_class() const { return det_; }
    // Its rank-one reduction over wedge_top(M).
    const DualClass& det_minimized() const { return det_min_; }
    // The grouplike inverse: [1 @ 1] over wedge_top(dual(M)).
    const DualClass& det_inverse() const { return det_inv_; }

    // Cofactor class v_{ji} (delete row j, column i); rank <= 4 enforced.
    // Results are cached: the same classes feed every identity check.
    const DualClass& cofactor(int j, int i) const;

    // mul(det_inverse, v_ji) == antipode(u_ij).
    bool antipode_cofactor_check(int i, int j) const;
    // sum_k mul(u_ik, v_jk) == delta_ij * det.
    bool laplace_check(int i, int j) const;
    // det_class == the canonical rank-one class over wedge_top(M).
    bool grouplike_check() const;

private:
    DiffModule m_;
    std::vector<DualClass> gens_;  // row-major m*m
    DualClass det_;
    DualClass det_min_;
    DualClass det_inv_;
    mutable std::map<std::pair<int, int>, DualClass> cof_cache_;
};

DualClass galois_generator(const DiffModule& m, int i, int j);
DualClass galois_det(const DiffModule& m);
DualClass galois_det_inverse(const DiffModule& m);

// Commutative presentation (A@A)[X_ij, det_X^{-1}] with Hopf-algebroid
// structure maps; maps onto the Galois algebroid via phi_map.
class Presentation {
public:
    explicit Presentation(int m);

    int rank() const { return m_; }
    const VarTablePtr& vars() const { return vars_; }

    MultiPoly xs() const;  // source copy of the base coordinate
    MultiPoly xt() const;  // target copy
    MultiPoly X(int i, int j) const;  // 0-based
    MultiPoly dinv() const;
    MultiPoly det_poly() const;  // determinant of the symbol matrix

    MultiPoly parse(const std::string& src) const;

    // Eliminates negative Dinv powers (Dinv^-1 = det) and cancels
    // Dinv against exact det factors; the quotient-ring normal form.
    MultiPoly normalize(const MultiPoly& p) const;

    // Coproduct as formal tensor pairs; algebra map with
    // X_ij -> sum_k X_ik @ X_kj, Dinv -> Dinv @ Dinv, xs -> xs @ 1,
    // xt -> 1 @ xt.
    std::vector<std::pair<MultiPoly, MultiPoly>> coproduct(const MultiPoly& p) const;

    // xs, xt -> x; X_ij -> delta_ij; Dinv -> 1.
    UniPoly counit(const MultiPoly& p) const;

    // Swaps xs/xt, X_ij -> Dinv * cofactor_ji, Dinv -> det.
    MultiPoly antipode(const MultiPoly& p) const;

    // sum_k X_ik S(X_kj) == delta_ij for all i, j (after normalize).
    bool antipode_axiom() const;

private:
    int m_;
    VarTablePtr vars_;
    std::vector<MultiPoly> antipode_images_;
};

// The canonical surjection onto the Galois algebroid: xs -> s, xt -> t,
// X_ij -> u_ij, Dinv -> det_inverse.
DualClass phi_map(const GaloisContext& ctx, const MultiPoly& p);

// Determinant of a square matrix of polynomials by cofactor expansion.
MultiPoly mp_det(const std::vector<std::vector<MultiPoly>>& a);

}  // namespace hopfoid
