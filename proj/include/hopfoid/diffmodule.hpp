#pragma once

#include <string>
#include <vector>

#include "hopfoid/polymatrix.hpp"
#include "hopfoid/weyl.hpp"

namespace hopfoid {

// Differential module over (Q[x], d/dx) in coordinates: the free module
// A^m with D(v) = v' - 𝔐 v.  Horizontal vectors solve v' = 𝔐 v.
struct DiffModule {
    PolyMatrix matrix;

    DiffModule() : matrix(0, 0) {}
    explicit DiffModule(PolyMatrix m);
    static DiffModule trivial(int rank = 1) { return DiffModule(PolyMatrix(rank, rank)); }

    int rank() const { return matrix.rows(); }
    friend bool operator==(const DiffModule& a, const DiffModule& b) = default;
};

using ModVector = std::vector<UniPoly>;       // column
using ModFunctional = std::vector<UniPoly>;   // row

ModVector basis_vector(int rank, int i);      // e_i (0-based)
ModFunctional basis_functional(int rank, int i);
UniPoly pairing(const ModFunctional& f, const ModVector& v);

ModVector apply_D(const DiffModule& m, const ModVector& v);
// Right action of the (standard) Weyl algebra: v.(Y^n a) = D^n(v) * a.
ModVector act_weyl(const DiffModule& m, const ModVector& v, const WeylElement& u);

DiffModule tensor(const DiffModule& m, const DiffModule& n);   // Kronecker sum, lex basis
DiffModule dual(const DiffModule& m);                          // matrix -𝔐ᵀ
DiffModule hom_module(const DiffModule& m, const DiffModule& n);  // dual(m) ⊗ n
// Rank-1 module of the determinant line: matrix [tr 𝔐], so that the
// generator behaves like the antisymmetrized top tensor.
DiffModule wedge_top(const DiffModule& m);
DiffModule direct_sum(const DiffModule& m, const DiffModule& n);
DiffModule tensor_power(const DiffModule& m, int k);

// True iff the A-linear map with matrix l (rank(n) x rank(m)) commutes with
// the differentials: l' = 𝔑 l - l 𝔐.
bool is_morphism(const DiffModule& m, const DiffModule& n, const PolyMatrix& l);

std::vector<UniPoly> kron(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b);

}  // namespace hopfoid
