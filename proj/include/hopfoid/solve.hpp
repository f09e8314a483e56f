#pragma once

#include <vector>

#include "hopfoid/diffmodule.hpp"
#include "hopfoid/truncseries.hpp"

namespace hopfoid {

// Horizontal polynomial vectors D(v) = 0 up to a degree bound.
struct SolutionSpace {
    std::vector<ModVector> basis;  // Q-linearly independent
    int degree_bound;
    // True when some solution touches the top degree: the bound may be
    // cutting the space off.
    bool saturated;
};

int default_degree_bound(const DiffModule& m);  // 2*(max entry degree)*rank + rank + 5
SolutionSpace poly_solutions(const DiffModule& m, int degree_bound);

// p_0 = 1, p_{n+1} = x p_n + p_n'; returns p_0..p_k.
std::vector<UniPoly> recurrence_pn(int k);

// M_0 = I, M_{n+1} = M_n' + M_n*M; returns M_0..M_k.
std::vector<PolyMatrix> recurrence_Mn(const PolyMatrix& m, int k);

// F(Z) = sum M_n/n! Z^n truncated at the order; satisfies
// d/dZ F = iota(M) * F and F(0) = I, where iota is the Taylor shift
// a(x) -> a(x+Z) applied entrywise.
std::vector<std::vector<TruncSeries>> fundamental_series(const PolyMatrix& m, int order);

// Entrywise universal Taylor shift of a polynomial matrix.
std::vector<std::vector<TruncSeries>> iota_shift(const PolyMatrix& m, int order);

// Matrix helpers over truncated series.
std::vector<std::vector<TruncSeries>> series_mat_mul(const std::vector<std::vector<TruncSeries>>& a,
                                                     const std::vector<std::vector<TruncSeries>>& b);
TruncSeries series_mat_det(const std::vector<std::vector<TruncSeries>>& a);

}  // namespace hopfoid
