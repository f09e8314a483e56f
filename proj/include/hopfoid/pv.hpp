#pragma once

#include <string>
#include <vector>

#include "hopfoid/diffmodule.hpp"
#include "hopfoid/galois.hpp"
#include "hopfoid/multipoly.hpp"
#include "hopfoid/truncseries.hpp"

namespace hopfoid {

// Differential Laurent-polynomial model A[X_ij, det_X^{-1}] with the
// derivation d(X) = M X extended by Leibniz.
class PVRing {
public:
    explicit PVRing(DiffModule m);

    const DiffModule& module() const { return m_; }
    int rank() const { return m_.rank(); }
    const VarTablePtr& vars() const { return vars_; }

    MultiPoly x() const;
    MultiPoly X(int i, int j) const;  // 0-based
    MultiPoly dinv() const;
    MultiPoly det_poly() const;

    MultiPoly lift(const UniPoly& a) const;  // a(x) as a ring element
    MultiPoly parse(const std::string& src) const;

    // d(x) = 1, d(X_ij) = sum_k M_ik X_kj, d(Dinv) = -tr(M) Dinv.
    MultiPoly derive(const MultiPoly& q) const;

private:
    DiffModule m_;
    VarTablePtr vars_;
    std::vector<MultiPoly> delta_images_;
};

using FundamentalMatrix = std::vector<std::vector<TruncSeries>>;

// Truncated fundamental solution matrix F(Z) with F(0) = I and
// d_Z F = iota(M) F.
FundamentalMatrix pv_fundamental(const DiffModule& m, int order);

// Structured certification report for the isotropy quotient by <s - t>:
// what the generators f_ij = [e_i^* @ e_j] provably collapse to.
struct PVReport {
    int rank = 0;
    bool rank_one = false;       // Laurent-algebra case
    bool az_pattern = false;     // strictly upper-triangular nilpotent 2x2
    bool certified_trivial = false;
    std::vector<std::string> lines;
};

PVReport pv_report(const DiffModule& m);

}  // namespace hopfoid
