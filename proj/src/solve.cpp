#include "hopfoid/solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopfoid/linalg.hpp"

namespace hopfoid {

int default_degree_bound(const DiffModule& m) {
    int maxdeg = 0;
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < m.rank(); ++j)
            maxdeg = std::max(maxdeg, std::max(0, m.matrix.at(i, j).degree()));
    return 2 * maxdeg * m.rank() + m.rank() + 5;
}

SolutionSpace poly_solutions(const DiffModule& m, int degree_bound) {
    if (degree_bound < 0) throw std::domain_error("poly_solutions: negative degree bound");
    const int r = m.rank();
    const int nvars = r * (degree_bound + 1);

    // Unknown v_i = sum_d c_{i,d} x^d.  D(v) = v' - M v must vanish; each
    // entry of D(v) is a polynomial whose coefficients are linear in c.
    int maxdeg = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            maxdeg = std::max(maxdeg, m.matrix.at(i, j).degree());
    const int outdeg = degree_bound + std::max(maxdeg, 0);  // degree of M v; v' stays lower

    QMatrix sys;
    for (int i = 0; i < r; ++i) {
        for (int d = 0; d <= outdeg; ++d) {
            QVec row(static_cast<std::size_t>(nvars), Rational(0));
            // Contribution of v_i': coefficient of x^d is (d+1) c_{i,d+1}.
            if (d + 1 <= degree_bound)
                row[static_cast<std::size_t>(i * (degree_bound + 1) + d + 1)] += Rational(d + 1);
            // Contribution of -(M v)_i = -sum_j M_ij v_j.
            for (int j = 0; j < r; ++j) {
                const UniPoly& a = m.matrix.at(i, j);
                for (int e = 0; e <= a.degree(); ++e) {
                    const int vd = d - e;  // x^e * x^vd = x^d
                    if (vd >= 0 && vd <= degree_bound)
                        row[static_cast<std::size_t>(j * (degree_bound + 1) + vd)] -= a.coeff(e);
                }
            }
            sys.push_back(std::move(row));
        }
    }

    std::vector<QVec> null = nullspace(sys, nvars);
    SolutionSpace out;
    out.degree_bound = degree_bound;
    out.saturated = false;
    for (const QVec& c : null) {
        ModVector v;
        int topdeg = -1;
        for (int i = 0; i < r; ++i) {
            std::vector<Rational> coeffs(c.begin() + i * (degree_bound + 1),
                                         c.begin() + (i + 1) * (degree_bound + 1));
            UniPoly p(coeffs);
            topdeg = std::max(topdeg, p.degree());
            v.push_back(std::move(p));
        }
        if (topdeg == degree_bound) out.saturated = true;
        out.basis.push_back(std::move(v));
    }
    return out;
}

std::vector<UniPoly> recurrence_pn(int k) {
    std::vector<UniPoly> out;
    out.push_back(UniPoly(Rational(1)));
    for (int n = 0; n < k; ++n) out.push_back(UniPoly::x() * out.back() + out.back().derivative());
    return out;
}

std::vector<PolyMatrix> recurrence_Mn(const PolyMatrix& m, int k) {
    if (m.rows() != m.cols()) throw std::domain_error("recurrence_Mn: matrix must be square");
    std::vector<PolyMatrix> out;
    out.push_back(PolyMatrix::identity(m.rows()));
    for (int n = 0; n < k; ++n) out.push_back(out.back().derivative() + out.back() * m);
    return out;
}

std::vector<std::vector<TruncSeries>> fundamental_series(const PolyMatrix& m, int order) {
    const int r = m.rows();
    std::vector<PolyMatrix> mn = recurrence_Mn(m, order);
    std::vector<std::vector<TruncSeries>> out(
        static_cast<std::size_t>(r), std::vector<TruncSeries>(static_cast<std::size_t>(r), TruncSeries(order)));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            std::vector<UniPoly> coeffs;
            Rational fact(1);
            for (int n = 0; n <= order; ++n) {
                if (n > 0) fact = fact * Rational(n);
                coeffs.push_back(mn[static_cast<std::size_t>(n)].at(i, j) * fact.inverse());
            }
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = TruncSeries(order, coeffs);
        }
    }
    return out;
}

std::vector<std::vector<TruncSeries>> iota_shift(const PolyMatrix& m, int order) {
    std::vector<std::vector<TruncSeries>> out(
        static_cast<std::size_t>(m.rows()),
        std::vector<TruncSeries>(static_cast<std::size_t>(m.cols()), TruncSeries(order)));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                taylor(m.at(i, j), UniPoly(Rational(1)), order);
    return out;
}

std::vector<std::vector<TruncSeries>> series_mat_mul(const std::vector<std::vector<TruncSeries>>& a,
                                                     const std::vector<std::vector<TruncSeries>>& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw std::domain_error("series_mat_mul: shape mismatch");
    std::size_t rows = a.size(), mid = b.size(), cols = b[0].size();
    int order = a[0][0].order();
    std::vector<std::vector<TruncSeries>> out(rows, std::vector<TruncSeries>(cols, TruncSeries(order)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            TruncSeries acc(order);
            for (std::size_t k = 0; k < mid; ++k) acc = acc + a[i][k] * b[k][j];
            out[i][j] = acc;
        }
    return out;
}

TruncSeries series_mat_det(const std::vector<std::vector<TruncSeries>>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw std::domain_error("series_mat_det: empty matrix");
    if (n == 1) return a[0][0];
    int order = a[0][0].order();
    TruncSeries acc(order);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<TruncSeries>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<TruncSeries> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        TruncSeries term = a[0][j] * series_mat_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace hopfoid
