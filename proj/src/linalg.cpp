#include "hopfoid/linalg.hpp"

namespace hopfoid {

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rational inv = m[r][c].inverse();
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    QMatrix aug(rows, QVec(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == cols) return std::nullopt;  // inconsistent
    QVec x(cols, Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
    return x;
}

std::vector<QVec> nullspace(const QMatrix& a, int cols) {
    QMatrix m = a;
    if (m.empty()) m.push_back(QVec(cols, Rational(0)));
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rational(0));
        v[c] = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hopfoid
