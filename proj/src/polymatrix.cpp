#include "hopfoid/polymatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfoid {

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::domain_error("PolyMatrix: negative size");
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = UniPoly(1);
    return m;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = -p;
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("PolyMatrix: shape mismatch");
    PolyMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("PolyMatrix: shape mismatch");
    PolyMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::operator*(const UniPoly& s) const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p *= s;
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::derivative() const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = p.derivative();
    return r;
}

UniPoly PolyMatrix::trace() const {
    if (rows_ != cols_) throw std::domain_error("PolyMatrix: trace of non-square");
    UniPoly t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

PolyMatrix PolyMatrix::minor_matrix(int i, int j) const {
    PolyMatrix r(rows_ - 1, cols_ - 1);
    for (int a = 0, ra = 0; a < rows_; ++a) {
        if (a == i) continue;
        for (int b = 0, rb = 0; b < cols_; ++b) {
            if (b == j) continue;
            r.at(ra, rb) = at(a, b);
            ++rb;
        }
        ++ra;
    }
    return r;
}

UniPoly PolyMatrix::determinant() const {
    if (rows_ != cols_) throw std::domain_error("PolyMatrix: determinant of non-square");
    if (rows_ == 0) return UniPoly(1);
    if (rows_ == 1) return at(0, 0);
    UniPoly det;
    Rational sign(1);
    for (int j = 0; j < cols_; ++j) {
        if (!at(0, j).is_zero()) det += at(0, j) * minor_matrix(0, j).determinant() * sign;
        sign = -sign;
    }
    return det;
}

std::vector<UniPoly> PolyMatrix::apply(const std::vector<UniPoly>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::domain_error("PolyMatrix: shape mismatch");
    std::vector<UniPoly> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l)
                    r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

PolyMatrix PolyMatrix::kronecker_sum(const PolyMatrix& a, const PolyMatrix& b) {
    return kronecker(a, identity(b.rows_)) + kronecker(identity(a.rows_), b);
}

PolyMatrix PolyMatrix::direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

}  // namespace hopfoid
