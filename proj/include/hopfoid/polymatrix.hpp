#pragma once

#include <string>
#include <vector>

#include "hopfoid/unipoly.hpp"

namespace hopfoid {

// Dense matrix over Q[x].
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols);
    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    UniPoly& at(int i, int j) { return e_[i * cols_ + j]; }
    const UniPoly& at(int i, int j) const { return e_[i * cols_ + j]; }

    PolyMatrix operator-() const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator*(const UniPoly& s) const;
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

    PolyMatrix transpose() const;
    PolyMatrix derivative() const;  // entrywise d/dx
    UniPoly trace() const;
    UniPoly determinant() const;               // cofactor expansion
    PolyMatrix minor_matrix(int i, int j) const;  // delete row i, column j

    std::vector<UniPoly> apply(const std::vector<UniPoly>& v) const;

    static PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);
    // kron(A, I_n) + kron(I_m, B); the matrix of the tensor-product
    // connection on basis e_i (x) f_j ordered lexicographically.
    static PolyMatrix kronecker_sum(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<UniPoly> e_;
};

}  // namespace hopfoid
