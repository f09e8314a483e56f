#pragma once

#include <optional>
#include <vector>

#include "hopfoid/rational.hpp"

namespace hopfoid {

// Dense rational matrices as row-major vectors of rows; just enough exact
// linear algebra (Gauss-Jordan) for solving, ranks and nullspaces.
using QVec = std::vector<Rational>;
using QMatrix = std::vector<QVec>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

// One solution of A x = b if consistent.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);

// Basis of the right nullspace of A (each element has `cols` entries).
std::vector<QVec> nullspace(const QMatrix& a, int cols);

}  // namespace hopfoid
