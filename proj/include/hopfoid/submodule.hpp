#pragma once

#include <optional>
#include <vector>

#include "hopfoid/unipoly.hpp"

namespace hopfoid {

// Basis of a finitely generated submodule of Q[x]^m kept in weak Popov
// form: every column is primitive (coprime integer coefficients), and the
// pivot positions -- the rightmost entry of maximal degree in each column
// -- are pairwise distinct.  Insertion uses only leading-term
// cancellations and column swaps, so degrees never exceed the degree of
// the inserted vector and coefficient growth stays tame.  Membership of a
// span element reduces to zero by pivot cancellations alone, which makes
// the test deterministic and produces explicit cofactors.
class SubmoduleBasis {
public:
    explicit SubmoduleBasis(int ambient_rank);

    int ambient_rank() const { return m_; }
    int rank() const { return static_cast<int>(cols_.size()); }
    const std::vector<std::vector<UniPoly>>& columns() const { return cols_; }

    // Adds v to the span; true when the span strictly grew.
    bool insert(std::vector<UniPoly> v);

    // Cofactors a with sum a_j * column_j = v, if v lies in the span.
    std::optional<std::vector<UniPoly>> membership(std::vector<UniPoly> v) const;
    bool contains(const std::vector<UniPoly>& v) const { return membership(v).has_value(); }

private:
    static int pivot_of(const std::vector<UniPoly>& v);  // -1 for the zero vector

    int m_;
    std::vector<std::vector<UniPoly>> cols_;
};

SubmoduleBasis span_basis(int ambient_rank, const std::vector<std::vector<UniPoly>>& cols);

}  // namespace hopfoid
