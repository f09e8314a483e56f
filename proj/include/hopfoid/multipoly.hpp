#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfoid/rational.hpp"
#include "hopfoid/unipoly.hpp"

namespace hopfoid {

// Fixed, ordered generator table shared by all elements of one algebra.
// Generators flagged invertible admit negative exponents.
struct VarTable {
    std::vector<std::string> names;
    std::vector<bool> invertible;

    int size() const { return static_cast<int>(names.size()); }
    int index(const std::string& name) const;  // -1 when absent
    friend bool operator==(const VarTable& a, const VarTable& b) = default;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::pair<std::string, bool>> spec);

// Multivariate polynomial over Q with dense exponent vectors; exponents of
// invertible generators may be negative (Laurent style).
class MultiPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Rational>;

    explicit MultiPoly(VarTablePtr vars);
    static MultiPoly constant(VarTablePtr vars, const Rational& c);
    static MultiPoly var(VarTablePtr vars, int index, int exp = 1);
    static MultiPoly monomial(VarTablePtr vars, const Rational& c, Exps exps);

    const VarTablePtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws unless constant
    bool is_monomial() const { return terms_.size() == 1; }
    // Single term whose support lies in invertible generators.
    bool is_unit_monomial() const;
    int total_degree() const;  // 0 for the zero polynomial
    int max_exponent(int var) const;
    Rational coeff(const Exps& exps) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    // Negative e requires a unit monomial base.
    MultiPoly pow(long e) const;
    MultiPoly inverse() const;  // unit monomials only

    MultiPoly partial_derivative(int var) const;

    // Ring homomorphism determined by images[i] <- image of generator i; all
    // images must share one table, which becomes the result's table.
    // Generators occurring with negative exponents need unit-monomial images.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    // Decompose as a polynomial in generator `var`: exponent -> cofactor
    // (cofactors have exponent 0 at `var`).
    std::map<int, MultiPoly> decompose_by(int var) const;

    // Exact single-divisor multivariate division (graded-lex leading terms).
    // Requires nonnegative exponents throughout; nullopt when not divisible.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    // The polynomial as a UniPoly; requires at most one generator with
    // nonzero exponents anywhere, all nonnegative.
    UniPoly to_unipoly() const;

    // Canonical rendering: terms ascending by (total degree, then
    // lexicographic exponent comparison); factors in declared order.
    std::string str() const;

    // Graded-lex comparison used for term ordering (a < b).
    static bool exps_less(const Exps& a, const Exps& b);

private:
    void check_same_table(const MultiPoly& o) const;
    void add_term(const Exps& e, const Rational& c);
    VarTablePtr vars_;
    TermMap terms_;
};

// Convenience: identity substitution images over a table.
std::vector<MultiPoly> identity_images(const VarTablePtr& vars);

}  // namespace hopfoid
