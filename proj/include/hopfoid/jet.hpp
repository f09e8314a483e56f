#pragma once

#include <string>
#include <vector>

#include "hopfoid/multipoly.hpp"
#include "hopfoid/rational.hpp"
#include "hopfoid/truncseries.hpp"
#include "hopfoid/unipoly.hpp"

namespace hopfoid {

// Integer partitions of n encoded by multiplicity: k = (k_1,...,k_n) with
// sum i*k_i = n.  Used for the chain-rule coproduct of the jet coordinates.
std::vector<std::vector<int>> partitions_K(int n);

// Brute-force partition count (independent of partitions_K), for testing.
long partition_count_brute(int n);

// Truncated jet algebra H_r = Q[x, y, y1^{±1}, y2, ..., yr] carrying the
// groupoid structure of invertible r-jets of maps of the affine line.
//
// Generator table layout: index 0 = x, index 1 = y, index n+1 = y_n.
class JetAlgebra {
public:
    explicit JetAlgebra(int order);

    int order() const { return order_; }
    const VarTablePtr& vars() const { return vars_; }

    MultiPoly zero() const { return MultiPoly(vars_); }
    MultiPoly one() const { return MultiPoly::constant(vars_, Rational(1)); }
    MultiPoly x() const { return MultiPoly::var(vars_, 0); }
    MultiPoly y() const { return MultiPoly::var(vars_, 1); }
    MultiPoly y_jet(int n) const;  // y_n, 1 <= n <= order

    // Base-ring embeddings: source a(x), target a(y).
    MultiPoly source(const UniPoly& a) const;
    MultiPoly target(const UniPoly& a) const;

    MultiPoly parse(const std::string& src) const;

    // Counit: x, y -> X; y1 -> 1; y_n -> 0 (n >= 2).
    UniPoly counit(const MultiPoly& p) const;

    // Antipode: x <-> y, y1 -> y1^{-1}, higher jets via the inversion
    // recursion.  An involutive algebra automorphism exchanging source and
    // target.
    MultiPoly antipode(const MultiPoly& p) const;

    // Jet-prolongation derivation: x -> 1, y -> y1, y_n -> y_{n+1}.  Throws
    // TruncationError when the result would need y_{order+1}.
    MultiPoly derive(const MultiPoly& p) const;

private:
    int order_;
    VarTablePtr vars_;
    std::vector<MultiPoly> antipode_images_;
};

// k-fold tensor product H_r (x)_A ... (x)_A H_r realized as one polynomial
// ring: positions m_0..m_k (shared evaluation points) and one family
// u^{(f)}_1..u^{(f)}_r per factor, u^{(f)}_1 invertible.  Factor f embeds
// with x -> m_{f-1}, y -> m_f, y_n -> u^{(f)}_n; the A-balancing over the
// tensor signs is automatic because adjacent factors share a position.
class JetTensor {
public:
    JetTensor(int order, int arity);

    int order() const { return order_; }
    int arity() const { return arity_; }
    const VarTablePtr& vars() const { return vars_; }

    MultiPoly zero() const { return MultiPoly(vars_); }
    MultiPoly one() const { return MultiPoly::constant(vars_, Rational(1)); }
    MultiPoly position(int i) const;       // m_i, 0 <= i <= arity
    MultiPoly family(int f, int n) const;  // u^{(f)}_n, 1 <= f <= arity

    // Algebra map H_r -> tensor embedding p into factor `f` (1-based).
    MultiPoly embed(const JetAlgebra& alg, const MultiPoly& p, int f) const;

private:
    int position_index(int i) const { return i; }
    int family_index(int f, int n) const;
    int order_;
    int arity_;
    VarTablePtr vars_;
};

// Coproduct H_r -> H_r (x)_A H_r: x -> m_0, y -> m_2, and the chain-rule
// expansion on jets,
//   Delta(y_n) = sum over partitions k of n of
//       n!/(prod_i k_i! (i!)^{k_i}) * prod_i (u^{(1)}_i)^{k_i} * u^{(2)}_{|k|}.
MultiPoly jet_coproduct(const JetAlgebra& alg, const JetTensor& t2,
                        const MultiPoly& p);

// Apply the coproduct to tensor factor `f` of an element of the `from`
// tensor (arity k), landing in `to` (arity k+1).
MultiPoly tensor_coproduct(const JetAlgebra& alg, const JetTensor& from,
                           const JetTensor& to, const MultiPoly& p, int f);

// Render an arity-2 tensor element in the balanced normal form: left factor
// carries the coefficient, m_0 (as "x"), m_1 (as "y") and the u^{(1)} family;
// the right factor carries m_2 (as "y") and the u^{(2)} family.
std::string tensor2_str(const JetTensor& t2, const MultiPoly& p);

struct WitnessLine {
    std::string name;
    bool pass = false;
    std::string note;
};

struct AxiomReport {
    std::vector<WitnessLine> lines;
    bool all_pass = true;
    void add(const std::string& name, bool pass, const std::string& note = "");
};

// Machine verification of the Hopf-algebroid axioms on the generators
// x, y, y_1..y_max_n of H_r: coassociativity, both counit laws, both
// antipode laws, involutivity of S, and S interchanging source and target.
AxiomReport jet_axiom_suite(const JetAlgebra& alg, int max_n);

// Witness battery for the ideal <y_1 - 1, y_n (n >= 2)>: counit vanishing,
// coproduct and antipode membership certificates, and a computed-versus-
// displayed report for the coproduct of y_1 - 1.
AxiomReport jet_yi_witnesses(const JetAlgebra& alg);

// Witness battery for the prolongation ideal <delta^k(x y_1 - y)>: the
// closed form of the iterated derivative, counit vanishing, coproduct and
// antipode membership certificates, with computed-versus-displayed reports
// where the certified cofactors differ from the stated ones.
AxiomReport jet_xy_witnesses(const JetAlgebra& alg);

struct NonreducedReport {
    bool product_in_ideal = false;   // x*y2 certified inside the ideal
    bool x_certificate_found = false;
    bool y2_certificate_found = false;
    int degree_bound = 0;
    int candidate_count = 0;
    std::string verdict;
};

// Certified membership x*y2 in <delta^k(x y_1 - y)> together with a bounded
// Q-linear search for membership certificates for x and for y2 alone.  The
// search is sound (a found certificate is exact) but bounded, so a miss is
// reported as "consistent with non-reducedness" rather than a proof.
NonreducedReport jet_nonreduced_check(const JetAlgebra& alg, int degree_bound);

}  // namespace hopfoid
