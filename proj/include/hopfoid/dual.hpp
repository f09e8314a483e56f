#pragma once

#include <utility>
#include <vector>

#include "hopfoid/diffmodule.hpp"
#include "hopfoid/submodule.hpp"
#include "hopfoid/weyl.hpp"

namespace hopfoid {

// A representative functional on the skew algebra: the class of
// (functional, vector) over a differential module.  Two classes are the
// same element exactly when their evaluation maps agree; `equal` decides
// this by derivation-saturation.
struct DualClass {
    DiffModule module;
    ModFunctional functional;
    ModVector vector;

    DualClass(DiffModule m, ModFunctional f, ModVector v);
};

// Class of a @ b over the rank-one trivial module; evaluates
// sum Y^n c_n  |->  sum c_n * a * b^(n).
DualClass unit_class(const UniPoly& a, const UniPoly& b);
DualClass zero_class();

// Evaluation against a skew-algebra element in right normal form.
UniPoly zeta_eval(const DualClass& c, const WeylElement& u);

// Counit: the pairing functional(vector).
UniPoly dual_counit(const DualClass& c);

// Convolution product; the result is reduced with `minimize`.
DualClass dual_mul(const DualClass& c, const DualClass& d);

// Product representative on the full tensor carrier, without minimization.
// Equality tests are representative-independent, so this is the cheap form
// to feed into `dual_equal` / `is_zero_class`.
DualClass tensor_class(const DualClass& c, const DualClass& d);

// Sum of classes via direct sum of carriers (also minimized).
DualClass dual_add(const DualClass& c, const DualClass& d);
DualClass normalize_sum(const std::vector<DualClass>& terms);

// Formal-sum representative on the direct-sum carrier, without minimization.
DualClass sum_class(const std::vector<DualClass>& terms);

// Two-sided scalar action: [left . functional @ vector . right].
DualClass bimodule_act(const DualClass& c, const UniPoly& left, const UniPoly& right);

DualClass dual_negate(const DualClass& c);

// Coproduct: splits through the carrier basis; term alpha is
// ([functional @ e_alpha], [e_alpha^* @ vector]).
std::vector<std::pair<DualClass, DualClass>> dual_coproduct(const DualClass& c);

// Antipode: swaps the roles of functional and vector over the dual module.
DualClass dual_antipode(const DualClass& c);

// Coaction of the dual on a module element: p |-> sum_alpha e_alpha @ [e_alpha^* @ p].
std::vector<std::pair<ModVector, DualClass>> dual_coaction(const DiffModule& m, const ModVector& p);

// Cut the carrier down to the derivation-closure of the class vector, then
// (through the antipode swap) to the closure of the functional: a two-sided
// reduction that drops both unreachable and unobservable directions.
DualClass minimize(const DualClass& c);

struct Saturation {
    SubmoduleBasis basis;
    int sweeps;  // sweep count until closure (including the final no-growth sweep)
};

// Smallest derivation-stable A-submodule containing the seeds, as a
// triangular column basis.
Saturation d_saturate(const DiffModule& m, const std::vector<ModVector>& seeds);

struct EqualityResult {
    bool equal;
    int saturation_rank;
    int sweeps;
    // Evaluations on Y^k for k <= witness agree if and only if the classes
    // are equal; bound certified by the saturation sweep count.
    int witness;
};

EqualityResult dual_equal(const DualClass& c, const DualClass& d);

bool is_zero_class(const DualClass& c);

}  // namespace hopfoid
