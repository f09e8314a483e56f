#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <hopfoid/pv.hpp>
#include <hopfoid/solve.hpp>

using namespace hopfoid;

namespace {

DiffModule scalar_module(const UniPoly& a) {
    PolyMatrix m(1, 1);
    m.at(0, 0) = a;
    return DiffModule(m);
}

DiffModule nilpotent_2x2(const UniPoly& a) {
    PolyMatrix m(2, 2);
    m.at(0, 1) = a;
    return DiffModule(m);
}

DiffModule sample_ring_module() {
    UniPoly x = UniPoly::x();
    PolyMatrix m(2, 2);
    m.at(0, 0) = x;
    m.at(0, 1) = UniPoly(1);
    m.at(1, 0) = x + UniPoly(1);
    return DiffModule(m);
}

}  // namespace

TEST_CASE("solution-ring derivation on generators") {
    UniPoly x = UniPoly::x();
    UniPoly a = x * Rational(2);
    PVRing ring(nilpotent_2x2(a));

    CHECK(ring.derive(ring.x()) == ring.parse("1"));
    // d(X_ij) = sum_k M_ik X_kj
    CHECK(ring.derive(ring.X(0, 0)) == ring.lift(a) * ring.X(1, 0));
    CHECK(ring.derive(ring.X(0, 1)) == ring.lift(a) * ring.X(1, 1));
    CHECK(ring.derive(ring.X(1, 0)).is_zero());
    CHECK(ring.derive(ring.X(1, 1)).is_zero());
    CHECK(ring.parse("X11") == ring.X(0, 0));
}

TEST_CASE("derivation satisfies the Leibniz rule") {
    UniPoly x = UniPoly::x();
    PVRing ring(sample_ring_module());
    MultiPoly p = ring.x() * ring.X(0, 0) + ring.X(0, 1);
    MultiPoly q = ring.dinv() * ring.X(1, 1);
    CHECK(ring.derive(p * q) == ring.derive(p) * q + p * ring.derive(q));
    CHECK(ring.derive(p + q) == ring.derive(p) + ring.derive(q));
    // lifting commutes with d/dx
    UniPoly a = x * x + x;
    CHECK(ring.derive(ring.lift(a)) == ring.lift(a.derivative()));
}

TEST_CASE("abel identity: determinant and its inverse") {
    UniPoly x = UniPoly::x();
    PolyMatrix mm(2, 2);
    mm.at(0, 0) = x;
    mm.at(0, 1) = UniPoly(1);
    mm.at(1, 0) = x * x;
    mm.at(1, 1) = UniPoly(3);
    DiffModule m(mm);
    PVRing ring(m);
    UniPoly tr = mm.trace();

    CHECK(ring.derive(ring.det_poly()) == ring.lift(tr) * ring.det_poly());
    CHECK(ring.derive(ring.dinv()) == -(ring.lift(tr) * ring.dinv()));
    // det * Dinv is a constant of the derivation
    CHECK(ring.derive(ring.det_poly() * ring.dinv()).is_zero());
}

TEST_CASE("fundamental matrix of the trivial and scalar modules") {
    FundamentalMatrix id = pv_fundamental(DiffModule::trivial(1), 6);
    CHECK(id[0][0] == TruncSeries::constant(6, UniPoly(1)));

    // M = [x]: F = exp(xZ + Z^2/2), coefficients p_n(x)/n!
    FundamentalMatrix f = pv_fundamental(scalar_module(UniPoly::x()), 6);
    auto pn = recurrence_pn(6);
    for (int n = 0; n <= 6; ++n)
        CHECK(f[0][0].coeff(n) == pn[static_cast<std::size_t>(n)] * Rational::factorial(n).inverse());
}

TEST_CASE("fundamental matrix of the nilpotent module") {
    UniPoly x = UniPoly::x();
    FundamentalMatrix f = pv_fundamental(nilpotent_2x2(x * Rational(2)), 5);
    CHECK(f[0][0] == TruncSeries::constant(5, UniPoly(1)));
    CHECK(f[1][1] == TruncSeries::constant(5, UniPoly(1)));
    CHECK(f[1][0].is_zero());
    // F12 = 2x Z + Z^2: the antiderivative of 2(x+Z) vanishing at 0
    CHECK(f[0][1] == TruncSeries(5, {UniPoly(0), x * Rational(2), UniPoly(1)}));
    // unipotent: det F == 1
    CHECK(series_mat_det(f) == TruncSeries::constant(5, UniPoly(1)));
}

TEST_CASE("fundamental matrix solves its equation") {
    UniPoly x = UniPoly::x();
    PolyMatrix mm(2, 2);
    mm.at(0, 1) = x;
    mm.at(1, 0) = UniPoly(1);
    const int order = 10;
    FundamentalMatrix f = pv_fundamental(DiffModule(mm), order);
    auto rhs = series_mat_mul(iota_shift(mm, order), f);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            TruncSeries d = f[i][j].derivative_z();
            for (int n = 0; n < order; ++n) CHECK(d.coeff(n) == rhs[i][j].coeff(n));
        }
    // initial condition F(0) = I
    CHECK(f[0][0].coeff(0) == UniPoly(1));
    CHECK(f[0][1].coeff(0) == UniPoly(0));
}

TEST_CASE("taylor recurrences match naive iteration") {
    auto pn = recurrence_pn(5);
    CHECK(pn[0] == UniPoly(1));
    for (std::size_t n = 0; n + 1 < pn.size(); ++n)
        CHECK(pn[n + 1] == UniPoly::x() * pn[n] + pn[n].derivative());
    CHECK(pn[5].str() == "x^5 + 10*x^3 + 15*x");

    PolyMatrix mm(2, 2);
    mm.at(0, 1) = UniPoly::x();
    mm.at(1, 0) = UniPoly(1);
    auto ms = recurrence_Mn(mm, 4);
    CHECK(ms[0] == PolyMatrix::identity(2));
    for (std::size_t n = 0; n + 1 < ms.size(); ++n)
        CHECK(ms[n + 1] == ms[n].derivative() + ms[n] * mm);
}

TEST_CASE("isotropy report certificates") {
    PVReport nil = pv_report(nilpotent_2x2(UniPoly::x() * Rational(2)));
    CHECK(nil.rank == 2);
    CHECK(nil.az_pattern);
    CHECK(nil.certified_trivial);
    CHECK(!nil.lines.empty());

    PVReport one = pv_report(scalar_module(UniPoly::x()));
    CHECK(one.rank == 1);
    CHECK(one.rank_one);

    PVReport dense = pv_report(sample_ring_module());
    CHECK(dense.rank == 2);
    CHECK(!dense.az_pattern);
}
