#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <hopfoid/linalg.hpp>
#include <hopfoid/multipoly.hpp>
#include <hopfoid/parse.hpp>
#include <hopfoid/polymatrix.hpp>
#include <hopfoid/rational.hpp>
#include <hopfoid/truncseries.hpp>
#include <hopfoid/unipoly.hpp>

using namespace hopfoid;

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(7) * Rational(2, 7) == Rational(2));
    CHECK(Rational(1, 3) / Rational(2) == Rational(1, 6));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational("3/9") == Rational(1, 3));
    CHECK(Rational("-5") == Rational(-5));
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(-1).abs() == Rational(1));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(Rational(1, 2).is_integer() == false);
    CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("rational factorial and binomial") {
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::binomial(6, 3) == Rational(20));
    CHECK(Rational::binomial(4, 0) == Rational(1));
    CHECK(Rational::binomial(4, 4) == Rational(1));
}

TEST_CASE("unipoly construction trims trailing zeros") {
    UniPoly p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(UniPoly(0).is_zero());
    CHECK(UniPoly(0).degree() == -1);
    CHECK(UniPoly::x().degree() == 1);
    CHECK(UniPoly::monomial(Rational(3), 4).coeff(4) == Rational(3));
    CHECK(UniPoly::monomial(Rational(0), 4).is_zero());
}

TEST_CASE("unipoly arithmetic, derivative, evaluation") {
    UniPoly x = UniPoly::x();
    UniPoly p = x * x + x * Rational(2) + UniPoly(1);  // (x+1)^2
    CHECK(p == (x + UniPoly(1)) * (x + UniPoly(1)));
    CHECK(p.derivative() == x * Rational(2) + UniPoly(2));
    CHECK(p.eval(Rational(3)) == Rational(16));
    CHECK((p - p).is_zero());
    CHECK((-p) + p == UniPoly(0));
    CHECK(p.pow(0) == UniPoly(1));
    CHECK(p.pow(2) == p * p);
    CHECK((x * Rational(2)).monic() == x);
    CHECK_THROWS(UniPoly(0).monic());
    CHECK_THROWS(UniPoly(0).lead());
}

TEST_CASE("unipoly division and gcd") {
    UniPoly x = UniPoly::x();
    UniPoly a = x.pow(3) - UniPoly(1);
    UniPoly d = x - UniPoly(1);
    auto [q, r] = a.divmod(d);
    CHECK(q * d + r == a);
    CHECK(r.is_zero());
    CHECK(a.divexact(d) == q);
    CHECK_THROWS(x.divexact(x + UniPoly(1)));

    UniPoly g = UniPoly::gcd(a, x.pow(2) - UniPoly(1));
    CHECK(g == x - UniPoly(1));  // monic gcd
    auto e = UniPoly::xgcd(a, x.pow(2) - UniPoly(1));
    CHECK(e.u * a + e.w * (x.pow(2) - UniPoly(1)) == e.g);
    CHECK(e.g == g);
    CHECK(UniPoly::gcd(UniPoly(0), UniPoly(0)).is_zero());
}

TEST_CASE("unipoly rendering") {
    UniPoly x = UniPoly::x();
    CHECK((x.pow(3) - x * Rational(2) + UniPoly(Rational(1, 2))).str() ==
          "x^3 - 2*x + 1/2");
    CHECK(UniPoly(0).str() == "0");
    CHECK((-x).str() == "-x");
    CHECK(UniPoly(Rational(-1, 3)).str() == "-1/3");
    CHECK(x.str("Z") == "Z");
}

TEST_CASE("unipoly parsing") {
    CHECK(parse_unipoly("x^2 - 2*x + 1") ==
          UniPoly::x().pow(2) - UniPoly::x() * Rational(2) + UniPoly(1));
    CHECK(parse_unipoly("(x+1)*(x-1)") == UniPoly::x().pow(2) - UniPoly(1));
    CHECK(parse_unipoly("-3/2") == UniPoly(Rational(-3, 2)));
    CHECK(parse_unipoly("x^0") == UniPoly(1));
    CHECK_THROWS_AS(parse_unipoly("x +"), ParseError);
    CHECK_THROWS_AS(parse_unipoly("y"), std::exception);
    CHECK_THROWS_AS(parse_unipoly("x^-1"), std::exception);
}

TEST_CASE("multipoly ring operations") {
    auto vars = make_vars({{"a", false}, {"b", true}});
    MultiPoly a = MultiPoly::var(vars, 0);
    MultiPoly b = MultiPoly::var(vars, 1);
    MultiPoly one = MultiPoly::constant(vars, Rational(1));

    CHECK(MultiPoly(vars).is_zero());
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK(a * b == b * a);
    CHECK((a + one).pow(2) == a * a + a * Rational(2) + one);
    CHECK(b.pow(-2) * b.pow(2) == one);
    CHECK(b.inverse() == b.pow(-1));
    CHECK_THROWS(a.inverse());
    CHECK_THROWS(a.pow(-1));
    CHECK((a * b + one).total_degree() == 2);
    CHECK((a * a * b).max_exponent(0) == 2);
    CHECK(b.is_unit_monomial());
    CHECK(!(a * b).is_unit_monomial());
}

TEST_CASE("multipoly substitution is a ring homomorphism") {
    auto vars = make_vars({{"a", false}, {"b", true}});
    MultiPoly a = MultiPoly::var(vars, 0);
    MultiPoly b = MultiPoly::var(vars, 1);
    std::vector<MultiPoly> images = {b * b, b};  // a -> b^2, b -> b
    MultiPoly p = a * b + a * a;
    MultiPoly q = b - a;
    CHECK((p * q).substitute(images) == p.substitute(images) * q.substitute(images));
    CHECK((p + q).substitute(images) == p.substitute(images) + q.substitute(images));
    CHECK(b.pow(-1).substitute(images) == b.pow(-1));
}

TEST_CASE("multipoly calculus and decomposition") {
    auto vars = make_vars({{"a", false}, {"b", false}});
    MultiPoly a = MultiPoly::var(vars, 0);
    MultiPoly b = MultiPoly::var(vars, 1);
    MultiPoly p = a * a * b + b * Rational(3);
    CHECK(p.partial_derivative(0) == a * b * Rational(2));
    CHECK(p.partial_derivative(1) == a * a + MultiPoly::constant(vars, Rational(3)));

    auto parts = p.decompose_by(1);  // as a polynomial in b
    CHECK(parts.size() == 1);
    CHECK(parts.at(1) == a * a + MultiPoly::constant(vars, Rational(3)));

    CHECK(p.divide_exact(b).has_value());
    CHECK(*p.divide_exact(b) == a * a + MultiPoly::constant(vars, Rational(3)));
    CHECK(!p.divide_exact(a).has_value());

    auto uni = make_vars({{"t", false}});
    MultiPoly t = MultiPoly::var(uni, 0);
    CHECK((t * t + t).to_unipoly() == UniPoly::x().pow(2) + UniPoly::x());
}

TEST_CASE("multipoly parsing and rendering") {
    auto vars = make_vars({{"a", false}, {"b", true}});
    CHECK(parse_multipoly("a^2*b - 1/2", vars) ==
          MultiPoly::var(vars, 0).pow(2) * MultiPoly::var(vars, 1) -
              MultiPoly::constant(vars, Rational(1, 2)));
    CHECK(parse_multipoly("b^-2", vars) == MultiPoly::var(vars, 1).pow(-2));
    CHECK_THROWS(parse_multipoly("a^-1", vars));
    CHECK(parse_multipoly("a*b + a^2", vars).str() == "a*b + a^2");
}

TEST_CASE("exact rational linear algebra") {
    QMatrix m = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(rank(m) == 1);
    auto ns = nullspace(m, 2);
    REQUIRE(ns.size() == 1);
    // A * n == 0
    CHECK(ns[0][0] * Rational(1) + ns[0][1] * Rational(2) == Rational(0));

    QMatrix a = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    auto sol = solve(a, {Rational(4), Rational(7)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] * Rational(2) + (*sol)[1] == Rational(4));
    CHECK((*sol)[0] + (*sol)[1] * Rational(3) == Rational(7));

    QMatrix inc = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK(!solve(inc, {Rational(0), Rational(1)}).has_value());

    QMatrix r = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    auto piv = rref(r);
    CHECK(piv == std::vector<int>{0, 1});
}

TEST_CASE("polynomial matrices") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = UniPoly::x();
    m.at(0, 1) = UniPoly(1);
    m.at(1, 1) = UniPoly::x() * Rational(-1);
    CHECK(m.trace() == UniPoly(0));
    CHECK(m.determinant() == -(UniPoly::x() * UniPoly::x()));
    CHECK(m.transpose().at(1, 0) == UniPoly(1));
    CHECK(m * PolyMatrix::identity(2) == m);
    CHECK(m.derivative().at(0, 0) == UniPoly(1));
    CHECK(m.minor_matrix(0, 0).at(0, 0) == m.at(1, 1));

    PolyMatrix n(1, 1);
    n.at(0, 0) = UniPoly::x();
    PolyMatrix ks = PolyMatrix::kronecker_sum(m, n);
    CHECK(ks.rows() == 2);
    CHECK(ks.at(0, 0) == UniPoly::x() + UniPoly::x());
    CHECK(PolyMatrix::direct_sum(m, n).rows() == 3);
    CHECK(PolyMatrix::kronecker(m, n).at(0, 1) == UniPoly::x());

    auto v = m.apply({UniPoly(1), UniPoly::x()});
    CHECK(v[0] == UniPoly::x() + UniPoly::x());
    CHECK(v[1] == -(UniPoly::x() * UniPoly::x()));
}

TEST_CASE("truncated series arithmetic") {
    TruncSeries z(3, {UniPoly(0), UniPoly(1)});  // Z + O(Z^4)
    CHECK(z.order() == 3);
    CHECK(z.coeff(1) == UniPoly(1));
    CHECK(z.coeff(3) == UniPoly(0));
    CHECK_THROWS_AS(z.coeff(4), TruncationError);

    TruncSeries p = z * z;  // Z^2
    CHECK(p.coeff(2) == UniPoly(1));
    CHECK((z + z).coeff(1) == UniPoly(2));
    CHECK((z - z).is_zero());
    CHECK((-z).coeff(1) == UniPoly(-1));
    CHECK((z * UniPoly::x()).coeff(1) == UniPoly::x());

    // order drops under d/dZ and truncates to min under +
    CHECK(z.derivative_z().order() == 2);
    CHECK(z.derivative_z().coeff(0) == UniPoly(1));
    CHECK((TruncSeries(5) + TruncSeries(2)).order() == 2);

    CHECK(TruncSeries::constant(2, UniPoly::x()).str() == "x");
    CHECK_THROWS(TruncSeries(-1));
}

TEST_CASE("universal Taylor expansion") {
    // d/dx: a(x) expands to a(x + Z); for a = x^2: x^2 + 2x Z + Z^2.
    TruncSeries t = taylor(UniPoly::x().pow(2), UniPoly(1), 3);
    CHECK(t.coeff(0) == UniPoly::x().pow(2));
    CHECK(t.coeff(1) == UniPoly::x() * Rational(2));
    CHECK(t.coeff(2) == UniPoly(1));
    CHECK(t.coeff(3) == UniPoly(0));

    // Euler derivation x d/dx: x expands to x * Exp(Z).
    TruncSeries e = taylor(UniPoly::x(), UniPoly::x(), 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(e.coeff(n) == UniPoly::x() * Rational::factorial(n).inverse());
}
