#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <tuple>

#include <hopfoid/weyl.hpp>

using namespace hopfoid;

namespace {

WeylElement y_pow(int n) {
    return WeylElement::term(standard_weyl(), n, UniPoly(1));
}

WeylElement poly(const UniPoly& a) {
    return WeylElement::from_poly(standard_weyl(), a);
}

}  // namespace

TEST_CASE("right normal form of the commutation rule") {
    UniPoly x = UniPoly::x();
    // a * Y = Y * a + a'
    CHECK(poly(x) * y_pow(1) == y_pow(1) * x + poly(UniPoly(1)));
    // Y * a stays in normal form untouched
    CHECK((y_pow(1) * x).coeff(1) == x);
    CHECK((y_pow(1) * x).coeff(0) == UniPoly(0));
    // x * Y^2 = Y^2 x + 2 Y
    CHECK(poly(x) * y_pow(2) ==
          y_pow(2) * x + WeylElement::term(standard_weyl(), 1, UniPoly(2)));
    // x^2 * Y = Y x^2 + 2x
    CHECK(poly(x * x) * y_pow(1) == y_pow(1) * (x * x) + poly(x * Rational(2)));
    // constants are central
    CHECK(poly(UniPoly(5)) * y_pow(3) == y_pow(3) * UniPoly(5));
}

TEST_CASE("weyl algebra ring identities") {
    UniPoly x = UniPoly::x();
    WeylElement a = y_pow(2) * x + poly(UniPoly(3));
    WeylElement b = y_pow(1) * (x * x) - poly(x);
    WeylElement c = y_pow(1) + poly(UniPoly(1));

    CHECK((a + b) - b == a);
    CHECK(a - a == WeylElement(standard_weyl()));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((-a) + a == WeylElement(standard_weyl()));
    CHECK((a * UniPoly(0)).is_zero());
    CHECK(a.y_degree() == 2);
    CHECK(WeylElement(standard_weyl()).y_degree() == -1);
}

TEST_CASE("euler variant context") {
    auto euler = std::make_shared<const WeylContext>(UniPoly::x());
    UniPoly x = UniPoly::x();
    // delta(a) = x a': a * Y = Y * a + x a'
    WeylElement lhs = WeylElement::from_poly(euler, x) * WeylElement::y(euler);
    WeylElement rhs = WeylElement::term(euler, 1, x) + WeylElement::from_poly(euler, x);
    CHECK(lhs == rhs);
    CHECK(!(*euler == *standard_weyl()));
}

TEST_CASE("counit extracts the degree-zero coefficient") {
    UniPoly x = UniPoly::x();
    CHECK(poly(x * x).counit() == x * x);
    CHECK(y_pow(1).counit() == UniPoly(0));
    CHECK((y_pow(2) * x + poly(x + UniPoly(1))).counit() == x + UniPoly(1));
}

TEST_CASE("coproduct: binomial legs with the polynomial on the right factor") {
    UniPoly x = UniPoly::x();
    auto legs = (y_pow(2) * x).coproduct();
    REQUIRE(legs.size() == 3);
    // ascending left powers, the central binomial coefficient riding the left
    // leg and the polynomial always on the right leg's right side:
    // 1 (x) Y^2 x, 2Y (x) Y x, Y^2 (x) x
    CHECK(legs[0].first == y_pow(0));
    CHECK(legs[0].second == y_pow(2) * x);
    CHECK(legs[1].first == WeylElement::term(standard_weyl(), 1, UniPoly(2)));
    CHECK(legs[1].second == WeylElement::term(standard_weyl(), 1, x));
    CHECK(legs[2].first == y_pow(2));
    CHECK(legs[2].second == poly(x));
}

TEST_CASE("coproduct counit laws") {
    UniPoly x = UniPoly::x();
    for (const WeylElement& u :
         {y_pow(3) * x, y_pow(1) * (x * x) + poly(x), poly(x * x)}) {
        WeylElement left(standard_weyl()), right(standard_weyl());
        for (const auto& [u1, u2] : u.coproduct()) {
            left = left + poly(u1.counit()) * u2;   // (eps (x) id) Delta = id
            right = right + u1 * u2.counit();       // (id (x) eps) Delta = id
        }
        CHECK(left == u);
        CHECK(right == u);
    }
}

TEST_CASE("coproduct coassociativity") {
    // Expand both nestings of Delta on Y^3 x into canonical triples
    // (k, l, m) -> polynomial, folding scalar coefficients into the last leg.
    auto expand = [](const WeylElement& u, bool left_first) {
        std::map<std::tuple<int, int, int>, UniPoly> acc;
        for (const auto& [a, b] : u.coproduct()) {
            const WeylElement& inner = left_first ? a : b;
            for (const auto& [c, d] : inner.coproduct()) {
                // each factor here is a single normal-form term
                auto one_term = [](const WeylElement& w) {
                    REQUIRE(w.coeffs().size() <= 1);
                    if (w.coeffs().empty()) return std::pair<int, UniPoly>{0, UniPoly(0)};
                    return std::pair<int, UniPoly>{w.coeffs().begin()->first,
                                                   w.coeffs().begin()->second};
                };
                auto [k1, p1] = one_term(left_first ? c : a);
                auto [k2, p2] = one_term(left_first ? d : c);
                auto [k3, p3] = one_term(left_first ? b : d);
                auto key = std::make_tuple(k1, k2, k3);
                UniPoly val = p1 * p2 * p3;
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, val);
                else
                    it->second += val;
            }
        }
        return acc;
    };
    WeylElement u = y_pow(3) * UniPoly::x();
    CHECK(expand(u, true) == expand(u, false));
}

TEST_CASE("translation map on generator-level elements") {
    UniPoly x = UniPoly::x();
    // a + Y b -> 1 (x) (a + Y b) - Y (x) b
    WeylElement u = poly(x * x) + y_pow(1) * (x * Rational(3));
    auto legs = u.translation();
    REQUIRE(legs.size() == 2);
    CHECK(legs[0].first == y_pow(0));
    CHECK(legs[0].second == u);
    CHECK(legs[1].first == -y_pow(1));
    CHECK(legs[1].second == poly(x * Rational(3)));
    CHECK_THROWS(y_pow(2).translation());
}

TEST_CASE("parsing and rendering operators") {
    UniPoly x = UniPoly::x();
    CHECK(parse_weyl("Y^2*x + 1", standard_weyl()) == y_pow(2) * x + poly(UniPoly(1)));
    // commutative reading: x*Y denotes the normal-form term Y*x
    CHECK(parse_weyl("x*Y", standard_weyl()) == y_pow(1) * x);
    CHECK(parse_weyl("Y*Y*Y", standard_weyl()) == y_pow(3));
    CHECK((y_pow(3) * (x * x) + y_pow(2) * UniPoly(3)).str() == "Y^3*x^2 + Y^2*3");
    CHECK((y_pow(1) * x + poly(UniPoly(1))).str() == "Y*x + 1");
    CHECK(WeylElement(standard_weyl()).str() == "0");
}
