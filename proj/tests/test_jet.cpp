#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include <hopfoid/jet.hpp>

using namespace hopfoid;

TEST_CASE("partition enumeration by multiplicity vectors") {
    auto sorted = [](int n) {
        auto ps = partitions_K(n);
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    CHECK(sorted(1) == std::vector<std::vector<int>>{{1}});
    CHECK(sorted(2) == std::vector<std::vector<int>>{{0, 1}, {2, 0}});
    CHECK(sorted(3) == std::vector<std::vector<int>>{{0, 0, 1}, {1, 1, 0}, {3, 0, 0}});
    CHECK(sorted(4) == std::vector<std::vector<int>>{
                           {0, 0, 0, 1}, {0, 2, 0, 0}, {1, 0, 1, 0}, {2, 1, 0, 0}, {4, 0, 0, 0}});

    const long pn[12] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 1; n <= 12; ++n) {
        CHECK(static_cast<long>(partitions_K(n).size()) == pn[n - 1]);
        CHECK(partition_count_brute(n) == pn[n - 1]);
        // every vector is a genuine partition of n
        for (const auto& k : partitions_K(n)) {
            long weight = 0;
            for (std::size_t i = 0; i < k.size(); ++i)
                weight += static_cast<long>(i + 1) * k[i];
            CHECK(weight == n);
        }
    }
}

TEST_CASE("jet algebra generators and counit") {
    JetAlgebra alg(4);
    CHECK(alg.order() == 4);
    CHECK_THROWS(alg.y_jet(0));
    CHECK_THROWS(alg.y_jet(5));

    CHECK(alg.counit(alg.x()) == UniPoly::x());
    CHECK(alg.counit(alg.y()) == UniPoly::x());
    CHECK(alg.counit(alg.y_jet(1)) == UniPoly(1));
    CHECK(alg.counit(alg.y_jet(2)) == UniPoly(0));
    CHECK(alg.counit(alg.y_jet(1).pow(-2)) == UniPoly(1));
    CHECK(alg.counit(alg.x() * alg.y_jet(1) - alg.y()) == UniPoly(0));

    // source and target embeddings
    UniPoly a = UniPoly::x().pow(2) + UniPoly(1);
    CHECK(alg.source(a) == alg.x() * alg.x() + alg.one());
    CHECK(alg.target(a) == alg.y() * alg.y() + alg.one());
    CHECK(alg.parse("x*y1 - y") == alg.x() * alg.y_jet(1) - alg.y());
}

TEST_CASE("chain-rule coproduct on the first jets") {
    JetAlgebra alg(4);
    JetTensor t2(4, 2);
    auto cop = [&](int n) { return tensor2_str(t2, jet_coproduct(alg, t2, alg.y_jet(n))); };
    CHECK(cop(1) == "y1⊗y1");
    CHECK(cop(2) == "y2⊗y1 + y1^2⊗y2");
    CHECK(cop(3) == "y3⊗y1 + 3*y1*y2⊗y2 + y1^3⊗y3");
    CHECK(cop(4) == "y4⊗y1 + 4*y1*y3⊗y2 + 3*y2^2⊗y2 + 6*y1^2*y2⊗y3 + y1^4⊗y4");

    // base coordinates go to the outer positions
    CHECK(jet_coproduct(alg, t2, alg.x()) == t2.position(0));
    CHECK(jet_coproduct(alg, t2, alg.y()) == t2.position(2));
}

TEST_CASE("coproduct is an algebra map") {
    JetAlgebra alg(5);
    JetTensor t2(5, 2);
    MultiPoly p = alg.y_jet(2) * alg.x() + alg.y_jet(1);
    MultiPoly q = alg.y_jet(3) - alg.y();
    CHECK(jet_coproduct(alg, t2, p * q) ==
          jet_coproduct(alg, t2, p) * jet_coproduct(alg, t2, q));
    CHECK(jet_coproduct(alg, t2, p + q) ==
          jet_coproduct(alg, t2, p) + jet_coproduct(alg, t2, q));
}

TEST_CASE("coassociativity through the tensor embeddings") {
    JetAlgebra alg(4);
    JetTensor t2(4, 2), t3(4, 3);
    for (int n = 1; n <= 4; ++n) {
        MultiPoly d = jet_coproduct(alg, t2, alg.y_jet(n));
        CHECK(tensor_coproduct(alg, t2, t3, d, 1) == tensor_coproduct(alg, t2, t3, d, 2));
    }
}

TEST_CASE("antipode closed forms") {
    JetAlgebra alg(6);
    MultiPoly y1 = alg.y_jet(1);
    CHECK(alg.antipode(alg.x()) == alg.y());
    CHECK(alg.antipode(alg.y()) == alg.x());
    CHECK(alg.antipode(y1) == y1.pow(-1));
    CHECK(alg.antipode(alg.y_jet(2)) == -(alg.y_jet(2) * y1.pow(-3)));
    CHECK(alg.antipode(alg.y_jet(3)) ==
          -(alg.y_jet(3) * y1.pow(-4)) + alg.y_jet(2).pow(2) * y1.pow(-5) * Rational(3));
    CHECK(alg.antipode(alg.y_jet(4)).str() ==
          "-y1^-5*y4 + 10*y1^-6*y2*y3 - 15*y1^-7*y2^3");
}

TEST_CASE("antipode is an involutive algebra automorphism") {
    JetAlgebra alg(5);
    MultiPoly p = alg.y_jet(2) * alg.x() + alg.y_jet(3);
    MultiPoly q = alg.y_jet(1).pow(-2) + alg.y();
    CHECK(alg.antipode(p * q) == alg.antipode(p) * alg.antipode(q));
    CHECK(alg.antipode(p + q) == alg.antipode(p) + alg.antipode(q));
    CHECK(alg.antipode(alg.antipode(p)) == p);
    CHECK(alg.antipode(alg.antipode(q)) == q);
    // S interchanges the base embeddings
    UniPoly a = UniPoly::x().pow(2) - UniPoly(2);
    CHECK(alg.antipode(alg.source(a)) == alg.target(a));
    CHECK(alg.antipode(alg.target(a)) == alg.source(a));
}

TEST_CASE("prolongation derivation") {
    JetAlgebra alg(5);
    CHECK(alg.derive(alg.x()) == alg.one());
    CHECK(alg.derive(alg.y()) == alg.y_jet(1));
    for (int n = 1; n <= 4; ++n) CHECK(alg.derive(alg.y_jet(n)) == alg.y_jet(n + 1));
    CHECK_THROWS_AS(alg.derive(alg.y_jet(5)), TruncationError);

    MultiPoly p = alg.x() * alg.y_jet(2);
    MultiPoly q = alg.y_jet(1);
    CHECK(alg.derive(p * q) == alg.derive(p) * q + p * alg.derive(q));

    // delta^{n+1}(x y1 - y) = n y_{n+1} + x y_{n+2}
    MultiPoly g = alg.x() * alg.y_jet(1) - alg.y();
    MultiPoly it = g;
    for (int n = 0; n + 2 <= 5; ++n) {
        it = alg.derive(it);
        CHECK(it == alg.y_jet(n + 1) * Rational(n) + alg.x() * alg.y_jet(n + 2));
    }
}

TEST_CASE("hopf axiom suite passes") {
    AxiomReport rep = jet_axiom_suite(JetAlgebra(8), 6);
    CHECK(rep.all_pass);
    CHECK(rep.lines.size() >= 40);
    for (const auto& l : rep.lines) CHECK(l.pass);
}

TEST_CASE("ideal witness batteries") {
    JetAlgebra alg(6);
    AxiomReport yi = jet_yi_witnesses(alg);
    CHECK(yi.all_pass);
    AxiomReport xy = jet_xy_witnesses(alg);
    CHECK(xy.all_pass);

    // computed-versus-displayed reports are present across the batteries
    int reported = 0;
    for (const auto& l : yi.lines)
        if (l.note.find("displayed") != std::string::npos) ++reported;
    for (const auto& l : xy.lines)
        if (l.note.find("displayed") != std::string::npos) ++reported;
    CHECK(reported >= 3);
}

TEST_CASE("bounded reducedness probe") {
    JetAlgebra alg(6);
    NonreducedReport nr = jet_nonreduced_check(alg, 2);
    CHECK(nr.product_in_ideal);
    CHECK(!nr.x_certificate_found);
    CHECK(!nr.y2_certificate_found);
    CHECK(nr.candidate_count > 0);
    CHECK(!nr.verdict.empty());
}

TEST_CASE("tensor embeddings are compatible algebra maps") {
    JetAlgebra alg(3);
    JetTensor t2(3, 2);
    CHECK(t2.embed(alg, alg.x(), 1) == t2.position(0));
    CHECK(t2.embed(alg, alg.y(), 1) == t2.position(1));
    CHECK(t2.embed(alg, alg.x(), 2) == t2.position(1));
    CHECK(t2.embed(alg, alg.y(), 2) == t2.position(2));
    CHECK(t2.embed(alg, alg.y_jet(2), 1) == t2.family(1, 2));
    CHECK(t2.embed(alg, alg.y_jet(2), 2) == t2.family(2, 2));
    MultiPoly p = alg.y_jet(1) * alg.x() + alg.y_jet(2);
    MultiPoly q = alg.y_jet(1).pow(-1);
    CHECK(t2.embed(alg, p * q, 1) == t2.embed(alg, p, 1) * t2.embed(alg, q, 1));
}
