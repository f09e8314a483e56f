#include "hopfoid/jsonio.hpp"

#include <stdexcept>

#include "hopfoid/parse.hpp"
#include "hopfoid/polymatrix.hpp"

namespace hopfoid {

Json module_to_json(const DiffModule& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.rank(); ++j)
            row.push_back(m.matrix.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"rank", m.rank()}, {"matrix", rows}};
}

DiffModule module_from_json(const Json& j) {
    int rank = j.at("rank").get<int>();
    if (rank < 0) throw std::invalid_argument("module JSON: negative rank");
    const Json& rows = j.at("matrix");
    if (static_cast<int>(rows.size()) != rank)
        throw std::invalid_argument("module JSON: matrix row count != rank");
    PolyMatrix mat(rank, rank);
    for (int i = 0; i < rank; ++i) {
        const Json& row = rows.at(i);
        if (static_cast<int>(row.size()) != rank)
            throw std::invalid_argument(
                "module JSON: matrix column count != rank");
        for (int k = 0; k < rank; ++k)
            mat.at(i, k) = parse_unipoly(row.at(k).get<std::string>());
    }
    return DiffModule(mat);
}

namespace {

Json poly_list(const std::vector<UniPoly>& v) {
    Json out = Json::array();
    for (const auto& p : v) out.push_back(p.str());
    return out;
}

std::vector<UniPoly> poly_list_from(const Json& j) {
    std::vector<UniPoly> out;
    out.reserve(j.size());
    for (const auto& s : j) out.push_back(parse_unipoly(s.get<std::string>()));
    return out;
}

}  // namespace

Json dual_to_json(const DualClass& c) {
    return Json{{"module", module_to_json(c.module)},
                {"functional", poly_list(c.functional)},
                {"vector", poly_list(c.vector)}};
}

DualClass dual_from_json(const Json& j) {
    return DualClass(module_from_json(j.at("module")),
                     poly_list_from(j.at("functional")),
                     poly_list_from(j.at("vector")));
}

Json weyl_to_json(const WeylElement& u) {
    Json out = Json::array();
    for (const auto& [n, a] : u.coeffs())
        out.push_back(Json::array({n, a.str()}));
    return out;
}

WeylElement weyl_from_json(const Json& j, const WeylCtxPtr& ctx) {
    WeylElement acc(ctx);
    for (const auto& pair : j) {
        int n = pair.at(0).get<int>();
        UniPoly a = parse_unipoly(pair.at(1).get<std::string>());
        acc = acc + WeylElement::term(ctx, n, a);
    }
    return acc;
}

Json fundamental_to_json(const FundamentalMatrix& f) {
    int order = f.empty() ? 0 : f[0][0].order();
    Json rows = Json::array();
    for (const auto& row : f) {
        Json jrow = Json::array();
        for (const auto& s : row) {
            Json coeffs = Json::array();
            for (int n = 0; n <= s.order(); ++n)
                coeffs.push_back(s.coeff(n).str());
            jrow.push_back(std::move(coeffs));
        }
        rows.push_back(std::move(jrow));
    }
    return Json{{"order", order}, {"matrix", rows}};
}

FundamentalMatrix fundamental_from_json(const Json& j) {
    int order = j.at("order").get<int>();
    FundamentalMatrix out;
    for (const auto& jrow : j.at("matrix")) {
        std::vector<TruncSeries> row;
        for (const auto& coeffs : jrow) {
            std::vector<UniPoly> c;
            for (const auto& s : coeffs)
                c.push_back(parse_unipoly(s.get<std::string>()));
            row.emplace_back(order, std::move(c));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json multipoly_to_json(const MultiPoly& p) {
    Json vars = Json::array();
    for (int i = 0; i < p.vars()->size(); ++i)
        vars.push_back(Json{{"name", p.vars()->names[i]},
                            {"invertible", bool(p.vars()->invertible[i])}});
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"coeff", c.str()}, {"exps", e}});
    return Json{{"vars", vars}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const Json& j) {
    std::vector<std::pair<std::string, bool>> spec;
    for (const auto& v : j.at("vars"))
        spec.emplace_back(v.at("name").get<std::string>(),
                          v.at("invertible").get<bool>());
    VarTablePtr vars = make_vars(std::move(spec));
    MultiPoly acc(vars);
    for (const auto& t : j.at("terms")) {
        Rational c(t.at("coeff").get<std::string>());
        MultiPoly::Exps e = t.at("exps").get<MultiPoly::Exps>();
        acc = acc + MultiPoly::monomial(vars, c, e);
    }
    return acc;
}

std::string json_text(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace hopfoid
