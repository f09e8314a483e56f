#include "hopfoid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "hopfoid/acceptance.hpp"
#include "hopfoid/diffmodule.hpp"
#include "hopfoid/dual.hpp"
#include "hopfoid/galois.hpp"
#include "hopfoid/jet.hpp"
#include "hopfoid/jsonio.hpp"
#include "hopfoid/parse.hpp"
#include "hopfoid/pv.hpp"
#include "hopfoid/solve.hpp"
#include "hopfoid/truncseries.hpp"
#include "hopfoid/weyl.hpp"

namespace hopfoid {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inputs for one verb: file contents (flag order, then positional order)
// followed by inline expressions.
struct Io {
    std::vector<std::string> files;
    std::vector<std::string> pos;
    std::vector<std::string> exprs;

    std::vector<std::string> payloads() const {
        std::vector<std::string> out;
        for (const auto& f : files) out.push_back(slurp(f));
        for (const auto& f : pos) out.push_back(slurp(f));
        for (const auto& e : exprs) out.push_back(e);
        return out;
    }
};

void add_io(CLI::App* cmd, Io& io) {
    cmd->add_option("--file", io.files, "input file (JSON or expression)");
    cmd->add_option("paths", io.pos, "input files (positional)");
    cmd->add_option("--expr", io.exprs, "inline input");
}

std::vector<std::string> need(const Io& io, size_t n, const char* what) {
    auto p = io.payloads();
    if (p.size() != n)
        throw UsageError(std::string("expected ") + std::to_string(n) + " input(s): " + what);
    return p;
}

DiffModule parse_module(const std::string& text) {
    return module_from_json(Json::parse(text));
}

DualClass parse_dual(const std::string& text) {
    return dual_from_json(Json::parse(text));
}

std::string check_line(bool pass, const std::string& name,
                       const std::string& note = "") {
    std::string s = (pass ? "ok   " : "FAIL ") + name;
    if (!note.empty()) s += "  -- " + note;
    return s + "\n";
}

std::string print_report(const AxiomReport& rep) {
    std::string s;
    for (const auto& l : rep.lines) s += check_line(l.pass, l.name, l.note);
    return s;
}

}  // namespace

CliResult cli_run(std::vector<std::string> args) {
    std::ostringstream out;
    int code = 0;

    CLI::App app{"hopfoid: exact differential-module, finite-dual and jet "
                 "Hopf-algebroid toolkit over Q[x]"};
    app.require_subcommand(1);

    // ---- weyl-mul ----------------------------------------------------
    {
        auto io = std::make_shared<Io>();
        auto delta = std::make_shared<std::string>("1");
        auto as_json = std::make_shared<bool>(false);
        auto* c = app.add_subcommand(
            "weyl-mul", "product of two operators in right normal form");
        add_io(c, *io);
        c->add_option("--delta", *delta, "derivation coefficient c(x)");
        c->add_flag("--json", *as_json, "JSON output");
        c->callback([=, &out]() {
            auto p = need(*io, 2, "two operator expressions");
            auto ctx = std::make_shared<const WeylContext>(parse_unipoly(*delta));
            WeylElement prod = parse_weyl(p[0], ctx) * parse_weyl(p[1], ctx);
            if (*as_json)
                out << json_text(weyl_to_json(prod));
            else
                out << prod.str() << "\n";
        });
    }

    // ---- mod-tensor / mod-dual / mod-solve / mod-taylor ---------------
    {
        auto io = std::make_shared<Io>();
        auto* c = app.add_subcommand("mod-tensor",
                                     "tensor product of two modules");
        add_io(c, *io);
        c->callback([=, &out]() {
            auto p = need(*io, 2, "two module JSON inputs");
            out << json_text(module_to_json(
                tensor(parse_module(p[0]), parse_module(p[1]))));
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto* c = app.add_subcommand("mod-dual", "dual module");
        add_io(c, *io);
        c->callback([=, &out]() {
            auto p = need(*io, 1, "one module JSON input");
            out << json_text(module_to_json(dual(parse_module(p[0]))));
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto bound = std::make_shared<int>(-1);
        auto as_json = std::make_shared<bool>(false);
        auto* c = app.add_subcommand(
            "mod-solve", "basis of polynomial horizontal vectors");
        add_io(c, *io);
        c->add_option("--bound", *bound, "degree bound (default: automatic)");
        c->add_flag("--json", *as_json, "JSON output");
        c->callback([=, &out]() {
            auto p = need(*io, 1, "one module JSON input");
            DiffModule m = parse_module(p[0]);
            int b = *bound >= 0 ? *bound : default_degree_bound(m);
            SolutionSpace s = poly_solutions(m, b);
            if (*as_json) {
                Json basis = Json::array();
                for (const auto& v : s.basis) {
                    Json jv = Json::array();
                    for (const auto& e : v) jv.push_back(e.str());
                    basis.push_back(std::move(jv));
                }
                out << json_text(Json{{"degree_bound", s.degree_bound},
                                      {"saturated", s.saturated},
                                      {"basis", basis}});
                return;
            }
            out << "degree bound " << s.degree_bound << ", "
                << s.basis.size() << " solution(s)"
                << (s.saturated ? " (bound reached: possibly incomplete)" : "")
                << "\n";
            for (const auto& v : s.basis) {
                out << "(";
                for (size_t i = 0; i < v.size(); ++i)
                    out << (i ? ", " : "") << v[i].str();
                out << ")\n";
            }
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto delta = std::make_shared<std::string>("1");
        auto order = std::make_shared<int>(-1);
        auto* c = app.add_subcommand(
            "mod-taylor", "universal Taylor expansion of a polynomial");
        add_io(c, *io);
        c->add_option("--delta", *delta, "derivation coefficient c(x)");
        c->add_option("--order", *order, "truncation order");
        c->callback([=, &out]() {
            auto p = need(*io, 1, "one polynomial expression");
            int n = *order >= 0 ? *order : TruncSeries::default_order();
            out << taylor(parse_unipoly(p[0]), parse_unipoly(*delta), n).str()
                << "\n";
        });
    }

    // ---- dual-* -------------------------------------------------------
    {
        auto io = std::make_shared<Io>();
        auto* c = app.add_subcommand("dual-mul",
                                     "convolution product of two classes");
        add_io(c, *io);
        c->callback([=, &out]() {
            auto p = need(*io, 2, "two class JSON inputs");
            out << json_text(
                dual_to_json(dual_mul(parse_dual(p[0]), parse_dual(p[1]))));
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto* c = app.add_subcommand(
            "dual-eq", "decide equality of two classes (exit 1 if different)");
        add_io(c, *io);
        c->callback([=, &out, &code]() {
            auto p = need(*io, 2, "two class JSON inputs");
            EqualityResult r = dual_equal(parse_dual(p[0]), parse_dual(p[1]));
            if (r.equal) {
                out << "equal (saturation rank " << r.saturation_rank << ")\n";
            } else {
                out << "different (saturation rank " << r.saturation_rank
                    << ", witness degree " << r.witness << ")\n";
                code = 1;
            }
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto* c = app.add_subcommand(
            "dual-zeta", "evaluate a class on an operator (class, operator)");
        add_io(c, *io);
        c->callback([=, &out]() {
            auto p = need(*io, 2, "a class JSON and an operator expression");
            DualClass cl = parse_dual(p[0]);
            WeylElement u = parse_weyl(p[1], standard_weyl());
            out << zeta_eval(cl, u).str() << "\n";
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto* c = app.add_subcommand("dual-coproduct",
                                     "structural coproduct of a class");
        add_io(c, *io);
        c->callback([=, &out]() {
            auto p = need(*io, 1, "one class JSON input");
            Json legs = Json::array();
            for (const auto& [l, r] : dual_coproduct(parse_dual(p[0])))
                legs.push_back(
                    Json{{"left", dual_to_json(l)}, {"right", dual_to_json(r)}});
            out << json_text(legs);
        });
    }

    // ---- galois-* -----------------------------------------------------
    {
        auto io = std::make_shared<Io>();
        auto gi = std::make_shared<int>(0);
        auto gj = std::make_shared<int>(0);
        auto* c = app.add_subcommand(
            "galois-gen", "matrix-coefficient generator u_ij (1-based)");
        add_io(c, *io);
        c->add_option("--i", *gi, "row index")->required();
        c->add_option("--j", *gj, "column index")->required();
        c->callback([=, &out]() {
            auto p = need(*io, 1, "one module JSON input");
            DiffModule m = parse_module(p[0]);
            if (*gi < 1 || *gj < 1 || *gi > m.rank() || *gj > m.rank())
                throw UsageError("generator indices must lie in 1..rank");
            out << json_text(dual_to_json(
                minimize(galois_generator(m, *gi - 1, *gj - 1))));
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto inv = std::make_shared<bool>(false);
        auto* c = app.add_subcommand("galois-det",
                                     "determinant grouplike class");
        add_io(c, *io);
        c->add_flag("--inverse", *inv, "emit the inverse class instead");
        c->callback([=, &out]() {
            auto p = need(*io, 1, "one module JSON input");
            DiffModule m = parse_module(p[0]);
            out << json_text(dual_to_json(
                *inv ? galois_det_inverse(m) : minimize(galois_det(m))));
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto* c = app.add_subcommand(
            "galois-antipode-check",
            "verify the cofactor antipode and Laplace identities");
        add_io(c, *io);
        c->callback([=, &out, &code]() {
            auto p = need(*io, 1, "one module JSON input");
            GaloisContext g(parse_module(p[0]));
            bool all = true;
            for (int i = 0; i < g.rank(); ++i)
                for (int j = 0; j < g.rank(); ++j) {
                    bool ok = g.antipode_cofactor_check(i, j);
                    all = all && ok;
                    out << check_line(
                        ok, "S(u_" + std::to_string(i + 1) +
                                std::to_string(j + 1) +
                                ") == det^-1 * cofactor");
                }
            for (int i = 0; i < g.rank(); ++i)
                for (int j = 0; j < g.rank(); ++j) {
                    bool ok = g.laplace_check(i, j);
                    all = all && ok;
                    out << check_line(
                        ok, "Laplace expansion row " + std::to_string(i + 1) +
                                " against row " + std::to_string(j + 1));
                }
            bool gl = g.grouplike_check();
            all = all && gl;
            out << check_line(gl, "det class is grouplike");
            EqualityResult unit = dual_equal(
                dual_mul(g.det_minimized(), g.det_inverse()),
                unit_class(UniPoly(1), UniPoly(1)));
            all = all && unit.equal;
            out << check_line(unit.equal, "det * det^-1 == unit");
            code = all ? 0 : 1;
        });
    }
    {
        auto rank = std::make_shared<int>(2);
        auto* c = app.add_subcommand(
            "galois-present",
            "symbolic presentation (A(x)A)[X_ij, det^-1] with its structure");
        c->add_option("--rank", *rank, "matrix size m")->required();
        c->callback([=, &out, &code]() {
            Presentation pr(*rank);
            for (int i = 0; i < *rank; ++i)
                for (int j = 0; j < *rank; ++j) {
                    out << "Delta(X" << i + 1 << j + 1 << ") = ";
                    auto legs = pr.coproduct(pr.X(i, j));
                    for (size_t k = 0; k < legs.size(); ++k) {
                        if (k) out << " + ";
                        const auto& [l, r] = legs[k];
                        auto wrap = [](const MultiPoly& q) {
                            return q.is_monomial() ? q.str()
                                                   : "(" + q.str() + ")";
                        };
                        out << wrap(l) << "⊗" << wrap(r);
                    }
                    out << "\n";
                }
            for (int i = 0; i < *rank; ++i)
                for (int j = 0; j < *rank; ++j)
                    out << "eps(X" << i + 1 << j + 1
                        << ") = " << pr.counit(pr.X(i, j)).str() << "\n";
            for (int i = 0; i < *rank; ++i)
                for (int j = 0; j < *rank; ++j)
                    out << "S(X" << i + 1 << j + 1
                        << ") = " << pr.antipode(pr.X(i, j)).str() << "\n";
            out << "det = " << pr.det_poly().str() << "\n";
            bool ax = pr.antipode_axiom();
            out << check_line(ax, "antipode axiom sum_k X_ik S(X_kj) == "
                                  "delta_ij after normalization");
            code = ax ? 0 : 1;
        });
    }

    // ---- pv-* ----------------------------------------------------------
    {
        auto io = std::make_shared<Io>();
        auto* c = app.add_subcommand(
            "pv-derive", "derivation in the solution ring (module, element)");
        add_io(c, *io);
        c->callback([=, &out]() {
            auto p = need(*io, 2, "a module JSON and a ring expression");
            PVRing ring(parse_module(p[0]));
            out << ring.derive(ring.parse(p[1])).str() << "\n";
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto order = std::make_shared<int>(-1);
        auto as_json = std::make_shared<bool>(false);
        auto* c = app.add_subcommand("pv-fundamental",
                                     "truncated fundamental solution matrix");
        add_io(c, *io);
        c->add_option("--order", *order, "truncation order");
        c->add_flag("--json", *as_json, "JSON output");
        c->callback([=, &out]() {
            auto p = need(*io, 1, "one module JSON input");
            DiffModule m = parse_module(p[0]);
            int n = *order >= 0 ? *order : TruncSeries::default_order();
            FundamentalMatrix f = pv_fundamental(m, n);
            if (*as_json) {
                out << json_text(fundamental_to_json(f));
                return;
            }
            for (int i = 0; i < m.rank(); ++i)
                for (int j = 0; j < m.rank(); ++j)
                    out << "F[" << i + 1 << "][" << j + 1
                        << "] = " << f[i][j].str() << "\n";
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto* c = app.add_subcommand(
            "pv-report", "certified description of the isotropy generators");
        add_io(c, *io);
        c->callback([=, &out]() {
            auto p = need(*io, 1, "one module JSON input");
            PVReport rep = pv_report(parse_module(p[0]));
            for (const auto& l : rep.lines) out << l << "\n";
        });
    }

    // ---- jet-* ----------------------------------------------------------
    auto jet_input = [](const Io& io, int n, int order) {
        int r = order;
        if (r < 0) r = n >= 1 ? std::max(n, 2) : TruncSeries::default_order();
        JetAlgebra alg(r);
        MultiPoly p = alg.zero();
        if (n >= 1) {
            if (!io.payloads().empty())
                throw UsageError("give either --n or an expression, not both");
            p = alg.y_jet(n);
        } else {
            auto pay = io.payloads();
            if (pay.size() != 1)
                throw UsageError("expected --n or exactly one expression");
            p = alg.parse(pay[0]);
        }
        return std::make_pair(alg, p);
    };
    {
        auto io = std::make_shared<Io>();
        auto n = std::make_shared<int>(0);
        auto order = std::make_shared<int>(-1);
        auto* c = app.add_subcommand("jet-coproduct",
                                     "chain-rule coproduct in the jet algebra");
        add_io(c, *io);
        c->add_option("--n", *n, "jet coordinate index");
        c->add_option("--order", *order, "jet order r");
        c->callback([=, &out]() {
            auto [alg, p] = jet_input(*io, *n, *order);
            JetTensor t2(alg.order(), 2);
            out << tensor2_str(t2, jet_coproduct(alg, t2, p)) << "\n";
        });
    }
    {
        auto io = std::make_shared<Io>();
        auto n = std::make_shared<int>(0);
        auto order = std::make_shared<int>(-1);
        auto* c = app.add_subcommand("jet-antipode",
                                     "antipode in the jet algebra");
        add_io(c, *io);
        c->add_option("--n", *n, "jet coordinate index");
        c->add_option("--order", *order, "jet order r");
        c->callback([=, &out]() {
            auto [alg, p] = jet_input(*io, *n, *order);
            out << alg.antipode(p).str() << "\n";
        });
    }
    {
        auto order = std::make_shared<int>(8);
        auto max_n = std::make_shared<int>(6);
        auto* c = app.add_subcommand(
            "jet-axioms", "machine-check the Hopf-algebroid axioms");
        c->add_option("--order", *order, "jet order r");
        c->add_option("--max-n", *max_n, "highest jet coordinate checked");
        c->callback([=, &out, &code]() {
            AxiomReport rep =
                jet_axiom_suite(JetAlgebra(*order), std::min(*max_n, *order));
            out << print_report(rep);
            code = rep.all_pass ? 0 : 1;
        });
    }
    {
        auto ideal = std::make_shared<std::string>("both");
        auto order = std::make_shared<int>(6);
        auto bound = std::make_shared<int>(2);
        auto* c = app.add_subcommand(
            "jet-ideal-check",
            "witness batteries for the differential Hopf ideals");
        c->add_option("--ideal", *ideal, "pairs | prolongation | both")
            ->check(CLI::IsMember({"pairs", "prolongation", "both"}));
        c->add_option("--order", *order, "jet order r");
        c->add_option("--bound", *bound,
                      "degree bound for the reducedness search");
        c->callback([=, &out, &code]() {
            JetAlgebra alg(*order);
            bool all = true;
            if (*ideal != "prolongation") {
                AxiomReport rep = jet_yi_witnesses(alg);
                out << print_report(rep);
                all = all && rep.all_pass;
            }
            if (*ideal != "pairs") {
                AxiomReport rep = jet_xy_witnesses(alg);
                out << print_report(rep);
                all = all && rep.all_pass;
                NonreducedReport nr = jet_nonreduced_check(alg, *bound);
                bool ok = nr.product_in_ideal && !nr.x_certificate_found &&
                          !nr.y2_certificate_found;
                out << check_line(ok, "bounded reducedness probe", nr.verdict);
                all = all && ok;
            }
            code = all ? 0 : 1;
        });
    }

    // ---- suite ----------------------------------------------------------
    {
        auto* c = app.add_subcommand("suite", "run the full acceptance battery");
        c->callback([&out, &code]() {
            AcceptanceReport rep = run_acceptance();
            out << rep.table();
            code = rep.all_pass ? 0 : 1;
        });
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {2, std::string("usage error: ") + e.what() + "\n"};
    } catch (const UsageError& e) {
        return {2, std::string("usage error: ") + e.what() + "\n"};
    } catch (const ParseError& e) {
        return {2, std::string("parse error: ") + e.what() + "\n"};
    } catch (const Json::exception& e) {
        return {2, std::string("input error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
    return {code, out.str()};
}

}  // namespace hopfoid
