#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <string>
#include <vector>

#include <hopfoid/cli.hpp>

using hopfoid::cli_run;
using hopfoid::CliResult;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_input_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kScalarModule = R"({"rank":1,"matrix":[["x"]]})";
const char* kScalarClass =
    R"({"module":{"rank":1,"matrix":[["x"]]},"functional":["1"],"vector":["1"]})";
const char* kUnitXClass =
    R"({"module":{"rank":1,"matrix":[["0"]]},"functional":["1"],"vector":["x"]})";
const char* kNilpotentModule = R"({"rank":2,"matrix":[["0","2*x"],["0","0"]]})";

}  // namespace

TEST_CASE("weyl-mul renders normal forms") {
    CliResult r = cli_run({"weyl-mul", "--expr", "x", "--expr", "Y"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "Y*x + 1\n");
    CHECK(cli_run({"weyl-mul", "--expr", "Y", "--expr", "x"}).out == "Y*x\n");
    CHECK(cli_run({"weyl-mul", "--expr", "Y^2", "--expr", "Y*x^2 + 3"}).out ==
          "Y^3*x^2 + Y^2*3\n");
    // Euler commutation rule: x Y = Y x + x
    CHECK(cli_run({"weyl-mul", "--delta", "x", "--expr", "x", "--expr", "Y"}).out ==
          "Y*x + x\n");
}

TEST_CASE("mod verbs emit canonical JSON") {
    std::string mx = write_temp("mx.json", kScalarModule);
    CliResult dualed = cli_run({"mod-dual", mx});
    CHECK(dualed.exit_code == 0);
    CHECK(dualed.out ==
          "{\n  \"matrix\": [\n    [\n      \"-x\"\n    ]\n  ],\n  \"rank\": 1\n}\n");

    CliResult tens = cli_run({"mod-tensor", mx, "--file", mx});
    CHECK(tens.exit_code == 0);
    CHECK(tens.out.find("\"rank\": 1") != std::string::npos);
    CHECK(tens.out.find("\"2*x\"") != std::string::npos);

    CliResult taylor = cli_run({"mod-taylor", "--expr", "x", "--order", "4"});
    CHECK(taylor.out == "x + Z\n");
    CliResult euler = cli_run({"mod-taylor", "--expr", "x^2", "--delta", "x", "--order", "3"});
    CHECK(euler.out == "x^2 + 2*x^2*Z + 2*x^2*Z^2 + 4/3*x^2*Z^3\n");
}

TEST_CASE("mod-solve finds horizontal vectors") {
    std::string nil = write_temp("nil.json", kNilpotentModule);
    CliResult r = cli_run({"mod-solve", nil});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2 solution(s)") != std::string::npos);
    CliResult j = cli_run({"mod-solve", nil, "--json"});
    CHECK(j.out.find("\"basis\"") != std::string::npos);
    CHECK(j.out.find("\"saturated\": false") != std::string::npos);
}

TEST_CASE("dual verbs evaluate, multiply and compare classes") {
    std::string cx = write_temp("cx.json", kScalarClass);
    std::string cu = write_temp("cu.json", kUnitXClass);

    CHECK(cli_run({"dual-zeta", cx, "--expr", "Y"}).out == "-x\n");
    CHECK(cli_run({"dual-zeta", cx, "--expr", "Y^2"}).out == "x^2 - 1\n");

    CliResult mul = cli_run({"dual-mul", cu, cu});
    CHECK(mul.exit_code == 0);
    CHECK(mul.out.find("\"x^2\"") != std::string::npos);

    CliResult same = cli_run({"dual-eq", cx, cx});
    CHECK(same.exit_code == 0);
    CHECK(same.out == "equal (saturation rank 1)\n");

    CliResult diff = cli_run({"dual-eq", cx, cu});
    CHECK(diff.exit_code == 1);
    CHECK(diff.out.find("different") == 0);

    CliResult cop = cli_run({"dual-coproduct", cu});
    CHECK(cop.exit_code == 0);
    CHECK(cop.out.find("\"left\"") != std::string::npos);
    CHECK(cop.out.find("\"right\"") != std::string::npos);
}

TEST_CASE("galois verbs") {
    std::string nil = write_temp("nil2.json", kNilpotentModule);
    CliResult gen = cli_run({"galois-gen", nil, "--i", "1", "--j", "1"});
    CHECK(gen.exit_code == 0);
    CHECK(gen.out.find("\"vector\"") != std::string::npos);
    CHECK(cli_run({"galois-gen", nil, "--i", "3", "--j", "1"}).exit_code == 2);

    // Rank-1 module [x]: the det class is the generator and its inverse
    // lives on the dual module, so the two outputs must differ.
    std::string mx = write_temp("mx2.json", kScalarModule);
    CliResult det = cli_run({"galois-det", mx});
    CHECK(det.exit_code == 0);
    CHECK(det.out.find("\"x\"") != std::string::npos);
    CliResult inv = cli_run({"galois-det", mx, "--inverse"});
    CHECK(inv.exit_code == 0);
    CHECK(inv.out.find("\"-x\"") != std::string::npos);
    CHECK(det.out != inv.out);

    CliResult chk = cli_run({"galois-antipode-check", nil});
    CHECK(chk.exit_code == 0);
    CHECK(chk.out.find("FAIL") == std::string::npos);
    CHECK(chk.out.find("det class is grouplike") != std::string::npos);

    CliResult pres = cli_run({"galois-present", "--rank", "2"});
    CHECK(pres.exit_code == 0);
    CHECK(pres.out.find("Delta(X11) = X12⊗X21 + X11⊗X11\n") != std::string::npos);
    CHECK(pres.out.find("S(X11) = X22*Dinv\n") != std::string::npos);
    CHECK(pres.out.find("det = X11*X22 - X12*X21\n") != std::string::npos);
    CHECK(pres.out.find("ok   antipode axiom") != std::string::npos);
}

TEST_CASE("pv verbs") {
    std::string nil = write_temp("nil3.json", kNilpotentModule);
    CHECK(cli_run({"pv-derive", nil, "--expr", "X11"}).out == "2*x*X21\n");
    CHECK(cli_run({"pv-derive", nil, "--expr", "x^2"}).out == "2*x\n");

    CliResult f = cli_run({"pv-fundamental", nil, "--order", "4"});
    CHECK(f.exit_code == 0);
    CHECK(f.out == "F[1][1] = 1\nF[1][2] = 2*x*Z + Z^2\nF[2][1] = 0\nF[2][2] = 1\n");
    CliResult fj = cli_run({"pv-fundamental", nil, "--order", "4", "--json"});
    CHECK(fj.out.find("\"order\": 4") != std::string::npos);

    CliResult rep = cli_run({"pv-report", nil});
    CHECK(rep.exit_code == 0);
    CHECK(rep.out.find("conclusion: PV ring is A itself; the isotropy group is trivial") !=
          std::string::npos);
}

TEST_CASE("jet verbs") {
    CHECK(cli_run({"jet-coproduct", "--n", "3"}).out ==
          "y3⊗y1 + 3*y1*y2⊗y2 + y1^3⊗y3\n");
    CHECK(cli_run({"jet-antipode", "--n", "4"}).out ==
          "-y1^-5*y4 + 10*y1^-6*y2*y3 - 15*y1^-7*y2^3\n");
    CHECK(cli_run({"jet-antipode", "--expr", "x*y1 - y", "--order", "3"}).out ==
          "y*y1^-1 - x\n");

    CliResult ax = cli_run({"jet-axioms", "--order", "6", "--max-n", "4"});
    CHECK(ax.exit_code == 0);
    CHECK(ax.out.find("FAIL") == std::string::npos);

    CliResult ideal = cli_run({"jet-ideal-check", "--order", "6", "--bound", "2"});
    CHECK(ideal.exit_code == 0);
    CHECK(ideal.out.find("FAIL") == std::string::npos);
    CHECK(ideal.out.find("bounded reducedness probe") != std::string::npos);
}

TEST_CASE("exit codes distinguish failure kinds") {
    // 2: usage problems (wrong arity, unknown flags, bad syntax)
    CHECK(cli_run({"dual-eq", write_temp("one.json", kScalarClass)}).exit_code == 2);
    CHECK(cli_run({"no-such-verb"}).exit_code == 2);
    CHECK(cli_run({}).exit_code == 2);
    CHECK(cli_run({"mod-taylor", "--expr", "x +"}).exit_code == 2);
    CHECK(cli_run({"mod-dual", "missing_file.json"}).exit_code == 2);
    CHECK(cli_run({"mod-dual", "--expr", "not json"}).exit_code == 2);

    // 1: well-formed input, failing computation
    CHECK(cli_run({"jet-antipode", "--expr", "y2^-1", "--order", "3"}).exit_code == 1);
    CHECK(cli_run({"dual-zeta", write_temp("c.json", kScalarClass), "--expr", "Y + q"})
              .exit_code == 1);

    // --help succeeds
    CliResult help = cli_run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("suite") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    std::string nil = write_temp("nil4.json", kNilpotentModule);
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"galois-det", nil},
          std::vector<std::string>{"pv-fundamental", nil, "--order", "6", "--json"},
          std::vector<std::string>{"jet-coproduct", "--n", "4"}}) {
        CliResult a = cli_run(args);
        CliResult b = cli_run(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}
