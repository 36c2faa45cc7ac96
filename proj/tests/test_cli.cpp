#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "hopfk/brace.hpp"
#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"
#include "hopfk/hopffile.hpp"
#include "hopfk/zoo.hpp"

using namespace hopfk;
using testutil::require_pass;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

ErrorKind parse_error_kind(const std::string& text) {
    try {
        parse_hopf_text(text);
    } catch (const HopfError& e) {
        return e.kind();
    }
    FAIL("parsed");
    return ErrorKind::UnknownObject;
}

const std::string header = "NAME t\nFIELD Q\nBASIS 1 a\n";
const std::string z2_tables =
    "MULT\nmult 1 1 = 1\nmult 1 a = a\nmult a 1 = a\nmult a a = 1\nUNIT\nunit = 1\n"
    "COUNIT\ncounit 1 = 1\ncounit a = 1\n"
    "COMUL comul\ncomul 1 = 1(*)1\ncomul a = a(*)a\nANTIPODE antipode\nantipode 1 = 1\nantipode a = a\n";

}  // namespace

TEST_CASE("the shipped h4.hopf is Sweedler's algebra") {
    const ParsedFile f = parse_hopf_file("data/h4.hopf");
    REQUIRE(f.kind == FileKind::hopf);
    require_pass(compare_hopf_tables(*f.hopf, sweedler_h4()));
    require_pass(check_hopf(*f.hopf));
}

TEST_CASE("broken-h4.hopf parses and fails the antipode law at x") {
    const ParsedFile f = parse_hopf_file("data/broken-h4.hopf");
    REQUIRE(f.hopf.has_value());
    const CheckReport r = check_hopf(*f.hopf);
    CHECK_FALSE(r.pass);
    CHECK(r.failed_axiom == "left antipode");
    CHECK(r.witness_labels == std::vector<std::string>{"x"});
}

TEST_CASE("the rmatrix file resolves a file and a zoo reference") {
    const ParsedFile f = parse_hopf_file("data/h4-z2-rmatrix.hopf");
    REQUIRE(f.kind == FileKind::rmatrix);
    CHECK(f.rmatrix->R == h4_z2_rmatrix(FieldSpec::rationals()));
    require_pass(check_weak_rmatrix(f.rmatrix->H, f.rmatrix->A, f.rmatrix->R));
}

TEST_CASE("parse errors") {
    REQUIRE(parse_hopf_text(header + z2_tables).hopf.has_value());

    SUBCASE("empty MULT lists the missing entries") {
        try {
            parse_hopf_text(header + "MULT\nUNIT\nunit = 1\n");
            FAIL("parsed");
        } catch (const HopfError& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
            const std::string msg = e.what();
            CHECK(msg.find("[mult 1 1]") != std::string::npos);
            CHECK(msg.find("[mult a a]") != std::string::npos);
        }
    }
    SUBCASE("unknown label") {
        std::string t = z2_tables;
        t.replace(t.find("mult a a = 1"), 12, "mult a a = b");
        CHECK(parse_error_kind(header + t) == ErrorKind::ParseError);
    }
    SUBCASE("duplicate entry") {
        CHECK(parse_error_kind(header + z2_tables + "MULT\nmult 1 1 = 1\n") == ErrorKind::ParseError);
        std::string t = z2_tables;
        t.insert(t.find("mult a a"), "mult a a = a\n");
        CHECK(parse_error_kind(header + t) == ErrorKind::ParseError);
    }
    SUBCASE("syntax error carries the line number") {
        std::string t = z2_tables;
        t.replace(t.find("mult 1 a = a"), 12, "mult 1 a a");
        try {
            parse_hopf_text(header + t);
            FAIL("parsed");
        } catch (const HopfError& e) {
            CHECK(std::string(e.what()).find("line 6") != std::string::npos);
        }
    }
    SUBCASE("missing counit entry is an error, not a zero") {
        std::string t = z2_tables;
        t.erase(t.find("counit a = 1\n"), 13);
        CHECK(parse_error_kind(header + t) == ErrorKind::ParseError);
    }
}

TEST_CASE("two COMUL sections give a brace candidate") {
    const BraceData b = cop_brace(sweedler_h4());
    const std::string text = serialize(b);
    const ParsedFile f = parse_hopf_text(text);
    REQUIRE(f.kind == FileKind::brace);
    require_pass(compare_braces(*f.brace, b));
    require_pass(check_brace(*f.brace));
    CHECK(serialize(*f.brace) == text);
}

TEST_CASE("parse . serialize is the identity on the zoo") {
    for (const auto& n : zoo_names(ZooKind::hopf)) {
        INFO(n);
        const HopfData h = zoo_hopf(n);
        const ParsedFile f = parse_hopf_text(serialize(h));
        REQUIRE(f.hopf.has_value());
        CHECK(compare_hopf_tables(*f.hopf, h).pass);
    }
    for (const auto& n : zoo_names(ZooKind::brace)) {
        INFO(n);
        const BraceData b = zoo_brace(n);
        const ParsedFile f = parse_hopf_text(serialize(b));
        REQUIRE(f.brace.has_value());
        CHECK(compare_braces(*f.brace, b).pass);
    }
    for (const auto& n : zoo_names(ZooKind::matched)) {
        INFO(n);
        const MatchedPairData mp = zoo_matched(n);
        const ParsedFile f = parse_hopf_text(serialize(mp));
        REQUIRE(f.matched.has_value());
        CHECK(compare_matched(*f.matched, mp).pass);
    }
    for (const auto& n : zoo_names(ZooKind::rmatrix)) {
        INFO(n);
        const ZooRMatrix r = zoo_rmatrix(n);
        const ParsedFile f = parse_hopf_text(serialize(r));
        REQUIRE(f.rmatrix.has_value());
        CHECK(f.rmatrix->kind == r.kind);
        CHECK(f.rmatrix->R == r.R);
        CHECK(compare_hopf_tables(f.rmatrix->H, r.H).pass);
        CHECK(compare_hopf_tables(f.rmatrix->A, r.A).pass);
    }
    const HopfData f5 = zoo_hopf("h4-z2", {FieldSpec::prime(5)});
    CHECK(compare_hopf_tables(*parse_hopf_text(serialize(f5)).hopf, f5).pass);
}

TEST_CASE("check commands") {
    CHECK(run({"check", "brace", "zoo:h4-z2"}).code == exit_pass);
    CHECK(run({"check", "braid", "zoo:dual-s3-cop"}).code == exit_pass);
    CHECK(run({"check", "hopf", "data/h4.hopf"}).code == exit_pass);
    CHECK(run({"check", "rmatrix", "data/h4-z2-rmatrix.hopf"}).code == exit_pass);
    CHECK(run({"check", "matched", "zoo:h4-z2"}).code == exit_pass);
    CHECK(run({"check", "cocycle", "zoo:dual-s3-cop"}).code == exit_pass);
    CHECK(run({"check", "cocycle", "zoo:laurent"}).code == exit_pass);
    CHECK(run({"check", "brace", "zoo:laurent", "--window", "1", "3"}).code == exit_pass);
    CHECK(run({"check", "rmatrix", "zoo:long-d4"}).code == exit_pass);
    CHECK(run({"check", "brace", "zoo:h4-z2", "--field", "Fp:5"}).code == exit_pass);

    const Run broken = run({"check", "hopf", "data/broken-h4.hopf"});
    CHECK(broken.code == exit_fail);
    CHECK(broken.out.find("FAIL") == 0);
    CHECK(broken.out.find("(x)") != std::string::npos);

    // 1/2 does not exist in F2
    CHECK(run({"check", "brace", "zoo:h4-z2", "--field", "Fp:2"}).code == exit_fail);
}

TEST_CASE("structured reports") {
    const Run r = run({"check", "hopf", "data/broken-h4.hopf", "--output", "structured"});
    CHECK(r.code == exit_fail);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "fail");
    CHECK(j["object_name"] == "broken-h4");
    CHECK(j["failed_axiom"] == "left antipode");
    CHECK(j["witness_labels"] == nlohmann::json::array({"x"}));
    REQUIRE(j["residual"].size() == 2);
    CHECK(j["residual"][0]["labels"] == nlohmann::json::array({"x"}));
    CHECK(j["residual"][0]["coefficient"] == "1");
    CHECK(j["residual"][1]["labels"] == nlohmann::json::array({"gx"}));
    CHECK(j["residual"][1]["coefficient"] == "-1");

    const auto p = nlohmann::json::parse(run({"check", "brace", "zoo:h4-z2", "--output", "structured"}).out);
    CHECK(p["status"] == "pass");
    CHECK(p["residual"].empty());
}

TEST_CASE("reports are deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"check", "hopf", "data/broken-h4.hopf", "--output", "structured"},
             {"check", "braid", "zoo:dual-s3-cop"},
             {"braid", "export", "zoo:dual-s3-cop", "--output", "structured"},
             {"zoo", "list"}}) {
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("exit codes for usage and parse errors") {
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"check", "nope", "zoo:z2"}).code == exit_usage);
    CHECK(run({"check", "hopf", "zoo:no-such-object"}).code == exit_usage);
    CHECK(run({"check", "hopf", "zoo:z2", "--bogus"}).code == exit_usage);
    CHECK(run({"check", "brace", "zoo:double-dual-s3"}).code == exit_usage);
    CHECK(run({"check", "hopf", "data/does-not-exist.hopf"}).code == exit_parse);

    const Run s = run({"check", "hopf", "zoo:no-such-object", "--output", "structured"});
    const auto j = nlohmann::json::parse(s.out);
    CHECK(j["status"] == "error");
    CHECK(j["error_kind"] == "usage");
    CHECK(j["message"].get<std::string>().find("UnknownObject") == 0);
}

TEST_CASE("build and braid export") {
    const std::string dir = "build/test-artifacts";
    std::filesystem::create_directories(dir);
    const std::string bic = dir + "/h4-z2.hopf";
    CHECK(run({"build", "bicrossed", "zoo:h4-z2", "-o", bic}).code == exit_pass);
    require_pass(compare_hopf_tables(*parse_hopf_file(bic).hopf, zoo_hopf("h4-z2")));
    CHECK(run({"check", "hopf", bic}).code == exit_pass);

    const std::string dd = dir + "/dd-z3.hopf";
    CHECK(run({"build", "double-dual", "zoo:z3", "-o", dd}).code == exit_pass);
    CHECK(run({"check", "brace", dd}).code == exit_pass);
    require_pass(compare_braces(*parse_hopf_file(dd).brace, zoo_brace("double-dual-z3")));

    const std::string cb = dir + "/cop-h4.hopf";
    CHECK(run({"build", "cop-brace", "data/h4.hopf", "-o", cb}).code == exit_pass);
    require_pass(compare_braces(*parse_hopf_file(cb).brace, cop_brace(sweedler_h4())));

    const std::string tw = dir + "/long-d4.hopf";
    CHECK(run({"build", "twist", "zoo:long-d4", "-o", tw}).code == exit_pass);
    require_pass(compare_braces(*parse_hopf_file(tw).brace, zoo_brace("long-d4")));

    const std::string sm = dir + "/smash.hopf";
    CHECK(run({"build", "smash", "zoo:graded-z3", "-o", sm}).code == exit_pass);
    CHECK(run({"check", "hopf", sm}).code == exit_pass);

    // the c-matrix of a 6-dimensional brace has 36 rows
    const Run e = run({"braid", "export", "zoo:dual-s3-cop"});
    CHECK(e.code == exit_pass);
    std::istringstream lines(e.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) rows += line.rfind("c ", 0) == 0;
    CHECK(rows == 36);
    CHECK(e.out.find("c f_e f_r = f_r(*)f_e") != std::string::npos);
}
