#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eigenscheme/cli.hpp"
#include "eigenscheme/io.hpp"
#include "support.hpp"

using namespace eigenscheme;
using testsupport::matrix;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("eigenscheme_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

const std::string nondiag = "3 3\n2 1 1\n0 1 1\n0 0 1\n";

}  // namespace

TEST_CASE("matrix formats round trip") {
    const QMatrix M = matrix(2, 3, {1, -2, 0, 3, 4, 5});
    QMatrix H = M;
    H(0, 1) = Rational(-7, 3);
    CHECK(parse_matrix(matrix_to_text(H)) == H);
    CHECK(parse_matrix(matrix_to_json(H).dump()) == H);
    CHECK(matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"entries":["1","1/2","0","-3"]})")) ==
          (QMatrix(2, 2) << 1, Rational(1, 2), 0, -3).finished());
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3 x"), ParseError);
    const JordanSpec spec{{EigenBlocks{Rational(1, 2), {{3, 1}, {1, 2}}}, EigenBlocks{-4, {{2, 2}}}}};
    CHECK(spec_from_json(spec_to_json(spec)) == spec);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"([{"lambda":"0","blocks":[[1,1],[2,1]]}])")), ValidationError);
}

TEST_CASE("ideal and gb verbs") {
    const std::string f = temp_file("nondiag.txt", nondiag);
    const Result ideal = run({"ideal", "--matrix", f, "--format", "json"});
    CHECK(ideal.code == 0);
    CHECK(Json::parse(ideal.out).size() == 3);
    const Result gb = run({"gb", "--matrix", f, "--format", "json"});
    CHECK(gb.code == 0);
    const RingPtr R = Ring::make(3);
    std::vector<Polynomial> polys;
    for (const auto& s : Json::parse(gb.out)) polys.push_back(parse_polynomial(s.get<std::string>(), R));
    CHECK(buchberger(Ideal(R, polys)).elements == polys);
    CHECK(run({"gb", "--matrix", f, "--order", "lex"}).code == 0);
    CHECK(run({"gb", "--matrix", f, "--order", "weird"}).code == 1);
}

TEST_CASE("decompose verb") {
    const std::string f = temp_file("nondiag2.txt", nondiag);
    const Result r = run({"decompose", "--matrix", f, "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["intersection_verified"] == true);
    REQUIRE(j["components"].size() == 2);
    CHECK(j["components"][0]["lambda"] == "2");
    CHECK(j["components"][0]["dimension"] == 0);
    CHECK(j["components"][0]["degree"] == 1);
    CHECK(j["components"][1]["lambda"] == "1");
    CHECK(j["components"][1]["degree"] == 2);
    const Result s = run({"decompose", "--spec", R"([{"lambda":"0","blocks":[[2,1]]},{"lambda":"1","blocks":[[2,1]]}])"});
    CHECK(s.code == 0);
}

TEST_CASE("jordan and diagonalizable verbs") {
    const std::string f = temp_file("nondiag3.txt", nondiag);
    const Result r = run({"jordan", "--matrix", f, "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(spec_from_json(j["ideal"]) == spec_from_json(j["oracle"]));
    CHECK(spec_from_json(j["oracle"]) == JordanSpec{{EigenBlocks{2, {{1, 1}}}, EigenBlocks{1, {{2, 1}}}}});

    const Result d = run({"diagonalizable", "--matrix", f, "--format", "json"});
    CHECK(d.code == 0);
    CHECK(Json::parse(d.out) == Json{{"ideal", false}, {"oracle", false}, {"agree", true}});
    const std::string id = temp_file("identity.txt", "3 3\n1 0 0\n0 1 0\n0 0 1\n");
    const Result e = run({"diagonalizable", "--matrix", id});
    CHECK(e.code == 0);
    CHECK(e.out == "ideal: yes\noracle: yes\nagree: yes\n");
}

TEST_CASE("hilbert and disc-degree verbs") {
    const std::string f = temp_file("nondiag4.txt", nondiag);
    const Result h = run({"hilbert", "--matrix", f, "--tmax", "4", "--format", "json"});
    CHECK(h.code == 0);
    CHECK(Json::parse(h.out) == Json{1, 3, 3, 3, 3});
    const Result d = run({"disc-degree", "-r", "3", "--seed", "42"});
    CHECK(d.code == 0);
    CHECK(d.out == "6\n");
    CHECK(run({"disc-degree", "-r", "1"}).code == 1);
}

TEST_CASE("exit codes and error records") {
    const std::string rot = temp_file("rotation.txt", "2 2\n0 -1\n1 0\n");
    const Result unsupported = run({"jordan", "--matrix", rot});
    CHECK(unsupported.code == 2);
    const Json err = Json::parse(unsupported.err);
    CHECK(err["error"] == "unsupported-field");
    CHECK(unsupported.err.find('\n') == unsupported.err.size() - 1);

    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"ideal"}).code == 1);
    CHECK(run({"ideal", "--matrix", "/nonexistent/file"}).code == 1);
    const std::string bad = temp_file("bad.txt", "2 2\n1 2\n");
    CHECK(Json::parse(run({"ideal", "--matrix", bad}).err)["error"] == "parse");
    const std::string f = temp_file("nondiag5.txt", nondiag);
    CHECK(run({"ideal", "--matrix", f, "--spec", R"([{"lambda":"0","blocks":[[1,1]]}])"}).code == 1);
    CHECK(run({"decompose", "--spec", R"([{"lambda":"0","blocks":[[1,1],[2,1]]}])"}).code == 1);
    const std::string rect = temp_file("rect.txt", "2 3\n1 2 3\n4 5 6\n");
    CHECK(run({"ideal", "--matrix", rect}).code == 1);
}

TEST_CASE("output is deterministic") {
    const std::string f = temp_file("nondiag6.txt", nondiag);
    for (const char* verb : {"ideal", "gb", "decompose", "jordan", "diagonalizable", "hilbert"}) {
        const Result a = run({verb, "--matrix", f, "--format", "json"});
        const Result b = run({verb, "--matrix", f, "--format", "json"});
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
    CHECK(run({"disc-degree", "-r", "4", "--seed", "7"}).out == run({"disc-degree", "-r", "4", "--seed", "7"}).out);
}
