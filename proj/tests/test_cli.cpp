#include "a3res/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace a3res;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("resolve text shows the six rows of the all-ones case") {
    const auto r = run({"resolve", "--mult", "1,1,1,1,1,1", "--format", "text"});
    CHECK(r.code == cli::kOk);
    for (int i = 0; i <= 5; ++i) CHECK(r.out.find("F_" + std::to_string(i) + ":") != std::string::npos);
    CHECK(r.out.find("F_6:") == std::string::npos);
    CHECK(r.out.find("Λ^3V1⊗Λ^3V3*⊗A(-3)") != std::string::npos);
    const auto ex = run({"resolve", "--mult", "1,1,1,1,1,1", "--shift", "example"});
    CHECK(ex.out.find("Λ^3V1⊗Λ^3V3*⊗A(-5)") != std::string::npos);
    CHECK(ex.out.find("S_(2,2,2)V1⊗S_(2,2,2)V2⊗S_(3,3,3,3)V3*⊗A(-19)") != std::string::npos);
}

TEST_CASE("gorenstein and bott one-liners") {
    CHECK(run({"gorenstein", "--mult", "2,0,1,1,1,1"}).out == "Gorenstein: yes (family a=d+e, b=0, c=f)\n");
    CHECK(run({"gorenstein", "--mult", "2,1,1,1,1,1"}).out.rfind("Gorenstein: no", 0) == 0);
    CHECK(run({"bott", "--weight", "0,2,1"}).out == "(1,1,1) after 1 exchange\n");
    CHECK(run({"bott", "--weight", "0,3,3"}).out == "(2,2,2) after 2 exchanges\n");
    CHECK(run({"bott", "--weight", "0,1"}).out == "vanishes\n");
    CHECK(run({"bott", "--weight=-3,0,0"}).out == "(-1,-1,-1) after 2 exchanges\n");
}

TEST_CASE("json output round-trips byte for byte") {
    const auto r = run({"resolve", "--mult", "1,1,1,1,1,1", "--format", "json"});
    REQUIRE(r.code == 0);
    const std::string doc = r.out.substr(0, r.out.size() - 1);
    const auto j = nlohmann::json::parse(doc);
    CHECK(j.dump() == doc);
    CHECK(j["xi_dim"] == 12);
    CHECK(j["flag_dim"] == 7);
    CHECK(j["codim"] == 5);
    CHECK(j["entries"].size() == 18);
    CHECK(j["verdicts"]["gorenstein"] == true);
    CHECK(j["input"]["mult"] == nlohmann::json::array({1, 1, 1, 1, 1, 1}));
    const auto& last = j["entries"].back();
    CHECK(last["w3_dual"] == nlohmann::json::array({3, 3, 3, 3}));
    CHECK(last["shift_standard"] == 12);
    CHECK(last["shift_example"] == 19);

    const auto f = run({"resolve", "--flag", "1,0,2/1,0,2", "--format", "json"});
    const auto jf = nlohmann::json::parse(f.out);
    CHECK(jf["input"]["flag"]["beta"] == nlohmann::json::array({1, 0, 2}));
    CHECK(jf["verdicts"]["normal"].is_null());
}

TEST_CASE("jobs do not change output") {
    const auto one = run({"resolve", "--mult", "2,1,1,1,2,1", "--format", "json", "--jobs", "1"});
    const auto four = run({"resolve", "--mult", "2,1,1,1,2,1", "--format", "json", "--jobs", "4"});
    CHECK(one.out == four.out);
}

TEST_CASE("csv Betti diagram") {
    const auto r = run({"resolve", "--mult", "1,1,1,1,1,1", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string header, row0, row1;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    CHECK(header.rfind("i,0,3,", 0) == 0);
    CHECK(row0.rfind("0,1,,", 0) == 0);
    CHECK(row1.rfind("1,,", 0) == 0);
}

TEST_CASE("generators, normality, lr and scan commands") {
    const auto g = run({"generators", "--mult", "1,1,1,1,1,1"});
    CHECK(g.out.find("3x3 minors of phi: 4") != std::string::npos);
    CHECK(g.out.find("4x4 minors of phi|psi using 2 columns of phi and 2 of psi: 9") != std::string::npos);
    CHECK(run({"normality", "--mult", "1,1,1,1,1,1"}).out == "normal with rational singularities\n");
    CHECK(run({"normality", "--flag", "1,0,2/1,0,2"}).out.find("not applicable") != std::string::npos);
    CHECK(run({"lr", "--lambda", "1", "--mu", "1"}).out == "(2) 1\n(1,1) 1\n");
    const auto s = run({"scan", "--max", "0"});
    CHECK(s.code == 0);
    CHECK(s.out.find("records: 1, failures: 0") != std::string::npos);
    const auto sj = run({"scan", "--max", "1", "--checks", "f1,codim", "--format", "json"});
    CHECK(sj.code == 0);
    CHECK(std::count(sj.out.begin(), sj.out.end(), '\n') == 64);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"resolve"}).code == cli::kUsage);
    CHECK(run({"resolve", "--mult", "1,1,1"}).code == cli::kUsage);
    CHECK(run({"resolve", "--mult", "1,1,1,1,1,-1"}).code == cli::kUsage);
    CHECK(run({"resolve", "--mult", "1,1,x,1,1,1"}).code == cli::kUsage);
    CHECK(run({"resolve", "--mult", "1,1,1,1,1,1", "--flag", "1,1,1/1,1,1"}).code == cli::kUsage);
    CHECK(run({"resolve", "--mult", "1,1,1,1,1,1", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"generators", "--flag", "1,0,2/1,0,2"}).code == cli::kUsage);
    CHECK(run({"scan", "--max", "1", "--checks", "nope"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"lr", "--lambda", "1,2", "--mu", "1"}).code == cli::kUsage);
}

TEST_CASE("parsers") {
    CHECK(cli::parse_mult("1,2,3,4,5,6") == Multiplicities{1, 2, 3, 4, 5, 6});
    CHECK(cli::parse_flag("2,2,1/1,1,3") == reineke_flag({1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(cli::parse_flag("2,2,1"), std::invalid_argument);
    CHECK(cli::parse_ints("0,-1,-2") == std::vector<int>{0, -1, -2});
    CHECK_THROWS_AS(cli::parse_ints("1,,2"), std::invalid_argument);
}
