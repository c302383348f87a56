#include "chaincactus/closed_forms.hpp"
#include "chaincactus/report.hpp"

#include "doctest.h"

#include <sstream>

using namespace chaincactus;

TEST_SUITE("report") {

TEST_CASE("polynomials serialize as decimal strings") {
    const Json j = poly_to_json(UniPoly{1, 6, 9, 2});
    CHECK(j.dump() == R"(["1","6","9","2"])");
    CHECK(poly_to_json(UniPoly{}).dump() == "[]");
    const UniPoly big = ortho_poly(6, 60);
    CHECK(poly_from_json(poly_to_json(big)) == big);
    CHECK(poly_from_json(Json::parse(R"(["-3","0","4"])")) == UniPoly{-3, 0, 4});
    CHECK_THROWS_AS(poly_from_json(Json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"(["1x"])")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"a":"1"})")), std::invalid_argument);
}

TEST_CASE("spec json round trip") {
    const ChainSpec s = validate(ChainSpec{{5, 6, 7, 8}, {2, 3}});
    const Json j = spec_to_json(s);
    CHECK(j.dump() == R"({"cycle_sizes":[5,6,7,8],"positions":[2,3]})");
    CHECK(spec_from_json(j) == s);
    // validated on the way in: 5 -> 7 - 5 = 2 folds
    CHECK(spec_from_json(Json::parse(R"({"cycle_sizes":[6,7,6],"positions":[5]})")).positions == std::vector<int>{2});
    CHECK_THROWS(spec_from_json(Json::parse(R"({"cycle_sizes":[2,6]})")));
}

TEST_CASE("sweep report json") {
    const auto r = sweep({6, 6, 6});
    const Json j = report_to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"cycle_sizes", "entries", "min", "max", "verdicts", "interior_ties"});
    CHECK(j["entries"].size() == 3);
    CHECK(j["entries"][1]["psi"] == "2130");
    CHECK(j["min"]["positions"] == Json::array({1}));
    CHECK(j["max"]["positions"] == Json::array({2}));
    CHECK(j["verdicts"]["extremality"]["status"] == "pass");
    CHECK(j["verdicts"]["lemma_e1"]["counterexample"].is_null());
    CHECK(report_to_json(r).dump() == j.dump());
}

TEST_CASE("verdict json with a counterexample") {
    Verdict v;
    v.status = VerdictStatus::fail;
    v.note = "made up";
    v.counterexample = Counterexample{validate(ChainSpec{{6, 6}, {}}), "lemma_e1", 2, UniPoly{1, 2}, UniPoly{1, 1}};
    const Json j = verdict_to_json(v);
    CHECK(j["status"] == "fail");
    CHECK(j["ok"] == false);
    CHECK(j["counterexample"]["k"] == 2);
    CHECK(j["counterexample"]["smaller"] == Json::array({"1", "2"}));
    CHECK(j["counterexample"]["spec"] == "6,6/");
}

TEST_CASE("sweep report csv") {
    const std::string csv = report_to_csv(sweep({6, 6, 6, 6, 6}));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "positions,psi,alpha,mis_count");
    std::getline(in, line);
    CHECK(line == "1;1;1,216978,13,8");
    std::size_t rows = 1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 27);
    CHECK(report_to_csv(sweep({6, 6, 6})) == "positions,psi,alpha,mis_count\n1,2002,8,5\n2,2130,9,1\n3,2066,8,6\n");
}

}
