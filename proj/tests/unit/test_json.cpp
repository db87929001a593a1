#include "hurwitz/json_io.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/spectral.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace hurwitz;
using hurwitz::testing::r;

TEST_CASE("polynomial JSON shape") {
    auto p = WPolynomial::variable(3, EdgeVar(1, 2)).pow(3) * r(2) + WPolynomial::variable(3, EdgeVar(1, 3));
    auto j = nlohmann::json::parse(to_json(p));
    CHECK(j["n"] == 3);
    REQUIRE(j["terms"].size() == 2);
    bool seen_cube = false;
    for (const auto& t : j["terms"])
        if (t["monomial"] == nlohmann::json::parse("[[1,2,3]]")) {
            seen_cube = true;
            CHECK(t["coeff"] == "2/1");
        }
    CHECK(seen_cube);
}

TEST_CASE("polynomial JSON round trip") {
    for (auto [n, g] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {4, 1}}) {
        auto p = hurwitz_poly(n, g);
        CHECK(wpolynomial_from_json(to_json(p)) == p);
    }
    auto q = R_part(2, 4);
    CHECK(wpolynomial_from_json(to_json(q)) == q);
    CHECK(wpolynomial_from_json(to_json(WPolynomial(3))).is_zero());
}

TEST_CASE("graph series JSON round trip") {
    auto s = collect(R_part(2, 4));
    auto back = graph_series_from_json(to_json(s));
    CHECK(back == s);
    auto j = nlohmann::json::parse(to_json(collect(r_part(1, 3))));
    REQUIRE(j.size() == 2);
    for (const auto& e : j) CHECK(e.contains("vertices"));
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS(wpolynomial_from_json("{"));
    CHECK_THROWS(wpolynomial_from_json(R"({"n": 2, "terms": [{"monomial": [[1, 3, 1]], "coeff": "1/1"}]})"));
    CHECK_THROWS(wpolynomial_from_json(R"({"n": 2, "terms": [{"monomial": [[1, 2, 1]], "coeff": "x"}]})"));
    CHECK_THROWS(graph_series_from_json(R"([{"edges": "1-", "vertices": 2, "coeff": "1"}])"));
}
