#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "hypcount.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    hyp_free(s);
    return out;
}

}  // namespace

TEST_CASE("field handles") {
    hyp_field* f = nullptr;
    REQUIRE(hyp_field_create("3^2", &f) == HYP_OK);
    CHECK(hyp_field_order(f) == 9);
    CHECK(hyp_field_characteristic(f) == 3);
    CHECK(hyp_field_degree(f) == 2);
    hyp_field_destroy(f);

    hyp_field* bad = nullptr;
    CHECK(hyp_field_create("4", &bad) == HYP_ERR_INPUT);
    CHECK(std::string(hyp_last_error()).find("odd prime") != std::string::npos);
}

TEST_CASE("counting") {
    char* s = nullptr;
    REQUIRE(hyp_count_pointed(2, "3", &s) == HYP_OK);
    CHECK(take(s) == "54");
    REQUIRE(hyp_count_rational(2, "3", &s) == HYP_OK);
    CHECK(take(s) == "42");
    REQUIRE(hyp_fixture_pointed(2, "5", &s) == HYP_OK);
    CHECK(take(s) == "260");
    REQUIRE(hyp_fixture_rational(2, "5", &s) == HYP_OK);
    CHECK(take(s) == "182");
    REQUIRE(hyp_count_ratio(2, "5", 1, &s) == HYP_OK);
    CHECK(take(s) == "91/125");

    CHECK(hyp_count_pointed(1, "3", &s) == HYP_ERR_INPUT);
    CHECK(hyp_count_pointed(2, "15", &s) == HYP_ERR_INPUT);
}

TEST_CASE("verification report") {
    char* report = nullptr;
    REQUIRE(hyp_verify(2, "3", "tables,zeta", 0, 1, 1, &report) == HYP_OK);
    json doc = json::parse(take(report));
    CHECK(doc["pass"] == true);
    CHECK(doc["q"] == 3);
    REQUIRE(doc["tiers"].size() == 2);
    CHECK(doc["tiers"][0]["name"] == "tables");
    CHECK(doc["tiers"][0].contains("millis") == false);  // deterministic mode

    CHECK(hyp_verify(5, "13", "naive", 0, 1, 1, &report) == HYP_ERR_BUDGET);
}

TEST_CASE("isomorphism queries") {
    hyp_field* f = nullptr;
    REQUIRE(hyp_field_create("13", &f) == HYP_OK);

    char* report = nullptr;
    hyp_status st = hyp_isomorphic(f, "x^5+3x^4+2x^3+10x^2+10x", "x^5+x^4+8x^3+12x^2+4x", 0,
                                   &report);
    REQUIRE(st == HYP_OK);
    json doc = json::parse(take(report));
    CHECK(doc["isomorphic"] == true);
    CHECK(doc["verified"] == true);
    CHECK(doc["genus"] == 2);

    st = hyp_isomorphic(f, "x^5+3x^4+2x^3+10x^2+10x", "x^5+x^4+8x^3+12x^2+4x", 1, &report);
    REQUIRE(st == HYP_NOT_ISOMORPHIC);
    json doc2 = json::parse(take(report));
    CHECK(doc2["isomorphic"] == false);

    CHECK(hyp_isomorphic(f, "x^6", "x^6", 0, &report) == HYP_ERR_INPUT);
    CHECK(hyp_isomorphic(f, "x^5", "x^4+x", 0, &report) == HYP_ERR_INPUT);
    hyp_field_destroy(f);
}
