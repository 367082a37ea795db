#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypcount/counts.hpp"
#include "hypcount/errors.hpp"
#include "hypcount/fixtures.hpp"

using namespace hypcount;

TEST_CASE("pointed fixture values") {
    CHECK(fixture_pointed(2, 5) == 260);
    CHECK(fixture_pointed(2, 3) == 54);
    CHECK(fixture_pointed(3, 3) == 486);
    CHECK_THROWS_AS(fixture_pointed(8, 3), argument_error);
    CHECK_THROWS_AS(fixture_pointed(2, 4), argument_error);
}

TEST_CASE("rational fixture values") {
    CHECK(fixture_rational(2, 3) == 42);
    CHECK(fixture_rational(2, 5) == 182);
    CHECK(fixture_rational(2, 7) == hyp_rational(2, 7));
    CHECK_THROWS_AS(fixture_rational(6, 3), argument_error);
}

TEST_CASE("term breakdown exposes active conditions") {
    auto terms = fixture_rational_terms(2, 3);
    ExactRat total = 0;
    long active = 0;
    for (const auto& t : terms) {
        if (t.active) {
            total += t.value;
            ++active;
        }
        CHECK_FALSE(t.label.empty());
    }
    CHECK(total == 42);
    CHECK(active == 3);  // polynomial part, 4|q+1 bracket, 8|q-3 bracket
}

TEST_CASE("fixtures agree with the formulas on a small grid") {
    for (long q : {3, 5, 7, 9}) {
        for (long g = 2; g <= 7; ++g) CHECK(fixture_pointed(g, q) == hyp_pointed(g, q));
        for (long g = 2; g <= 5; ++g) CHECK(fixture_rational(g, q) == hyp_rational(g, q));
    }
}
