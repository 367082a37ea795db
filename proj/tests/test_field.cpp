#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hypcount/errors.hpp"
#include "hypcount/field.hpp"

using namespace hypcount;

TEST_CASE("field construction") {
    auto f3 = Field::make(3, 1);
    CHECK(f3->q() == 3);
    CHECK(f3->modulus() == std::vector<uint32_t>{0, 1});

    auto f9 = Field::make(3, 2);
    CHECK(f9->q() == 9);
    // t^2 + 1 is the lex-smallest irreducible quadratic over F_3
    CHECK(f9->modulus() == std::vector<uint32_t>{1, 0, 1});

    CHECK_THROWS_AS(Field::make(2, 1), argument_error);
    CHECK_THROWS_AS(Field::make(9, 1), argument_error);
    CHECK_THROWS_AS(Field::make(3, 0), argument_error);

    // same (p, e) yields the same instance
    CHECK(Field::make(3, 2).get() == f9.get());
    CHECK(Field::parse("9").get() == f9.get());
    CHECK(Field::parse("3^2").get() == f9.get());
    CHECK_THROWS_AS(Field::parse("12"), argument_error);
    CHECK_THROWS_AS(Field::parse("abc"), argument_error);
}

TEST_CASE("prime field arithmetic") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->mul(3, 4) == 2);
    CHECK(f5->add(3, 4) == 2);
    CHECK(f5->sub(1, 3) == 3);
    CHECK(f5->inv(2) == 3);
    CHECK_THROWS_AS(f5->inv(0), domain_error);
    CHECK(f5->pow(2, 4) == 1);
}

TEST_CASE("extension field arithmetic") {
    auto f9 = Field::make(3, 2);
    uint32_t t = f9->from_coeffs({0, 1});
    CHECK(f9->mul(t, t) == 2);  // t^2 = -1
    CHECK(f9->frobenius(t) == f9->neg(t));  // t^3 = -t
    // field axioms spot checks
    for (uint32_t a = 0; a < 9; ++a)
        for (uint32_t b = 0; b < 9; ++b) {
            CHECK(f9->add(a, b) == f9->add(b, a));
            CHECK(f9->mul(a, b) == f9->mul(b, a));
            if (b != 0) CHECK(f9->mul(f9->div(a, b), b) == a);
        }
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
    for (auto [p, e] : {std::pair<long, long>{3, 2}, {5, 2}, {3, 3}}) {
        auto k = Field::make(p, e);
        long fixed = 0;
        uint32_t frob_iterated_differs = 0;
        for (long a = 0; a < k->q(); ++a) {
            if (k->frobenius(static_cast<uint32_t>(a)) == static_cast<uint32_t>(a)) ++fixed;
            uint32_t x = static_cast<uint32_t>(a);
            for (long i = 0; i < e; ++i) x = k->frobenius(x);
            if (x != static_cast<uint32_t>(a)) ++frob_iterated_differs;
        }
        CHECK(fixed == p);
        CHECK(frob_iterated_differs == 0);
    }
}

TEST_CASE("multiplicative group is cyclic") {
    for (long q : {5, 9, 27, 25}) {
        auto k = Field::parse(std::to_string(q));
        bool found_generator = false;
        for (long a = 1; a < q && !found_generator; ++a) {
            uint32_t x = k->one();
            long order = 0;
            do {
                x = k->mul(x, static_cast<uint32_t>(a));
                ++order;
            } while (x != k->one());
            found_generator = order == q - 1;
        }
        CHECK(found_generator);
    }
}

TEST_CASE("squares and square roots") {
    auto f5 = Field::make(5, 1);
    CHECK_FALSE(f5->is_square(2));
    CHECK(f5->is_square(4));
    CHECK(f5->is_square(1));
    CHECK_THROWS_AS(f5->is_square(0), argument_error);
    CHECK_THROWS_AS(f5->sqrt(2), domain_error);

    auto f7 = Field::make(7, 1);
    CHECK(f7->is_square(2));  // 3^2 = 2
    CHECK(f7->nonsquare() == 3);
    CHECK(Field::make(5, 1)->nonsquare() == 2);
    CHECK(Field::make(3, 1)->nonsquare() == 2);

    auto f13 = Field::make(13, 1);
    CHECK(f13->sqrt(10) == 6);  // 10 = -3; roots 6 and 7, canonical one is 6
    for (long q : {3, 5, 9, 13, 27, 49}) {
        auto k = Field::parse(std::to_string(q));
        long squares = 0;
        for (long a = 1; a < q; ++a) {
            uint32_t x = static_cast<uint32_t>(a);
            bool sq = k->is_square(x);
            // square classes form a group of order two
            CHECK(sq != k->is_square(k->mul(x, k->nonsquare())));
            if (sq) {
                ++squares;
                uint32_t r = k->sqrt(x);
                CHECK(k->mul(r, r) == x);
                CHECK(r <= k->neg(r));
            }
        }
        CHECK(squares == (q - 1) / 2);
    }
}

TEST_CASE("sqrt on a large prime field uses the residue algorithm") {
    auto k = Field::make(4099, 1);  // above the table limit
    for (uint32_t a : {2u, 3u, 5u, 1000u, 4098u}) {
        if (!k->is_square(a)) continue;
        uint32_t r = k->sqrt(a);
        CHECK(k->mul(r, r) == a);
        CHECK(r <= k->neg(r));
    }
}

TEST_CASE("element text format") {
    auto f13 = Field::make(13, 1);
    CHECK(f13->format(7) == "7");
    CHECK(f13->parse_element("7") == 7);
    CHECK(f13->parse_element("-3") == 10);
    auto f9 = Field::make(3, 2);
    uint32_t x = f9->from_coeffs({2, 1});
    CHECK(f9->format(x) == "2,1");
    CHECK(f9->parse_element("2,1") == x);
    CHECK_THROWS_AS(f9->parse_element("1,2,3"), argument_error);
    CHECK_THROWS_AS(f13->parse_element(""), argument_error);
}

TEST_CASE("quadratic extension and embedding") {
    auto f3 = Field::make(3, 1);
    auto f9 = f3->quadratic_extension();
    CHECK(f9->q() == 9);
    CHECK(f9.get() == Field::make(3, 2).get());
    CHECK(f3->embed(*f9, 2) == 2);

    auto f9b = Field::make(3, 2);
    auto f81 = f9b->quadratic_extension();
    CHECK(f81->q() == 81);
    // embedding is a field homomorphism
    std::set<uint32_t> images;
    for (uint32_t a = 0; a < 9; ++a) {
        images.insert(f9b->embed(*f81, a));
        for (uint32_t b = 0; b < 9; ++b) {
            CHECK(f9b->embed(*f81, f9b->add(a, b)) ==
                  f81->add(f9b->embed(*f81, a), f9b->embed(*f81, b)));
            CHECK(f9b->embed(*f81, f9b->mul(a, b)) ==
                  f81->mul(f9b->embed(*f81, a), f9b->embed(*f81, b)));
        }
    }
    CHECK(images.size() == 9);
}

TEST_CASE("projective point order") {
    CHECK(ProjPoint::finite(3) < ProjPoint::infinity());
    CHECK(ProjPoint::finite(1) < ProjPoint::finite(2));
    CHECK(ProjPoint::infinity() == ProjPoint::infinity());
}
