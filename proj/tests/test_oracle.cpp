#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hypcount/errors.hpp"
#include "hypcount/oracle.hpp"

using namespace hypcount;

TEST_CASE("closed point counts") {
    CHECK(monic_irreducible_count(1, 3) == 3);
    CHECK(monic_irreducible_count(2, 3) == 3);
    CHECK(closed_points(Variety::ProjLine, 6, 3) == 116);
    CHECK(closed_points(Variety::ProjLine, 1, 3) == 4);
    CHECK(closed_points(Variety::ProjLineMinusQuadPair, 2, 3) == 2);
    CHECK(closed_points(Variety::MultGroup, 1, 3) == 2);
}

TEST_CASE("zeta-style configuration counts") {
    CHECK(nset_count_via_zeta(Variety::ProjLine, 6, 3) == 648);
    CHECK(nset_count_via_zeta_avoiding(Variety::ProjLine, 4, 6, 3) == 199);
    CHECK(nset_count_via_zeta(Variety::AffLine, 0, 3) == 1);
    CHECK(nset_count_via_zeta(Variety::MultGroup, 2, 3) == 4);

    for (long q : {3, 5, 7, 9})
        for (Variety v : {Variety::ProjLine, Variety::AffLine, Variety::MultGroup,
                          Variety::ProjLineMinusQuadPair})
            for (long n = 0; n <= 8; ++n)
                CHECK(nset_count_via_zeta(v, n, q) == a_variety(v, n, q));
}

TEST_CASE("fixed n-set streaming matches a plain filter") {
    auto f3 = Field::make(3, 1);
    auto group = enumerate_group(*f3, GroupKind::Projective);
    for (long n : {3L, 4L, 6L}) {
        for (size_t gi = 1; gi < group.size(); gi += 3) {
            const Mobius& g = group[gi];
            std::set<std::vector<uint32_t>> expected;
            for_each_nset(*f3, n, NSetFilter::All, [&](const NSet& s) {
                if (act(g, s) == s) {
                    auto key = s.f;
                    key.push_back(s.at_inf ? 1 : 0);
                    expected.insert(key);
                }
            });
            std::set<std::vector<uint32_t>> got;
            for_each_fixed_nset(g, n, NSetFilter::All, [&](const NSet& s) {
                auto key = s.f;
                key.push_back(s.at_inf ? 1 : 0);
                CHECK(got.insert(key).second);  // no duplicates
            });
            CHECK(got == expected);
        }
    }
}

TEST_CASE("fixed counts on the complement of the fixed locus") {
    auto f3 = Field::make(3, 1);
    // t -> -1/t has order 2 and quadratic fixed points; rational-constrained
    // 4-sets avoiding them
    Mobius flip = Mobius::make(*f3, 0, 1, f3->neg(1), 0);
    CHECK(fixed_nset_count(flip, 4, NSetFilter::ContainsRational) == 5);
    // order does not divide n: no fixed sets at all
    CHECK(fixed_nset_count(flip, 5, NSetFilter::All) == 0);
    // the translation with n = 6: quotient sets containing the rational orbit
    Mobius shift = Mobius::make(*f3, 1, 1, 0, 1);
    CHECK(fixed_nset_count(shift, 6, NSetFilter::ContainsRational) == 2);

    CHECK_THROWS_AS(fixed_nset_count(Mobius::identity(*f3), 4, NSetFilter::All), argument_error);
}

TEST_CASE("quotient identities for all representatives") {
    for (long q : {3, 5}) {
        auto k = Field::parse(std::to_string(q));
        for (const auto& cls : conjugacy_representatives(k, GroupKind::Projective)) {
            if (cls.info.type == MobiusType::Identity) continue;
            for (long n = 1; n <= 8; ++n) CHECK(verify_quotient(cls.rep, n));
        }
    }
}

namespace {

// Literal definition: label every pair in the space by the minimum of its
// orbit under the full group and count distinct labels. Only feasible for
// tiny inputs; used to pin the optimized implementation to the contract.
std::set<uint64_t> reference_minima(long g, const FieldPtr& k, Space space) {
    long n = 2 * g + 2;
    GroupKind kind = space == Space::Pointed ? GroupKind::Affine : GroupKind::Projective;
    NSetFilter filter =
        space == Space::Pointed ? NSetFilter::ContainsInfinity : NSetFilter::ContainsRational;
    auto group = enumerate_group(*k, kind);
    std::set<uint64_t> minima;
    for_each_nset(*k, n, filter, [&](const NSet& s) {
        for (SquareClass lam : {SquareClass::Trivial, SquareClass::NonTrivial}) {
            TwistedPair pair{lam, s};
            uint64_t best = UINT64_MAX;
            for (const auto& gamma : group)
                best = std::min(best, pair_index(act_twisted(gamma, pair), n));
            minima.insert(best);
        }
    });
    return minima;
}

}  // namespace

TEST_CASE("naive orbit count equals the literal canonical-minimum definition") {
    auto f3 = Field::make(3, 1);
    for (Space space : {Space::Pointed, Space::Rational}) {
        auto report = orbit_count_naive(2, f3, space);
        auto expected = reference_minima(2, f3, space);
        CHECK(report.count == ExactInt(static_cast<long>(expected.size())));
        std::set<uint64_t> got(report.orbit_minima.begin(), report.orbit_minima.end());
        CHECK(got == expected);
    }
}

TEST_CASE("naive orbit counts, anchor values") {
    auto f3 = Field::make(3, 1);
    auto pointed = orbit_count_naive(2, f3, Space::Pointed);
    CHECK(pointed.count == 54);
    auto rational = orbit_count_naive(2, f3, Space::Rational);
    CHECK(rational.count == 42);

    // orbit sizes partition the space and divide the group order
    uint64_t space_size = 0;
    for (uint64_t s : rational.orbit_sizes) {
        space_size += s;
        CHECK(24 % s == 0);
    }
    CHECK(space_size == 898);
    uint64_t pointed_space = 0;
    for (uint64_t s : pointed.orbit_sizes) {
        pointed_space += s;
        CHECK(6 % s == 0);
    }
    CHECK(pointed_space == 324);
}

TEST_CASE("worker count does not change the result") {
    auto f3 = Field::make(3, 1);
    auto one = orbit_count_naive(2, f3, Space::Rational, kDefaultBudget, 1);
    auto four = orbit_count_naive(2, f3, Space::Rational, kDefaultBudget, 4);
    CHECK(one.count == four.count);
    CHECK(one.orbit_minima == four.orbit_minima);
}

TEST_CASE("budget guard") {
    auto f3 = Field::make(3, 1);
    CHECK_THROWS_AS(orbit_count_naive(2, f3, Space::Rational, 100), budget_error);
    try {
        orbit_count_naive(2, f3, Space::Rational, 100);
    } catch (const budget_error& e) {
        CHECK(e.required_work > e.allowed_budget);
    }
}

TEST_CASE("Burnside count and per-class table") {
    auto f3 = Field::make(3, 1);
    auto pointed = orbit_count_burnside(2, f3, Space::Pointed);
    CHECK(pointed.count == 54);
    // only the identity class contributes at q = 3
    for (const auto& c : pointed.per_class)
        if (c.order != 1) CHECK(c.contribution == 0);

    auto rational = orbit_count_burnside(2, f3, Space::Rational);
    CHECK(rational.count == 42);
    std::multiset<ExactRat> contributions;
    for (const auto& c : rational.per_class) contributions.insert(c.contribution);
    std::multiset<ExactRat> expected{ExactRat(449, 12), ExactRat(4, 3), ExactRat(3, 2),
                                     ExactRat(5, 4), ExactRat(1, 2)};
    CHECK(contributions == expected);
}

TEST_CASE("three-tier agreement, small cases") {
    for (long q : {3, 5}) {
        auto k = Field::parse(std::to_string(q));
        for (Space space : {Space::Pointed, Space::Rational}) {
            ExactInt formula = space == Space::Pointed ? hyp_pointed(2, q) : hyp_rational(2, q);
            CHECK(orbit_count_naive(2, k, space).count == formula);
            CHECK(orbit_count_burnside(2, k, space).count == formula);
        }
    }
}
