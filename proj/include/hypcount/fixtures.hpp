#pragma once

#include <string>
#include <vector>

#include "hypcount/exact.hpp"

namespace hypcount {

// Regression fixtures: hard-coded per-genus evaluators, each a sum of
// bracketed terms [polynomial in q]_condition with conditions on q and p.
// They are kept independent of the counting formulas on purpose.

struct FixtureTerm {
    std::string label;      // human-readable bracket description
    ExactRat value;         // evaluated polynomial part
    bool active = false;    // condition satisfied at this q
};

// Pointed counts, g in 2..7.
ExactInt fixture_pointed(long g, long q);
// Rational-Weierstrass-point counts, g in 2..5. Every evaluation must be an
// integer; a fractional result means a transcription slip and raises
// internal_error.
ExactInt fixture_rational(long g, long q);

// Term-by-term breakdown for mismatch reports.
std::vector<FixtureTerm> fixture_pointed_terms(long g, long q);
std::vector<FixtureTerm> fixture_rational_terms(long g, long q);

inline constexpr long kFixturePointedMaxGenus = 7;
inline constexpr long kFixtureRationalMaxGenus = 5;

}  // namespace hypcount
