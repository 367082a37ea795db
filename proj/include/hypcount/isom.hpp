#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypcount/field.hpp"
#include "hypcount/mobius.hpp"
#include "hypcount/nset.hpp"

namespace hypcount {

// A curve y^2 = f(x) in normalized form: lam is the square class of the
// original leading coefficient, s the set of ramification x-coordinates
// (roots of the monic part, plus infinity when deg f = 2g+1).
struct KoblitzModel {
    FieldPtr k;
    SquareClass lam = SquareClass::Trivial;
    NSet s;
    long g = 0;

    bool pointed_capable() const { return s.at_inf; }
    // concrete representative of the square class
    uint32_t lam_rep() const {
        return lam == SquareClass::Trivial ? k->one() : k->nonsquare();
    }
};

// Validates and normalizes y^2 = f(x): f separable of degree 2g+1 or 2g+2,
// g >= 2, arbitrary nonzero leading coefficient. Coefficients low degree
// first including the leading one.
KoblitzModel normalize_model(const FieldPtr& k, const std::vector<uint32_t>& coeffs);

struct IsoWitness {
    Mobius gamma;
    uint32_t mu = 1;     // y-scaling: mu^2 = lam1 * J(gamma, S1) / lam2
    bool pointed = false;
};

// Re-derives the witness equations from scratch; true iff gamma carries
// (lam1, S1) to (lam2, S2) and mu is the canonical square root.
bool check_witness(const KoblitzModel& c1, const KoblitzModel& c2, const IsoWitness& w);

// Exhaustive search over the affine group; both models must carry the
// point at infinity (odd-degree models). Returns the witness minimal in the
// canonical group order.
std::optional<IsoWitness> isomorphism_pointed(const KoblitzModel& c1, const KoblitzModel& c2);

// Exhaustive search over the projective group; both models must have at
// least one rational ramification point.
std::optional<IsoWitness> isomorphism(const KoblitzModel& c1, const KoblitzModel& c2);

// Size of the stabilizer of (lam, S) under the twisted action.
ExactInt reduced_automorphism_count(const KoblitzModel& c, GroupKind kind);

// Parses a dense coefficient list (lowest degree first, ',' separated over
// prime fields, ';' separated over extensions) or, over prime fields, a
// symbolic polynomial like "x^5+3x^2-1". Returns coefficients including the
// leading one.
std::vector<uint32_t> parse_polynomial(const Field& k, const std::string& text);

}  // namespace hypcount
