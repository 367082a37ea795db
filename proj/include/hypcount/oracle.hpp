#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypcount/counts.hpp"
#include "hypcount/exact.hpp"
#include "hypcount/field.hpp"
#include "hypcount/mobius.hpp"
#include "hypcount/nset.hpp"

namespace hypcount {

// --- closed-point (zeta style) counting, the formula-free oracle ---

// Number of monic irreducible polynomials of degree d over F_q.
ExactInt monic_irreducible_count(long d, long q);

// Closed points of degree d on the variety.
ExactInt closed_points(Variety v, long d, long q);

// Coefficient of t^n in prod_d (1 + t^d)^{N_d}: squarefree configurations.
ExactInt nset_count_via_zeta(Variety v, long n, long q);

// Same with r rational points removed from the variety.
ExactInt nset_count_via_zeta_avoiding(Variety v, long r, long n, long q);

// --- gamma-fixed n-sets ---

// Streams every rational n-set of the projective line fixed by g, matching
// the given filter. Fixed sets of a non-identity map are enumerated through
// the eigenspaces of the degree-n substitution matrix; the identity falls
// back to plain enumeration.
void for_each_fixed_nset(const Mobius& g, long n, NSetFilter filter,
                         const std::function<void(const NSet&)>& fn);

// Number of g-fixed n-sets of V = P^1 minus Fix(g), g != identity.
// constraint: All, or ContainsRational (at least one rational point of V).
ExactInt fixed_nset_count(const Mobius& g, long n, NSetFilter constraint);

// Checks the fixed-count identities against the counting formulas
// (a_V(n/m) and b_V(|V(k)|/m, n/m), zero for fractional arguments).
bool verify_quotient(const Mobius& g, long n);

// --- orbit counting over the twisted pair spaces ---

enum class Space { Pointed, Rational };
enum class OrbitMethod { Naive, Burnside };

struct ClassContribution {
    std::string label;
    long order = 1;
    ExactRat weight;
    ExactInt fixed_pairs;
    ExactRat contribution;
};

struct OrbitReport {
    long g = 0;
    long q = 0;
    Space space = Space::Pointed;
    OrbitMethod method = OrbitMethod::Naive;
    ExactInt count;
    std::vector<ClassContribution> per_class;   // Burnside only
    std::vector<uint64_t> orbit_minima;         // Naive only: canonical keys
    std::vector<uint64_t> orbit_sizes;          // Naive only, same order
    uint64_t work = 0;                          // evaluations charged to the budget
    double millis = 0.0;
};

inline constexpr uint64_t kDefaultBudget = 500000000ull;

// Counts orbits by enumerating the space in canonical order and expanding
// each newly met orbit through the whole group; the reported count is the
// number of distinct canonical minima, identical to labeling every pair by
// the minimum of its orbit. Uses no conjugacy classes, no sign table and no
// counting formulas. Work is charged per enumeration step and per
// (representative, group element) evaluation; exceeding the budget raises
// budget_error.
OrbitReport orbit_count_naive(long g, const FieldPtr& k, Space space,
                              uint64_t budget = kDefaultBudget, int workers = 1);

// Burnside count: sum of weight * |Fix| over conjugacy representatives,
// with |Fix| obtained by enumerating fixed sets and applying the direct
// multiplier sign (two square classes when the sign is +1, none otherwise).
OrbitReport orbit_count_burnside(long g, const FieldPtr& k, Space space,
                                 uint64_t budget = kDefaultBudget, int workers = 1);

}  // namespace hypcount
