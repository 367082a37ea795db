#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypcount/exact.hpp"
#include "hypcount/field.hpp"
#include "hypcount/mobius.hpp"

namespace hypcount {

// A rational n-set of the projective line, stored as a monic squarefree
// polynomial (coefficients low degree first, leading 1 implicit) plus a flag
// for the point at infinity; n = deg f + at_inf. Galois stability is
// automatic in this representation.
struct NSet {
    const Field* k = nullptr;
    std::vector<uint32_t> f;  // c_0 .. c_{D-1}
    bool at_inf = false;

    long deg() const { return static_cast<long>(f.size()); }
    long n() const { return deg() + (at_inf ? 1 : 0); }

    friend bool operator==(const NSet& x, const NSet& y) {
        return x.k == y.k && x.at_inf == y.at_inf && x.f == y.f;
    }
    // Canonical total order: finite-only sets first, then coefficient lex
    // low degree first.
    friend bool operator<(const NSet& x, const NSet& y) {
        if (x.at_inf != y.at_inf) return !x.at_inf;
        return x.f < y.f;
    }
};

// Validating constructor; rejects non-squarefree polynomials.
NSet make_nset(const Field& k, std::vector<uint32_t> monic_coeffs, bool at_inf);
NSet nset_from_points(const Field& k, const std::vector<ProjPoint>& pts);

std::string format_nset(const NSet& s);

bool contains_rational_point(const NSet& s);
std::vector<ProjPoint> rational_points(const NSet& s);

// --- binary form view (degree-n vector of X^i coefficients) ---
std::vector<uint32_t> nset_to_form(const NSet& s);
// Interprets a nonzero coefficient vector of length n+1 as an n-set if the
// underlying form is squarefree (at most a simple root at infinity).
std::optional<NSet> nset_from_form(const Field& k, const std::vector<uint32_t>& form);

// Matrix of the substitution F -> F(d X - b Z, -c X + a Z) on degree-n forms;
// acting with it on the form of S yields the form of gamma(S).
std::vector<std::vector<uint32_t>> substitution_matrix(const Mobius& g, long n);

NSet act(const Mobius& g, const NSet& s);

// Multiplier of the matrix lift (a,b;c,d) stored in g on the set S, computed
// over k through the evaluation identities; always nonzero.
uint32_t multiplier(const Mobius& g, const NSet& s);

// Sign of the multiplier's square class; n must be even (otherwise the class
// depends on the lift). +1 iff multiplier is a square.
int epsilon_direct(const Mobius& g, const NSet& s);

// Closed-table evaluation of the same sign, valid when g fixes S. For split
// elements with neither fixed point equal to infinity the set is first read
// through the fixed point playing the infinity role (the choice provably
// does not matter: an ambiguous case forces odd order).
int epsilon_table(const Mobius& g, const NSet& s);

enum class NSetFilter { All, ContainsInfinity, ContainsRational };

// Deterministic enumeration: degree-n monic squarefree polynomials in
// coefficient lex order (c_0 most significant), then degree n-1 with the
// infinity flag set.
void for_each_nset(const Field& k, long n, NSetFilter filter,
                   const std::function<void(const NSet&)>& fn);
ExactInt count_nsets(const Field& k, long n, NSetFilter filter);

// Same stream restricted to sets whose leading coefficient c_0 lies in
// [lead_lo, lead_hi); used to partition enumeration across workers.
void for_each_nset_slice(const Field& k, long n, NSetFilter filter, uint32_t lead_lo,
                         uint32_t lead_hi, const std::function<void(const NSet&)>& fn);

// --- twisted pairs (lambda, S) ---

enum class SquareClass : uint8_t { Trivial = 0, NonTrivial = 1 };

struct TwistedPair {
    SquareClass lam = SquareClass::Trivial;
    NSet s;

    friend bool operator==(const TwistedPair& x, const TwistedPair& y) {
        return x.lam == y.lam && x.s == y.s;
    }
    friend bool operator<(const TwistedPair& x, const TwistedPair& y) {
        if (x.lam != y.lam) return x.lam < y.lam;
        return x.s < y.s;
    }
};

// gamma . (lambda, S) = (lambda * J(gamma, S), gamma(S)).
TwistedPair act_twisted(const Mobius& g, const TwistedPair& pair);

// Dense index of a pair among all pairs with the given n, compatible with
// the canonical order; used for visited bitmaps and orbit minima.
uint64_t pair_index(const TwistedPair& pair, long n);
uint64_t pair_index_count(long q, long n);
TwistedPair pair_from_index(const Field& k, long n, uint64_t index);

// Index of the pair encoded by a degree-n form that is already known to be
// squarefree (images under the group action); skips revalidation.
uint64_t pair_index_from_form(const Field& k, long n, SquareClass lam,
                              const std::vector<uint32_t>& form);

}  // namespace hypcount
