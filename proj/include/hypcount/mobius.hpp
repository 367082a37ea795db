#pragma once

#include <string>
#include <vector>

#include "hypcount/exact.hpp"
#include "hypcount/field.hpp"

namespace hypcount {

// An element of PGL_2(k) in canonical matrix form: the first nonzero entry
// of (a, b, c, d) in reading order equals 1, so scalar multiples collapse
// and equality is plain componentwise comparison. The stored matrix doubles
// as the canonical GL_2 lift wherever a lift is required.
struct Mobius {
    const Field* k = nullptr;
    uint32_t a = 1, b = 0, c = 0, d = 1;

    static Mobius make(const Field& k, uint32_t a, uint32_t b, uint32_t c, uint32_t d);
    static Mobius identity(const Field& k);

    uint32_t det() const;
    bool is_identity() const { return b == 0 && c == 0 && a == d; }
    // Membership in the stabilizer of infinity (maps t -> (a t + b)/d).
    bool is_affine() const { return c == 0; }

    std::string str() const;

    friend bool operator==(const Mobius& x, const Mobius& y) {
        return x.k == y.k && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator<(const Mobius& x, const Mobius& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    }
};

Mobius compose(const Mobius& g1, const Mobius& g2);
Mobius inverse(const Mobius& g);
ProjPoint apply(const Mobius& g, const ProjPoint& t);
// Action on points of the quadratic extension (fixed points of nonsplit
// elements live there).
ProjPoint apply_ext(const Mobius& g, const Field& ext, const ProjPoint& t);

// Least m >= 1 with g^m scalar.
long element_order(const Mobius& g);

enum class MobiusType {
    Identity,   // m = 1
    Parabolic,  // one rational fixed point, m = p
    Split,      // two rational fixed points, m | q-1
    Nonsplit,   // conjugate pair of quadratic fixed points, m | q+1
};

struct ConjClassInfo {
    MobiusType type = MobiusType::Identity;
    long order = 1;
    ExactInt centralizer;           // in PGL_2(k)
    std::vector<ProjPoint> fixed;   // over k (Parabolic: 1, Split: 2)
    FieldPtr ext;                   // quadratic extension holding nonsplit fixed points
    std::vector<ProjPoint> fixed_ext;
};

ConjClassInfo classify(const Mobius& g);

enum class GroupKind { Projective, Affine };

struct ConjClass {
    Mobius rep;
    ConjClassInfo info;
    ExactRat weight;  // 1 / |centralizer in the chosen group|
    std::string label;
};

// One representative per conjugacy class, deterministic order, with the
// Burnside weight 1/|centralizer|. Projective: q+2 classes. Affine: q.
std::vector<ConjClass> conjugacy_representatives(const FieldPtr& k, GroupKind kind);

ExactInt group_order(long q, GroupKind kind);

// Every element in canonical form, ascending in (a, b, c, d).
std::vector<Mobius> enumerate_group(const Field& k, GroupKind kind);

}  // namespace hypcount
