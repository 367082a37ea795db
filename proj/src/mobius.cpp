#include "hypcount/mobius.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hypcount/errors.hpp"

namespace hypcount {

Mobius Mobius::make(const Field& k, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    uint32_t det = k.sub(k.mul(a, d), k.mul(b, c));
    if (det == 0) throw argument_error("singular matrix does not define a projective map");
    uint32_t lead = a != 0 ? a : (b != 0 ? b : c);
    uint32_t s = k.inv(lead);
    return Mobius{&k, k.mul(a, s), k.mul(b, s), k.mul(c, s), k.mul(d, s)};
}

Mobius Mobius::identity(const Field& k) { return Mobius{&k, 1, 0, 0, 1}; }

uint32_t Mobius::det() const { return k->sub(k->mul(a, d), k->mul(b, c)); }

std::string Mobius::str() const {
    std::ostringstream os;
    os << "[[" << k->format(a) << "," << k->format(b) << "],[" << k->format(c) << ","
       << k->format(d) << "]]";
    return os.str();
}

Mobius compose(const Mobius& g1, const Mobius& g2) {
    if (g1.k != g2.k) throw argument_error("composing maps over different fields");
    const Field& k = *g1.k;
    return Mobius::make(k,
                        k.add(k.mul(g1.a, g2.a), k.mul(g1.b, g2.c)),
                        k.add(k.mul(g1.a, g2.b), k.mul(g1.b, g2.d)),
                        k.add(k.mul(g1.c, g2.a), k.mul(g1.d, g2.c)),
                        k.add(k.mul(g1.c, g2.b), k.mul(g1.d, g2.d)));
}

Mobius inverse(const Mobius& g) {
    const Field& k = *g.k;
    return Mobius::make(k, g.d, k.neg(g.b), k.neg(g.c), g.a);
}

ProjPoint apply(const Mobius& g, const ProjPoint& t) {
    const Field& k = *g.k;
    if (t.inf) {
        if (g.c == 0) return ProjPoint::infinity();
        return ProjPoint::finite(k.div(g.a, g.c));
    }
    uint32_t den = k.add(k.mul(g.c, t.v), g.d);
    if (den == 0) return ProjPoint::infinity();
    return ProjPoint::finite(k.div(k.add(k.mul(g.a, t.v), g.b), den));
}

ProjPoint apply_ext(const Mobius& g, const Field& ext, const ProjPoint& t) {
    const Field& k = *g.k;
    uint32_t a = k.embed(ext, g.a), b = k.embed(ext, g.b);
    uint32_t c = k.embed(ext, g.c), d = k.embed(ext, g.d);
    if (t.inf) {
        if (c == 0) return ProjPoint::infinity();
        return ProjPoint::finite(ext.div(a, c));
    }
    uint32_t den = ext.add(ext.mul(c, t.v), d);
    if (den == 0) return ProjPoint::infinity();
    return ProjPoint::finite(ext.div(ext.add(ext.mul(a, t.v), b), den));
}

long element_order(const Mobius& g) {
    Mobius id = Mobius::identity(*g.k);
    Mobius acc = g;
    long m = 1;
    while (!(acc == id)) {
        acc = compose(acc, g);
        ++m;
        if (m > g.k->q() + 1) throw internal_error("element order exceeds q+1");
    }
    return m;
}

ConjClassInfo classify(const Mobius& g) {
    const Field& k = *g.k;
    long q = k.q();
    ConjClassInfo info;
    if (g.is_identity()) {
        info.type = MobiusType::Identity;
        info.order = 1;
        info.centralizer = ExactInt(q) * (q - 1) * (q + 1);
        return info;
    }
    info.order = element_order(g);
    // fixed points solve c t^2 + (d-a) t - b = 0, plus infinity when c = 0
    if (g.c == 0) {
        if (g.a == g.d) {
            info.type = MobiusType::Parabolic;
            info.fixed = {ProjPoint::infinity()};
            info.centralizer = q;
        } else {
            info.type = MobiusType::Split;
            uint32_t t = k.div(g.b, k.sub(g.d, g.a));
            info.fixed = {ProjPoint::finite(t), ProjPoint::infinity()};
            info.centralizer = info.order == 2 ? ExactInt(2) * (q - 1) : ExactInt(q - 1);
        }
        return info;
    }
    uint32_t B = k.sub(g.d, g.a);
    uint32_t disc = k.add(k.mul(B, B), k.mul(k.from_int(4), k.mul(g.c, g.b)));
    uint32_t two_c = k.mul(k.from_int(2), g.c);
    if (disc == 0) {
        info.type = MobiusType::Parabolic;
        info.fixed = {ProjPoint::finite(k.div(k.sub(g.a, g.d), two_c))};
        info.centralizer = q;
        return info;
    }
    if (k.is_square(disc)) {
        info.type = MobiusType::Split;
        uint32_t s = k.sqrt(disc);
        uint32_t t1 = k.div(k.add(k.sub(g.a, g.d), s), two_c);
        uint32_t t2 = k.div(k.sub(k.sub(g.a, g.d), s), two_c);
        info.fixed = {ProjPoint::finite(std::min(t1, t2)), ProjPoint::finite(std::max(t1, t2))};
        info.centralizer = info.order == 2 ? ExactInt(2) * (q - 1) : ExactInt(q - 1);
        return info;
    }
    info.type = MobiusType::Nonsplit;
    info.ext = k.quadratic_extension();
    const Field& k2 = *info.ext;
    uint32_t s2 = k2.sqrt(k.embed(k2, disc));
    uint32_t amd = k.embed(k2, k.sub(g.a, g.d));
    uint32_t den = k.embed(k2, two_c);
    uint32_t t1 = k2.div(k2.add(amd, s2), den);
    uint32_t t2 = k2.div(k2.sub(amd, s2), den);
    info.fixed_ext = {ProjPoint::finite(std::min(t1, t2)), ProjPoint::finite(std::max(t1, t2))};
    info.centralizer = info.order == 2 ? ExactInt(2) * (q + 1) : ExactInt(q + 1);
    return info;
}

ExactInt group_order(long q, GroupKind kind) {
    return kind == GroupKind::Projective ? ExactInt(q) * (q - 1) * (q + 1)
                                         : ExactInt(q) * (q - 1);
}

std::vector<ConjClass> conjugacy_representatives(const FieldPtr& k, GroupKind kind) {
    const Field& F = *k;
    long q = F.q();
    std::vector<ConjClass> out;

    auto push = [&](const Mobius& rep, const ExactInt& centralizer, const std::string& label) {
        ConjClass c;
        c.rep = rep;
        c.info = classify(rep);
        c.weight = ExactRat(1) / ExactRat(centralizer);
        c.label = label;
        out.push_back(std::move(c));
    };

    push(Mobius::identity(F), group_order(q, kind), "identity");
    push(Mobius::make(F, 1, 1, 0, 1), q, "translation");

    if (kind == GroupKind::Affine) {
        // one class per homothety ratio, centralizer q-1
        for (long lam = 2; lam < q; ++lam) {
            Mobius rep = Mobius::make(F, static_cast<uint32_t>(lam), 0, 0, 1);
            push(rep, q - 1, "homothety(" + F.format(static_cast<uint32_t>(lam)) + ")");
        }
        if (static_cast<long>(out.size()) != q)
            throw internal_error("affine group must have q conjugacy classes");
        return out;
    }

    // split classes: one per unordered pair {lambda, 1/lambda}, lambda != 1
    for (long lam = 2; lam < q; ++lam) {
        uint32_t l = static_cast<uint32_t>(lam);
        if (F.inv(l) < l) continue;  // partner already emitted
        Mobius rep = Mobius::make(F, l, 0, 0, 1);
        long m = element_order(rep);
        ExactInt centralizer = m == 2 ? ExactInt(2) * (q - 1) : ExactInt(q - 1);
        push(rep, centralizer, "split(" + F.format(l) + ")");
    }

    // nonsplit classes: companion matrices of irreducible quadratics
    // x^2 + Bx + C, keyed by the eigenvalue ratio pair {beta, beta^-1}.
    FieldPtr ext = F.quadratic_extension();
    const Field& k2 = *ext;
    std::map<std::pair<uint32_t, uint32_t>, bool> seen;
    for (long Bc = 0; Bc < q; ++Bc) {
        for (long Cc = 1; Cc < q; ++Cc) {
            uint32_t Bu = static_cast<uint32_t>(Bc), Cu = static_cast<uint32_t>(Cc);
            // discriminant B^2 - 4C must be a nonsquare
            uint32_t disc = F.sub(F.mul(Bu, Bu), F.mul(F.from_int(4), Cu));
            if (disc == 0 || F.is_square(disc)) continue;
            // companion of x^2 + Bx + C acts as t -> 1/(-C t - B)... use
            // matrix (0, 1; -C, -B), eigenvalues the roots alpha, alpha^q.
            uint32_t s2 = k2.sqrt(F.embed(k2, disc));
            uint32_t alpha = k2.div(k2.sub(k2.neg(F.embed(k2, Bu)), s2), F.embed(k2, F.from_int(2)));
            uint32_t beta = k2.pow(alpha, F.q() - 1);  // alpha^sigma / alpha
            uint32_t beta_inv = k2.inv(beta);
            auto key = std::make_pair(std::min(beta, beta_inv), std::max(beta, beta_inv));
            if (seen.count(key)) continue;
            seen[key] = true;
            Mobius rep = Mobius::make(F, 0, 1, F.neg(Cu), F.neg(Bu));
            long m = element_order(rep);
            ExactInt centralizer = m == 2 ? ExactInt(2) * (q + 1) : ExactInt(q + 1);
            push(rep, centralizer, "nonsplit(" + F.format(Bu) + "," + F.format(Cu) + ")");
        }
    }

    if (static_cast<long>(out.size()) != q + 2)
        throw internal_error("projective group must have q+2 conjugacy classes");
    return out;
}

std::vector<Mobius> enumerate_group(const Field& k, GroupKind kind) {
    long q = k.q();
    std::vector<Mobius> out;
    if (kind == GroupKind::Affine) {
        out.reserve(static_cast<size_t>(q) * (q - 1));
        // canonical forms (1, b; 0, d), d != 0: t -> (t+b)/d
        for (long b = 0; b < q; ++b)
            for (long d = 1; d < q; ++d)
                out.push_back(Mobius{&k, 1, static_cast<uint32_t>(b), 0, static_cast<uint32_t>(d)});
        return out;
    }
    out.reserve(static_cast<size_t>(q) * (q * q - 1));
    for (long b = 0; b < q; ++b)
        for (long c = 0; c < q; ++c)
            for (long d = 0; d < q; ++d) {
                // a = 1: need det = d - bc != 0
                if (k.sub(static_cast<uint32_t>(d),
                          k.mul(static_cast<uint32_t>(b), static_cast<uint32_t>(c))) != 0)
                    out.push_back(Mobius{&k, 1, static_cast<uint32_t>(b), static_cast<uint32_t>(c),
                                         static_cast<uint32_t>(d)});
            }
    for (long c = 1; c < q; ++c)
        for (long d = 0; d < q; ++d)
            out.push_back(Mobius{&k, 0, 1, static_cast<uint32_t>(c), static_cast<uint32_t>(d)});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hypcount
