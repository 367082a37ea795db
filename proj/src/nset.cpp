#include "hypcount/nset.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "hypcount/errors.hpp"

namespace hypcount {

namespace {

constexpr size_t kMaxDeg = 32;

// gcd(f, f') != const detection with stack buffers; coeffs low degree first,
// lengths include the leading coefficient.
bool squarefree_monic(const Field& k, const uint32_t* f, long deg) {
    if (deg <= 1) return true;
    std::array<uint32_t, kMaxDeg> a{}, b{};
    long da = deg;
    for (long i = 0; i <= deg; ++i) a[i] = (i == deg) ? 1 : f[i];
    long db = -1;
    for (long i = 1; i <= deg; ++i) {
        uint32_t c = k.mul(static_cast<uint32_t>(i % k.p()), a[i]);
        b[i - 1] = c;
        if (c != 0) db = i - 1;
    }
    if (db < 0) return false;  // derivative vanishes: f is a p-th power pattern
    // euclidean loop on (a, b)
    for (;;) {
        if (db == 0) return true;  // constant gcd
        uint32_t lead_inv = k.inv(b[db]);
        while (da >= db) {
            uint32_t c = k.mul(a[da], lead_inv);
            if (c != 0)
                for (long i = 0; i <= db; ++i)
                    a[da - db + i] = k.sub(a[da - db + i], k.mul(c, b[i]));
            --da;
            while (da >= 0 && a[da] == 0) --da;
        }
        if (da < 0) return false;  // b divides a, nonconstant common factor
        for (long i = 0; i <= std::max(da, db); ++i) std::swap(a[i], b[i]);
        std::swap(da, db);
    }
}

uint32_t eval_monic(const Field& k, const std::vector<uint32_t>& f, uint32_t t) {
    uint32_t acc = 1;  // leading coefficient
    for (long i = static_cast<long>(f.size()) - 1; i >= 0; --i)
        acc = k.add(k.mul(acc, t), f[i]);
    return acc;
}

// derivative of the monic polynomial at t
uint32_t eval_monic_derivative(const Field& k, const std::vector<uint32_t>& f, uint32_t t) {
    long deg = static_cast<long>(f.size());
    uint32_t acc = static_cast<uint32_t>(deg % k.p());
    for (long i = deg - 1; i >= 1; --i)
        acc = k.add(k.mul(acc, t), k.mul(static_cast<uint32_t>(i % k.p()), f[i]));
    return acc;
}

}  // namespace

NSet make_nset(const Field& k, std::vector<uint32_t> monic_coeffs, bool at_inf) {
    if (monic_coeffs.size() + 1 > kMaxDeg)
        throw argument_error("polynomial degree exceeds the supported limit");
    for (uint32_t c : monic_coeffs)
        if (c >= static_cast<uint32_t>(k.q())) throw argument_error("coefficient out of range");
    if (!squarefree_monic(k, monic_coeffs.data(), static_cast<long>(monic_coeffs.size())))
        throw argument_error("polynomial has repeated roots");
    return NSet{&k, std::move(monic_coeffs), at_inf};
}

NSet nset_from_points(const Field& k, const std::vector<ProjPoint>& pts) {
    bool inf = false;
    std::vector<uint32_t> poly{1};
    for (const auto& t : pts) {
        if (t.inf) {
            if (inf) throw argument_error("repeated point at infinity");
            inf = true;
            continue;
        }
        // multiply by (x - t)
        std::vector<uint32_t> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = k.add(next[i + 1], poly[i]);
            next[i] = k.sub(next[i], k.mul(poly[i], t.v));
        }
        poly = std::move(next);
    }
    poly.pop_back();  // drop leading 1
    return make_nset(k, poly, inf);
}

std::string format_nset(const NSet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    auto sep = [&] {
        if (!first) os << ";";
        first = false;
    };
    for (size_t i = 0; i < s.f.size(); ++i) {
        sep();
        os << s.k->format(s.f[i]);
    }
    sep();
    os << "1";  // leading coefficient
    os << "}";
    if (s.at_inf) os << "+inf";
    return os.str();
}

bool contains_rational_point(const NSet& s) {
    if (s.at_inf) return true;
    const Field& k = *s.k;
    for (long t = 0; t < k.q(); ++t)
        if (eval_monic(k, s.f, static_cast<uint32_t>(t)) == 0) return true;
    return false;
}

std::vector<ProjPoint> rational_points(const NSet& s) {
    const Field& k = *s.k;
    std::vector<ProjPoint> out;
    for (long t = 0; t < k.q(); ++t)
        if (eval_monic(k, s.f, static_cast<uint32_t>(t)) == 0)
            out.push_back(ProjPoint::finite(static_cast<uint32_t>(t)));
    if (s.at_inf) out.push_back(ProjPoint::infinity());
    return out;
}

std::vector<uint32_t> nset_to_form(const NSet& s) {
    long n = s.n();
    std::vector<uint32_t> F(n + 1, 0);
    for (long i = 0; i < s.deg(); ++i) F[i] = s.f[i];
    F[s.deg()] = 1;
    return F;
}

std::optional<NSet> nset_from_form(const Field& k, const std::vector<uint32_t>& form) {
    long n = static_cast<long>(form.size()) - 1;
    long top = n;
    while (top >= 0 && form[top] == 0) --top;
    if (top < n - 1) return std::nullopt;  // Z^2 divides the form
    if (top < 0) return std::nullopt;
    uint32_t inv_lead = k.inv(form[top]);
    std::vector<uint32_t> f(top);
    for (long i = 0; i < top; ++i) f[i] = k.mul(form[i], inv_lead);
    if (!squarefree_monic(k, f.data(), top)) return std::nullopt;
    return NSet{&k, std::move(f), top == n - 1};
}

std::vector<std::vector<uint32_t>> substitution_matrix(const Mobius& g, long n) {
    const Field& k = *g.k;
    // powers of (d X - b Z) and (-c X + a Z) as coefficient vectors in X
    std::vector<std::vector<uint32_t>> pw1(n + 1), pw2(n + 1);
    pw1[0] = {1};
    pw2[0] = {1};
    uint32_t nb = k.neg(g.b), nc = k.neg(g.c);
    for (long i = 1; i <= n; ++i) {
        pw1[i].assign(i + 1, 0);
        pw2[i].assign(i + 1, 0);
        for (long j = 0; j < i; ++j) {
            // multiply pw1[i-1] by (d X - b Z): X coefficient shifts up
            pw1[i][j + 1] = k.add(pw1[i][j + 1], k.mul(pw1[i - 1][j], g.d));
            pw1[i][j] = k.add(pw1[i][j], k.mul(pw1[i - 1][j], nb));
            pw2[i][j + 1] = k.add(pw2[i][j + 1], k.mul(pw2[i - 1][j], nc));
            pw2[i][j] = k.add(pw2[i][j], k.mul(pw2[i - 1][j], g.a));
        }
    }
    std::vector<std::vector<uint32_t>> M(n + 1, std::vector<uint32_t>(n + 1, 0));
    for (long i = 0; i <= n; ++i) {
        // column i: coefficients of (dX-bZ)^i (-cX+aZ)^(n-i)
        for (long u = 0; u <= i; ++u)
            for (long v = 0; v <= n - i; ++v) {
                uint32_t prod = k.mul(pw1[i][u], pw2[n - i][v]);
                M[u + v][i] = k.add(M[u + v][i], prod);
            }
    }
    return M;
}

NSet act(const Mobius& g, const NSet& s) {
    if (g.k != s.k) throw argument_error("acting with a map over a different field");
    const Field& k = *g.k;
    long n = s.n();
    auto M = substitution_matrix(g, n);
    auto F = nset_to_form(s);
    std::vector<uint32_t> out(n + 1, 0);
    for (long row = 0; row <= n; ++row) {
        uint32_t acc = 0;
        for (long col = 0; col <= n; ++col) acc = k.add(acc, k.mul(M[row][col], F[col]));
        out[row] = acc;
    }
    auto res = nset_from_form(k, out);
    if (!res) throw internal_error("projective action destroyed squarefreeness");
    return *res;
}

uint32_t multiplier(const Mobius& g, const NSet& s) {
    const Field& k = *g.k;
    long D = s.deg();
    uint32_t det = g.det();
    auto powi = [&k](uint32_t x, long e) {
        uint32_t r = 1;
        for (long i = 0; i < e; ++i) r = k.mul(r, x);
        return r;
    };
    if (g.c == 0) {
        // every finite point contributes det/d, infinity contributes d
        uint32_t J = powi(k.div(det, g.d), D);
        if (s.at_inf) J = k.mul(J, g.d);
        return J;
    }
    uint32_t t0 = k.neg(k.div(g.d, g.c));
    uint32_t ft0 = eval_monic(k, s.f, t0);
    uint32_t J;
    if (ft0 != 0) {
        // prod over roots of (c t + d) = c^D (-1)^D f(t0)
        uint32_t denom = k.mul(powi(g.c, D), ft0);
        if (D % 2 == 1) denom = k.neg(denom);
        J = k.div(powi(det, D), denom);
    } else {
        // t0 is a root: its local factor is c, the rest uses f'(t0)
        uint32_t fpt0 = eval_monic_derivative(k, s.f, t0);
        uint32_t denom = k.mul(powi(g.c, D - 1), fpt0);
        if ((D - 1) % 2 == 1) denom = k.neg(denom);
        J = k.mul(k.div(powi(det, D - 1), denom), g.c);
    }
    if (s.at_inf) J = k.mul(J, k.neg(k.div(det, g.c)));
    return J;
}

int epsilon_direct(const Mobius& g, const NSet& s) {
    if (s.n() % 2 != 0)
        throw domain_error("the multiplier sign is only lift-independent for even n");
    return s.k->is_square(multiplier(g, s)) ? 1 : -1;
}

namespace {

bool set_contains(const NSet& s, const ProjPoint& t) {
    if (t.inf) return s.at_inf;
    return eval_monic(*s.k, s.f, t.v) == 0;
}

// membership of a quadratic point given over the extension
bool set_contains_ext(const NSet& s, const Field& ext, const ProjPoint& t) {
    if (t.inf) return s.at_inf;
    const Field& k = *s.k;
    uint32_t acc = ext.one();
    for (long i = s.deg() - 1; i >= 0; --i)
        acc = ext.add(ext.mul(acc, t.v), k.embed(ext, s.f[i]));
    return acc == 0;
}

}  // namespace

int epsilon_table(const Mobius& g, const NSet& s) {
    if (s.n() % 2 != 0) throw domain_error("table sign requires even n");
    if (g.is_identity()) return 1;  // fixes everything
    if (!(act(g, s) == s)) throw domain_error("table sign requires a fixed set");
    ConjClassInfo info = classify(g);
    long n = s.n();
    long m = info.order;
    long q = g.k->q();
    switch (info.type) {
        case MobiusType::Identity:
        case MobiusType::Parabolic:
            return 1;
        case MobiusType::Split: {
            // read the set through the fixed point playing the infinity role
            ProjPoint role = info.fixed[0].inf || info.fixed[1].inf
                                 ? ProjPoint::infinity()
                                 : std::min(info.fixed[0], info.fixed[1]);
            if (!set_contains(s, role)) return 1;
            return ((q - 1) / m) % 2 == 0 ? 1 : -1;
        }
        case MobiusType::Nonsplit: {
            bool fix_in = set_contains_ext(s, *info.ext, info.fixed_ext[0]);
            long expo;
            if (fix_in) {
                if ((n - 2) % m != 0) throw internal_error("fixed set size incompatible with order");
                expo = (q + 1) / m + (n - 2) / m;
            } else {
                if (n % m != 0) throw internal_error("fixed set size incompatible with order");
                expo = n / m;
            }
            return expo % 2 == 0 ? 1 : -1;
        }
    }
    throw internal_error("unreachable");
}

void for_each_nset_slice(const Field& k, long n, NSetFilter filter, uint32_t lead_lo,
                         uint32_t lead_hi, const std::function<void(const NSet&)>& fn) {
    if (n < 1) throw argument_error("n must be positive");
    long q = k.q();
    auto run_block = [&](long D, bool inf) {
        if (D == 0) {
            if (lead_lo > 0) return;  // the constant polynomial belongs to the first slice
            NSet s;
            s.k = &k;
            s.at_inf = inf;
            if (filter != NSetFilter::ContainsRational || inf) fn(s);
            return;
        }
        NSet s;
        s.k = &k;
        s.at_inf = inf;
        s.f.assign(D, 0);
        s.f[0] = lead_lo;
        // odometer: c_0 most significant, c_{D-1} fastest
        for (;;) {
            if (squarefree_monic(k, s.f.data(), D)) {
                bool keep = true;
                if (filter == NSetFilter::ContainsInfinity) keep = inf;
                else if (filter == NSetFilter::ContainsRational) keep = contains_rational_point(s);
                if (keep) fn(s);
            }
            long i = D - 1;
            while (i >= 0) {
                uint32_t limit = i == 0 ? lead_hi : static_cast<uint32_t>(q);
                if (++s.f[i] < limit) break;
                if (i == 0) return;
                s.f[i] = 0;
                --i;
            }
        }
    };
    if (lead_lo >= lead_hi) return;
    if (filter != NSetFilter::ContainsInfinity) run_block(n, false);
    run_block(n - 1, true);
}

void for_each_nset(const Field& k, long n, NSetFilter filter,
                   const std::function<void(const NSet&)>& fn) {
    for_each_nset_slice(k, n, filter, 0, static_cast<uint32_t>(k.q()), fn);
}

ExactInt count_nsets(const Field& k, long n, NSetFilter filter) {
    ExactInt count = 0;
    for_each_nset(k, n, filter, [&](const NSet&) { ++count; });
    return count;
}

TwistedPair act_twisted(const Mobius& g, const TwistedPair& pair) {
    uint32_t J = multiplier(g, pair.s);
    bool flip = !pair.s.k->is_square(J);
    SquareClass lam = pair.lam;
    if (flip) lam = lam == SquareClass::Trivial ? SquareClass::NonTrivial : SquareClass::Trivial;
    return TwistedPair{lam, act(g, pair.s)};
}

uint64_t pair_index(const TwistedPair& pair, long n) {
    const Field& k = *pair.s.k;
    uint64_t q = static_cast<uint64_t>(k.q());
    uint64_t qn = 1, qn1 = 1;
    for (long i = 0; i < n; ++i) qn *= q;
    qn1 = qn / q;
    uint64_t block = pair.lam == SquareClass::Trivial ? 0 : qn + qn1;
    if (pair.s.at_inf) block += qn;
    uint64_t idx = 0;
    for (uint32_t c : pair.s.f) idx = idx * q + c;  // c_0 most significant
    return block + idx;
}

uint64_t pair_index_count(long q, long n) {
    uint64_t qn = 1;
    for (long i = 0; i < n; ++i) qn *= static_cast<uint64_t>(q);
    return 2 * (qn + qn / q);
}

uint64_t pair_index_from_form(const Field& k, long n, SquareClass lam,
                              const std::vector<uint32_t>& form) {
    uint64_t q = static_cast<uint64_t>(k.q());
    uint64_t qn = 1;
    for (long i = 0; i < n; ++i) qn *= q;
    uint64_t qn1 = qn / q;
    long top = n;
    while (top >= 0 && form[top] == 0) --top;
    uint64_t block = lam == SquareClass::Trivial ? 0 : qn + qn1;
    if (top == n - 1) block += qn;
    uint32_t inv_lead = k.inv(form[top]);
    uint64_t idx = 0;
    for (long i = 0; i < top; ++i) idx = idx * q + k.mul(form[i], inv_lead);
    return block + idx;
}

TwistedPair pair_from_index(const Field& k, long n, uint64_t index) {
    uint64_t q = static_cast<uint64_t>(k.q());
    uint64_t qn = 1;
    for (long i = 0; i < n; ++i) qn *= q;
    uint64_t qn1 = qn / q;
    TwistedPair pair;
    pair.lam = SquareClass::Trivial;
    if (index >= qn + qn1) {
        pair.lam = SquareClass::NonTrivial;
        index -= qn + qn1;
    }
    long D = n;
    pair.s.k = &k;
    pair.s.at_inf = false;
    if (index >= qn) {
        pair.s.at_inf = true;
        index -= qn;
        D = n - 1;
    }
    pair.s.f.assign(D, 0);
    for (long i = D - 1; i >= 0; --i) {
        pair.s.f[i] = static_cast<uint32_t>(index % q);
        index /= q;
    }
    return pair;
}

}  // namespace hypcount
