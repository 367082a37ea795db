#include "hypcount/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "hypcount/errors.hpp"

namespace hypcount {

namespace {

long mobius_mu(long n) {
    long mu = 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

ExactInt monic_irreducible_count(long d, long q) {
    if (d < 1) throw argument_error("degree must be positive");
    ExactInt total = 0;
    for (long e : divisors(d)) total += mobius_mu(e) * pow_int(q, d / e);
    return total / d;
}

ExactInt closed_points(Variety v, long d, long q) {
    if (d < 1) throw argument_error("degree must be positive");
    ExactInt M = monic_irreducible_count(d, q);
    switch (v) {
        case Variety::AffLine:
            return M;
        case Variety::ProjLine:
            return d == 1 ? M + 1 : M;
        case Variety::MultGroup:
            return d == 1 ? M - 1 : M;
        case Variety::ProjLineMinusQuadPair:
            if (d == 1) return M + 1;
            return d == 2 ? M - 1 : M;
    }
    throw argument_error("unknown variety");
}

namespace {

ExactInt zeta_count(Variety v, long r, long n, long q) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    ExactInt n1 = closed_points(v, 1, q) - r;
    if (n1 < 0) throw argument_error("cannot remove more rational points than the variety has");
    // poly[j] = number of squarefree configurations of total degree j
    std::vector<ExactInt> poly(n + 1);
    poly[0] = 1;
    for (long j = 1; j <= n; ++j) poly[j] = binomial(n1, j);  // (1+t)^{N_1 - r}
    for (long d = 2; d <= n; ++d) {
        ExactInt nd = closed_points(v, d, q);
        std::vector<ExactInt> next(n + 1);
        for (long j = 0; j * d <= n; ++j) {
            ExactInt c = binomial(nd, j);
            if (c == 0 && j > 0) continue;
            for (long i = 0; i + j * d <= n; ++i) next[i + j * d] += poly[i] * c;
        }
        poly = std::move(next);
    }
    return poly[n];
}

}  // namespace

ExactInt nset_count_via_zeta(Variety v, long n, long q) { return zeta_count(v, 0, n, q); }

ExactInt nset_count_via_zeta_avoiding(Variety v, long r, long n, long q) {
    return zeta_count(v, r, n, q);
}

// --- fixed-set enumeration ---

namespace {

// Kernel basis of (M - c I) over k, reduced row echelon, as column vectors.
std::vector<std::vector<uint32_t>> eigenspace_basis(const Field& k,
                                                    std::vector<std::vector<uint32_t>> M,
                                                    uint32_t c) {
    long n = static_cast<long>(M.size());
    for (long i = 0; i < n; ++i) M[i][i] = k.sub(M[i][i], c);
    // gaussian elimination
    std::vector<long> pivot_col;
    long row = 0;
    for (long col = 0; col < n && row < n; ++col) {
        long sel = -1;
        for (long r = row; r < n; ++r)
            if (M[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[sel], M[row]);
        uint32_t inv = k.inv(M[row][col]);
        for (long j = 0; j < n; ++j) M[row][j] = k.mul(M[row][j], inv);
        for (long r = 0; r < n; ++r) {
            if (r == row || M[r][col] == 0) continue;
            uint32_t factor = M[r][col];
            for (long j = 0; j < n; ++j) M[r][j] = k.sub(M[r][j], k.mul(factor, M[row][j]));
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (long c2 : pivot_col) is_pivot[c2] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (long free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint32_t> v(n, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = k.neg(M[r][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool passes_filter(const NSet& s, NSetFilter filter) {
    switch (filter) {
        case NSetFilter::All:
            return true;
        case NSetFilter::ContainsInfinity:
            return s.at_inf;
        case NSetFilter::ContainsRational:
            return contains_rational_point(s);
    }
    return false;
}

}  // namespace

void for_each_fixed_nset(const Mobius& g, long n, NSetFilter filter,
                         const std::function<void(const NSet&)>& fn) {
    const Field& k = *g.k;
    if (g.is_identity()) {
        for_each_nset(k, n, filter, fn);
        return;
    }
    auto M = substitution_matrix(g, n);
    long q = k.q();
    // S is fixed iff its form is an eigenvector of M; walk every eigenspace
    // projectively (first nonzero combination coefficient normalized to 1).
    for (long c = 1; c < q; ++c) {
        auto basis = eigenspace_basis(k, M, static_cast<uint32_t>(c));
        long r = static_cast<long>(basis.size());
        if (r == 0) continue;
        std::vector<uint32_t> combo(r, 0);
        std::vector<uint32_t> form(n + 1);
        for (long lead = 0; lead < r; ++lead) {
            // coefficients: combo[lead] = 1, combo[lead+1..] free
            std::fill(combo.begin(), combo.end(), 0);
            combo[lead] = 1;
            for (;;) {
                std::fill(form.begin(), form.end(), 0);
                for (long j = lead; j < r; ++j) {
                    if (combo[j] == 0) continue;
                    for (long i = 0; i <= n; ++i)
                        form[i] = k.add(form[i], k.mul(combo[j], basis[j][i]));
                }
                auto s = nset_from_form(k, form);
                if (s && passes_filter(*s, filter)) fn(*s);
                long i = r - 1;
                while (i > lead) {
                    if (++combo[i] < static_cast<uint32_t>(q)) break;
                    combo[i] = 0;
                    --i;
                }
                if (i <= lead) break;
            }
        }
    }
}

ExactInt fixed_nset_count(const Mobius& g, long n, NSetFilter constraint) {
    if (g.is_identity()) throw argument_error("fixed counts need a non-identity map");
    if (constraint == NSetFilter::ContainsInfinity)
        throw argument_error("fixed counts on the complement of Fix do not take the infinity filter");
    ConjClassInfo info = classify(g);
    const Field& k = *g.k;
    ExactInt count = 0;
    for_each_fixed_nset(g, n, NSetFilter::All, [&](const NSet& s) {
        // exclude sets meeting Fix(g)
        for (const auto& t : info.fixed) {
            if (t.inf) {
                if (s.at_inf) return;
            } else {
                uint32_t acc = 1;
                for (long i = s.deg() - 1; i >= 0; --i) acc = k.add(k.mul(acc, t.v), s.f[i]);
                if (acc == 0) return;
            }
        }
        if (info.type == MobiusType::Nonsplit) {
            const Field& ext = *info.ext;
            uint32_t tv = info.fixed_ext[0].v;
            uint32_t acc = ext.one();
            for (long i = s.deg() - 1; i >= 0; --i)
                acc = ext.add(ext.mul(acc, tv), k.embed(ext, s.f[i]));
            if (acc == 0) return;
        }
        if (constraint == NSetFilter::ContainsRational && !contains_rational_point(s)) return;
        ++count;
    });
    return count;
}

bool verify_quotient(const Mobius& g, long n) {
    ConjClassInfo info = classify(g);
    long q = g.k->q();
    long m = info.order;
    Variety v;
    long rational_points_of_v;
    switch (info.type) {
        case MobiusType::Parabolic:
            v = Variety::AffLine;
            rational_points_of_v = q;
            break;
        case MobiusType::Split:
            v = Variety::MultGroup;
            rational_points_of_v = q - 1;
            break;
        case MobiusType::Nonsplit:
            v = Variety::ProjLineMinusQuadPair;
            rational_points_of_v = q + 1;
            break;
        default:
            throw argument_error("verify_quotient needs a non-identity map");
    }
    ExactInt expect_all = 0, expect_rat = 0;
    if (n % m == 0) {
        expect_all = a_variety(v, n / m, q);
        expect_rat = b_meeting(a_seq_of(v, q), rational_points_of_v / m, n / m);
    }
    return fixed_nset_count(g, n, NSetFilter::All) == expect_all &&
           fixed_nset_count(g, n, NSetFilter::ContainsRational) == expect_rat;
}

// --- orbit counting ---

namespace {

struct GroupTables {
    std::vector<Mobius> elements;
    std::vector<std::vector<std::vector<uint32_t>>> sub_matrices;  // per element, degree n
};

GroupTables build_group_tables(const Field& k, GroupKind kind, long n) {
    GroupTables t;
    t.elements = enumerate_group(k, kind);
    t.sub_matrices.reserve(t.elements.size());
    for (const auto& g : t.elements) t.sub_matrices.push_back(substitution_matrix(g, n));
    return t;
}

// One orbit expansion: all images of `pair` under the group, as indices.
// Returns the orbit minimum and fills `scratch` with the distinct indices.
uint64_t expand_orbit(const Field& k, const GroupTables& tables, long n,
                      const TwistedPair& pair, std::vector<uint64_t>& scratch) {
    scratch.clear();
    auto F = nset_to_form(pair.s);
    uint64_t minimum = UINT64_MAX;
    std::vector<uint32_t> out(n + 1);
    const bool prime = k.e() == 1;
    const uint64_t q = static_cast<uint64_t>(k.q());
    for (size_t gi = 0; gi < tables.elements.size(); ++gi) {
        const Mobius& g = tables.elements[gi];
        const auto& M = tables.sub_matrices[gi];
        if (prime) {
            for (long row = 0; row <= n; ++row) {
                uint64_t acc = 0;
                const uint32_t* mrow = M[row].data();
                for (long col = 0; col <= n; ++col) acc += 1ull * mrow[col] * F[col];
                out[row] = static_cast<uint32_t>(acc % q);
            }
        } else {
            for (long row = 0; row <= n; ++row) {
                uint32_t acc = 0;
                for (long col = 0; col <= n; ++col) acc = k.add(acc, k.mul(M[row][col], F[col]));
                out[row] = acc;
            }
        }
        uint32_t J = multiplier(g, pair.s);
        SquareClass lam = pair.lam;
        if (!k.is_square(J))
            lam = lam == SquareClass::Trivial ? SquareClass::NonTrivial : SquareClass::Trivial;
        uint64_t idx = pair_index_from_form(k, n, lam, out);
        minimum = std::min(minimum, idx);
        scratch.push_back(idx);
    }
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    return minimum;
}

uint64_t enumeration_cost(long q, long n) {
    double est = 0;
    double qn = 1;
    for (long i = 0; i < n; ++i) qn *= static_cast<double>(q);
    est = qn + qn / q;
    return est > 1e18 ? UINT64_MAX : static_cast<uint64_t>(est);
}

}  // namespace

OrbitReport orbit_count_naive(long g, const FieldPtr& kp, Space space, uint64_t budget,
                              int workers) {
    const Field& k = *kp;
    double t0 = now_ms();
    CountParams cp(g, k.q());
    long n = cp.n;
    long q = k.q();
    GroupKind kind = space == Space::Pointed ? GroupKind::Affine : GroupKind::Projective;
    NSetFilter filter =
        space == Space::Pointed ? NSetFilter::ContainsInfinity : NSetFilter::ContainsRational;

    uint64_t enum_cost = enumeration_cost(q, n);
    if (enum_cost > budget)
        throw budget_error("naive orbit count needs at least " + std::to_string(enum_cost) +
                               " enumeration steps, budget is " + std::to_string(budget),
                           enum_cost, budget);

    GroupTables tables = build_group_tables(k, kind, n);
    uint64_t group_size = tables.elements.size();
    uint64_t index_count = pair_index_count(q, n);

    int W = std::max(1, workers);
    // partition the index space; each worker keeps its own visited map and
    // reports the canonical minima of the orbits it meets
    std::vector<std::vector<uint64_t>> minima(W);
    std::vector<std::vector<uint64_t>> sizes(W);
    std::vector<uint64_t> works(W, 0);
    std::vector<std::exception_ptr> errors(W);

    // workers slice the enumeration by the leading coefficient of the set
    auto run = [&](int w) {
        try {
            std::vector<bool> visited(index_count, false);
            std::vector<uint64_t> scratch;
            uint32_t lead_lo = static_cast<uint32_t>(q * w / W);
            uint32_t lead_hi = static_cast<uint32_t>(q * (w + 1) / W);
            uint64_t local_work = (enum_cost / W) + 1;  // enumeration charge
            for_each_nset_slice(k, n, filter, lead_lo, lead_hi, [&](const NSet& s) {
                for (SquareClass lam : {SquareClass::Trivial, SquareClass::NonTrivial}) {
                    TwistedPair pair{lam, s};
                    uint64_t idx = pair_index(pair, n);
                    if (visited[idx]) continue;
                    local_work += group_size;
                    if (local_work > budget)
                        throw budget_error("naive orbit count exceeded the budget of " +
                                               std::to_string(budget) + " evaluations",
                                           local_work, budget);
                    uint64_t min_idx = expand_orbit(k, tables, n, pair, scratch);
                    for (uint64_t im : scratch) visited[im] = true;
                    minima[w].push_back(min_idx);
                    sizes[w].push_back(scratch.size());
                }
            });
            works[w] = local_work;
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (W == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < W; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    // deterministic merge: orbits met by several workers collapse by minimum
    OrbitReport report;
    report.g = g;
    report.q = q;
    report.space = space;
    report.method = OrbitMethod::Naive;
    std::vector<std::pair<uint64_t, uint64_t>> merged;
    for (int w = 0; w < W; ++w) {
        for (size_t i = 0; i < minima[w].size(); ++i) merged.emplace_back(minima[w][i], sizes[w][i]);
        report.work += works[w];
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (auto& [min_idx, size] : merged) {
        report.orbit_minima.push_back(min_idx);
        report.orbit_sizes.push_back(size);
    }
    report.count = static_cast<long>(merged.size());
    report.millis = now_ms() - t0;
    return report;
}

OrbitReport orbit_count_burnside(long g, const FieldPtr& kp, Space space, uint64_t budget,
                                 int workers) {
    const Field& k = *kp;
    double t0 = now_ms();
    CountParams cp(g, k.q());
    long n = cp.n;
    GroupKind kind = space == Space::Pointed ? GroupKind::Affine : GroupKind::Projective;
    NSetFilter filter =
        space == Space::Pointed ? NSetFilter::ContainsInfinity : NSetFilter::ContainsRational;

    uint64_t enum_cost = enumeration_cost(k.q(), n);
    if (enum_cost > budget)
        throw budget_error("Burnside count needs at least " + std::to_string(enum_cost) +
                               " enumeration steps for the identity class, budget is " +
                               std::to_string(budget),
                           enum_cost, budget);

    auto reps = conjugacy_representatives(kp, kind);
    OrbitReport report;
    report.g = g;
    report.q = k.q();
    report.space = space;
    report.method = OrbitMethod::Burnside;
    report.per_class.resize(reps.size());

    std::vector<std::exception_ptr> errors(reps.size());
    std::vector<uint64_t> class_work(reps.size(), 0);
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= reps.size()) return;
            try {
                const auto& cls = reps[i];
                ExactInt fixed_with_sign = 0;
                uint64_t work = 0;
                for_each_fixed_nset(cls.rep, n, filter, [&](const NSet& s) {
                    ++work;
                    if (epsilon_direct(cls.rep, s) == 1) ++fixed_with_sign;
                });
                ClassContribution c;
                c.label = cls.label;
                c.order = cls.info.order;
                c.weight = cls.weight;
                c.fixed_pairs = 2 * fixed_with_sign;  // two square classes survive
                c.contribution = cls.weight * ExactRat(c.fixed_pairs);
                report.per_class[i] = std::move(c);
                class_work[i] = work;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    int W = std::max(1, workers);
    if (W == 1) {
        run();
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < W; ++w) threads.emplace_back(run);
        for (auto& t : threads) t.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    for (uint64_t w : class_work) report.work += w;

    ExactRat total = 0;
    for (const auto& c : report.per_class) total += c.contribution;
    if (!is_integer(total)) throw internal_error("Burnside sum is not an integer");
    report.count = numerator(total);
    report.millis = now_ms() - t0;
    return report;
}

}  // namespace hypcount
