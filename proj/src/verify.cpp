#include "hypcount/verify.hpp"

#include <chrono>
#include <sstream>

#include "hypcount/errors.hpp"
#include "hypcount/fixtures.hpp"

namespace hypcount {

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

double pow_d(long q, long n) {
    double r = 1;
    for (long i = 0; i < n; ++i) r *= static_cast<double>(q);
    return r;
}

uint64_t clamp_cost(double est) {
    return est > 1e18 ? UINT64_MAX : static_cast<uint64_t>(est);
}

struct Check {
    long long count = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok && first_failure.empty()) first_failure = what;
    }
    bool pass() const { return first_failure.empty(); }
};

constexpr long kSeriesMaxN = 12;
constexpr long kQuotientMaxN = 10;

void run_zeta(long g, long q, Check& chk) {
    (void)g;
    const Variety varieties[] = {Variety::ProjLine, Variety::AffLine, Variety::MultGroup,
                                 Variety::ProjLineMinusQuadPair};
    long p = 0, e = 0;
    factor_prime_power(q, p, e);
    for (Variety v : varieties) {
        CountSeq seq = a_seq_of(v, q);
        long rational = static_cast<long>(
            v == Variety::ProjLine || v == Variety::ProjLineMinusQuadPair ? q + 1
            : v == Variety::AffLine                                       ? q
                                                                          : q - 1);
        for (long n = 0; n <= kSeriesMaxN; ++n) {
            chk.expect(a_variety(v, n, q) == nset_count_via_zeta(v, n, q),
                       "closed form vs zeta count, n=" + std::to_string(n));
            for (long r = 0; r <= std::min(kSeriesMaxN, rational); ++r) {
                ExactInt avoid = a_avoiding(seq, r, n);
                ExactInt meet = b_meeting(seq, r, n);
                chk.expect(avoid + meet == a_variety(v, n, q),
                           "complementarity, r=" + std::to_string(r) + " n=" + std::to_string(n));
                chk.expect(avoid == nset_count_via_zeta_avoiding(v, r, n, q),
                           "avoiding count vs zeta, r=" + std::to_string(r) +
                               " n=" + std::to_string(n));
            }
        }
    }
    // printed closed forms against their defining ratios
    CountSeq proj = a_seq_of(Variety::ProjLine, q);
    for (long n = 4; n <= kSeriesMaxN; ++n) {
        ExactRat lhs = B(ExactRat(n), q);
        ExactRat rhs = ExactRat(b_meeting(proj, q + 1, n)) / (ExactRat(q) * (q - 1) * (q + 1));
        chk.expect(lhs == rhs, "B(" + std::to_string(n) + ") closed form");
    }
    CountSeq aff = a_seq_of(Variety::AffLine, q);
    CountSeq mult = a_seq_of(Variety::MultGroup, q);
    CountSeq p10 = a_seq_of(Variety::ProjLineMinusQuadPair, q);
    for (long n = 1; n <= kSeriesMaxN; ++n) {
        chk.expect(B1(ExactRat(n), q, p) == ExactRat(b_meeting(aff, q / p, n)) / q,
                   "B1(" + std::to_string(n) + ") closed form");
        for (long m : divisors(q - 1))
            chk.expect(B2(m, ExactRat(n), q) == ExactRat(b_meeting(mult, (q - 1) / m, n)) / (q - 1),
                       "B2(" + std::to_string(m) + "," + std::to_string(n) + ") closed form");
        for (long m : divisors(q + 1))
            chk.expect(B0(m, ExactRat(n), q) == ExactRat(b_meeting(p10, (q + 1) / m, n)) / (q + 1),
                       "B0(" + std::to_string(m) + "," + std::to_string(n) + ") closed form");
    }
}

void run_quotient(long g, long q, Check& chk) {
    (void)g;
    FieldPtr k = Field::parse(std::to_string(q));
    for (const auto& cls : conjugacy_representatives(k, GroupKind::Projective)) {
        if (cls.info.type == MobiusType::Identity) continue;
        for (long n = 1; n <= kQuotientMaxN; ++n)
            chk.expect(verify_quotient(cls.rep, n),
                       "fixed-set count vs quotient formula, class " + cls.label +
                           ", n=" + std::to_string(n));
    }
}

void run_epsilon(long g, long q, Check& chk) {
    FieldPtr k = Field::parse(std::to_string(q));
    long n = 2 * g + 2;
    for (const auto& cls : conjugacy_representatives(k, GroupKind::Projective)) {
        for_each_fixed_nset(cls.rep, n, NSetFilter::All, [&](const NSet& s) {
            chk.expect(epsilon_direct(cls.rep, s) == epsilon_table(cls.rep, s),
                       "sign table mismatch, class " + cls.label + ", set " + format_nset(s));
        });
    }
}

void run_burnside(long g, long q, Check& chk, const VerifyOptions& opts) {
    FieldPtr k = Field::parse(std::to_string(q));
    auto pointed = orbit_count_burnside(g, k, Space::Pointed, opts.budget, opts.workers);
    chk.expect(pointed.count == hyp_pointed(g, q), "Burnside pointed count vs formula");
    auto rational = orbit_count_burnside(g, k, Space::Rational, opts.budget, opts.workers);
    chk.expect(rational.count == hyp_rational(g, q), "Burnside rational count vs formula");
}

void run_naive(long g, long q, Check& chk, const VerifyOptions& opts) {
    FieldPtr k = Field::parse(std::to_string(q));
    auto pointed = orbit_count_naive(g, k, Space::Pointed, opts.budget, opts.workers);
    chk.expect(pointed.count == hyp_pointed(g, q), "naive pointed count vs formula");
    auto rational = orbit_count_naive(g, k, Space::Rational, opts.budget, opts.workers);
    chk.expect(rational.count == hyp_rational(g, q), "naive rational count vs formula");
}

void run_tables(long g, long q, Check& chk) {
    if (g <= kFixturePointedMaxGenus)
        chk.expect(fixture_pointed(g, q) == hyp_pointed(g, q), "pointed table row vs formula");
    if (g <= kFixtureRationalMaxGenus)
        chk.expect(fixture_rational(g, q) == hyp_rational(g, q), "rational table row vs formula");
}

}  // namespace

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::Zeta: return "zeta";
        case Tier::Quotient: return "quotient";
        case Tier::Epsilon: return "epsilon";
        case Tier::Burnside: return "burnside";
        case Tier::Naive: return "naive";
        case Tier::Tables: return "tables";
    }
    return "?";
}

std::vector<Tier> parse_tiers(const std::string& csv) {
    if (csv == "all")
        return {Tier::Zeta, Tier::Quotient, Tier::Epsilon, Tier::Burnside, Tier::Naive,
                Tier::Tables};
    std::vector<Tier> out;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item == "zeta") out.push_back(Tier::Zeta);
        else if (item == "quotient") out.push_back(Tier::Quotient);
        else if (item == "epsilon") out.push_back(Tier::Epsilon);
        else if (item == "burnside") out.push_back(Tier::Burnside);
        else if (item == "naive") out.push_back(Tier::Naive);
        else if (item == "tables") out.push_back(Tier::Tables);
        else throw argument_error("unknown tier '" + item + "'");
    }
    if (out.empty()) throw argument_error("no tiers requested");
    return out;
}

uint64_t tier_cost_estimate(Tier t, long g, long q) {
    long n = 2 * g + 2;
    switch (t) {
        case Tier::Zeta:
            return 10000;
        case Tier::Tables:
            return 100;
        case Tier::Quotient:
            // eigenspace walks; order-2 classes dominate with ~q^(n/2) vectors
            return clamp_cost(40.0 * pow_d(q, kQuotientMaxN / 2));
        case Tier::Epsilon:
        case Tier::Burnside:
            // dominated by the identity class enumeration
            return clamp_cost(pow_d(q, n) + pow_d(q, n - 1));
        case Tier::Naive:
            return clamp_cost(pow_d(q, n) + pow_d(q, n - 1));
    }
    return 0;
}

std::vector<TierResult> run_tiers(long g, long q, const std::vector<Tier>& tiers,
                                  const VerifyOptions& opts) {
    CountParams cp(g, q);  // validates g and q
    std::vector<Tier> infeasible;
    for (Tier t : tiers)
        if (tier_cost_estimate(t, g, q) > opts.budget) infeasible.push_back(t);
    if (!infeasible.empty()) {
        // list alternatives among all tiers, not just the requested ones
        std::vector<Tier> feasible;
        for (Tier t : {Tier::Zeta, Tier::Quotient, Tier::Epsilon, Tier::Burnside, Tier::Naive,
                       Tier::Tables})
            if (tier_cost_estimate(t, g, q) <= opts.budget) feasible.push_back(t);
        std::ostringstream os;
        os << "budget " << opts.budget << " is too small for tier";
        if (infeasible.size() > 1) os << "s";
        for (Tier t : infeasible) os << " " << tier_name(t);
        os << "; feasible alternatives:";
        if (feasible.empty()) os << " none";
        for (Tier t : feasible) os << " " << tier_name(t);
        throw budget_error(os.str(), tier_cost_estimate(infeasible.front(), g, q), opts.budget);
    }

    std::vector<TierResult> results;
    for (Tier t : tiers) {
        TierResult r;
        r.tier = t;
        double t0 = now_ms();
        Check chk;
        switch (t) {
            case Tier::Zeta: run_zeta(g, q, chk); break;
            case Tier::Quotient: run_quotient(g, q, chk); break;
            case Tier::Epsilon: run_epsilon(g, q, chk); break;
            case Tier::Burnside: run_burnside(g, q, chk, opts); break;
            case Tier::Naive: run_naive(g, q, chk, opts); break;
            case Tier::Tables: run_tables(g, q, chk); break;
        }
        r.pass = chk.pass();
        r.checks = chk.count;
        r.detail = chk.first_failure;
        r.millis = now_ms() - t0;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace hypcount
