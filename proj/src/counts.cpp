#include "hypcount/counts.hpp"

#include <string>

#include "hypcount/errors.hpp"

namespace hypcount {

namespace {

// Bracket helper: the argument of a normalized count as an exact rational.
// Returns -1 when the rational is not a positive integer.
long as_positive_int(const ExactRat& x) {
    if (x <= 0 || !is_integer(x)) return -1;
    return static_cast<long>(numerator(x));
}

ExactRat q_pow(long q, long n) { return ExactRat(pow_int(q, n)); }

}  // namespace

CountParams::CountParams(long g, long q) : g(g), q(q) {
    if (g < 2) throw argument_error("genus must be at least 2, got " + std::to_string(g));
    if (!factor_prime_power(q, p, e) || p == 2)
        throw argument_error("q must be an odd prime power, got " + std::to_string(q));
    n = 2 * g + 2;
}

ExactInt a_variety(Variety v, long n, long q) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    ExactInt Q(q);
    switch (v) {
        case Variety::ProjLine:
            if (n == 1) return Q + 1;
            if (n == 2) return Q * Q;
            return pow_int(Q, n) - pow_int(Q, n - 2);
        case Variety::AffLine:
            if (n == 1) return Q;
            return pow_int(Q, n) - pow_int(Q, n - 1);
        case Variety::MultGroup: {
            // (q-1) * (q^n - (-1)^n) / (q+1)
            ExactInt num = (Q - 1) * (pow_int(Q, n) - (n % 2 == 0 ? 1 : -1));
            if (num % (Q + 1) != 0) throw internal_error("a_Gm not integral");
            return num / (Q + 1);
        }
        case Variety::ProjLineMinusQuadPair: {
            ExactInt s1 = (n / 2 + n % 2) % 2 == 0 ? 1 : -1;        // (-1)^ceil(n/2)
            ExactInt s2 = ((n - 1) / 2 + (n - 1) % 2) % 2 == 0 ? 1 : -1;  // (-1)^ceil((n-1)/2)
            ExactInt num = (Q + 1) * (pow_int(Q, n + 1) - pow_int(Q, n) - s1 * Q + s2);
            if (num % (Q * Q + 1) != 0) throw internal_error("a_P10 not integral");
            return num / (Q * Q + 1);
        }
    }
    throw argument_error("unknown variety");
}

ExactRat A1(const ExactRat& n, long q) {
    long m = as_positive_int(n);
    if (m < 0) return 0;
    return ExactRat(a_variety(Variety::AffLine, m, q)) / q;
}

ExactRat A2(const ExactRat& n, long q) {
    long m = as_positive_int(n);
    if (m < 0) return 0;
    return ExactRat(a_variety(Variety::MultGroup, m, q)) / (q - 1);
}

ExactRat A0(const ExactRat& n, long q) {
    long m = as_positive_int(n);
    if (m < 0) return 0;
    return ExactRat(a_variety(Variety::ProjLineMinusQuadPair, m, q)) / (q + 1);
}

ExactInt a_avoiding(const CountSeq& a_seq, long r, long n) {
    if (r < 0 || n < 0) throw argument_error("a_avoiding: negative argument");
    ExactInt total = 0;
    for (long i = 0; i <= n; ++i) {
        ExactInt term = multiset_coeff(r, i) * a_seq(n - i);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

ExactInt b_meeting(const CountSeq& a_seq, long r, long n) {
    if (r < 0 || n < 0) throw argument_error("b_meeting: negative argument");
    ExactInt total = 0;
    for (long i = 1; i <= n; ++i) {
        ExactInt term = multiset_coeff(r, i) * a_seq(n - i);
        total += (i % 2 == 1) ? term : -term;
    }
    return total;
}

CountSeq a_seq_of(Variety v, long q) {
    return [v, q](long n) { return a_variety(v, n, q); };
}

ExactRat B(const ExactRat& narg, long q) {
    long n = as_positive_int(narg);
    if (n < 0) return 0;
    if (n <= 3) throw domain_error("B(n) is defined for n > 3 only");
    ExactRat total = 0;
    for (long i = 1; i <= n - 3; ++i) {
        ExactRat term = ExactRat(multiset_coeff(q + 1, i)) * q_pow(q, n - 3 - i);
        total += (i % 2 == 1) ? term : -term;
    }
    ExactRat tail = ExactRat(n - 1, ExactInt(n) * (q + 1)) * ExactRat(multiset_coeff(q + 1, n - 2));
    total += (n % 2 == 0) ? -tail : tail;
    return total;
}

ExactRat B0(long m, const ExactRat& narg, long q) {
    if (m < 1 || (q + 1) % m != 0) throw argument_error("B0 requires m | q+1");
    long n = as_positive_int(narg);
    if (n < 0) return 0;
    long r = (q + 1) / m;
    ExactRat total = 0;
    for (long i = 1; i <= n - 1; ++i) {
        ExactRat term = ExactRat(multiset_coeff(r, i)) * A0(ExactRat(n - i), q);
        total += (i % 2 == 1) ? term : -term;
    }
    ExactRat tail = ExactRat(multiset_coeff(r, n)) / (q + 1);
    total += (n % 2 == 0) ? -tail : tail;
    return total;
}

ExactRat B1(const ExactRat& narg, long q, long p) {
    if (p < 2 || q % p != 0) throw argument_error("B1 requires p | q");
    long n = as_positive_int(narg);
    if (n < 0) return 0;
    long r = q / p;
    ExactRat total = 0;
    for (long i = 1; i <= n - 1; ++i) {
        ExactRat term = ExactRat(multiset_coeff(r, i)) * A1(ExactRat(n - i), q);
        total += (i % 2 == 1) ? term : -term;
    }
    ExactRat tail = ExactRat(multiset_coeff(r, n)) / q;
    total += (n % 2 == 0) ? -tail : tail;
    return total;
}

ExactRat B2(long m, const ExactRat& narg, long q) {
    if (m < 1 || (q - 1) % m != 0) throw argument_error("B2 requires m | q-1");
    long n = as_positive_int(narg);
    if (n < 0) return 0;
    long r = (q - 1) / m;
    ExactRat total = 0;
    for (long i = 1; i <= n - 1; ++i) {
        ExactRat term = ExactRat(multiset_coeff(r, i)) * A2(ExactRat(n - i), q);
        total += (i % 2 == 1) ? term : -term;
    }
    ExactRat tail = ExactRat(multiset_coeff(r, n)) / (q - 1);
    total += (n % 2 == 0) ? -tail : tail;
    return total;
}

ExactInt hyp_pointed(long g, long q) {
    CountParams cp(g, q);
    ExactRat total = 2 * q_pow(q, 2 * g - 1);
    total += 2 * A1(ExactRat(2 * g + 1, cp.p), q);
    for (long m : divisors(2 * g + 1)) {
        if (m == 1) continue;
        if ((q - 1) % m == 0) total += 2 * euler_phi(m) * A2(ExactRat(2 * g + 1, m), q);
    }
    for (long m : divisors(2 * g)) {
        if (m == 1) continue;
        if ((q - 1) % (2 * m) == 0) total += 2 * euler_phi(m) * A2(ExactRat(2 * g, m), q);
    }
    if (!is_integer(total)) throw internal_error("hyp_pointed produced a non-integer");
    return numerator(total);
}

ExactInt hyp_rational(long g, long q) {
    CountParams cp(g, q);
    ExactRat total = 2 * B(ExactRat(2 * g + 2), q);
    total += 2 * A1(ExactRat(2 * g + 1, cp.p), q);
    total += 2 * B1(ExactRat(2 * g + 2, cp.p), q, cp.p);
    for (long m : divisors(2 * g)) {
        if (m == 1) continue;
        if ((q + 1) % m == 0 && ((2 * g / m) - ((q + 1) / m)) % 2 == 0)
            total += euler_phi(m) * B0(m, ExactRat(2 * g, m), q);
        if ((q - 1) % (2 * m) == 0) total += euler_phi(m) * A2(ExactRat(2 * g, m), q);
    }
    for (long m : divisors(2 * g + 1)) {
        if (m == 1) continue;
        if ((q - 1) % m == 0) total += 2 * euler_phi(m) * A2(ExactRat(2 * g + 1, m), q);
    }
    for (long m : divisors(2 * g + 2)) {
        if (m == 1) continue;
        if ((q + 1) % m == 0 && (g + 1) % m == 0)
            total += euler_phi(m) * B0(m, ExactRat(2 * g + 2, m), q);
        if ((q - 1) % m == 0) total += euler_phi(m) * B2(m, ExactRat(2 * g + 2, m), q);
    }
    if (!is_integer(total)) throw internal_error("hyp_rational produced a non-integer");
    return numerator(total);
}

}  // namespace hypcount
