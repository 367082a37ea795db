#include "hypcount/fixtures.hpp"

#include <sstream>

#include "hypcount/errors.hpp"

namespace hypcount {

namespace {

struct Cond {
    enum Kind { Always, QMod, CharIs } kind = Always;
    long mod = 0;  // q ≡ rem (mod mod)
    long rem = 0;
    long pval = 0;

    bool holds(long q, long p) const {
        switch (kind) {
            case Always:
                return true;
            case QMod:
                return (q - rem) % mod == 0;
            case CharIs:
                return p == pval;
        }
        return false;
    }
    std::string str() const {
        std::ostringstream os;
        if (kind == Always) return "";
        if (kind == CharIs) {
            os << "p=" << pval;
        } else {
            os << mod << "|q" << (rem >= 0 ? "-" : "+") << std::abs(rem);
        }
        return os.str();
    }
};

Cond always() { return Cond{}; }
Cond qmod(long mod, long rem) { return Cond{Cond::QMod, mod, rem, 0}; }
Cond char_is(long p) { return Cond{Cond::CharIs, 0, 0, p}; }

struct Term {
    std::vector<ExactRat> poly;  // ascending powers of q
    Cond cond;
};

Term term(std::vector<ExactRat> poly, Cond cond = always()) {
    return Term{std::move(poly), cond};
}

ExactRat frac(long n, long d) { return ExactRat(n, d); }

ExactRat eval_poly(const std::vector<ExactRat>& poly, long q) {
    ExactRat acc = 0;
    for (long i = static_cast<long>(poly.size()) - 1; i >= 0; --i) acc = acc * q + poly[i];
    return acc;
}

std::string poly_str(const std::vector<ExactRat>& poly) {
    std::ostringstream os;
    bool first = true;
    for (long i = static_cast<long>(poly.size()) - 1; i >= 0; --i) {
        if (poly[i] == 0 && !(first && i == 0)) continue;
        if (!first) os << "+";
        os << poly[i].str();
        if (i > 0) os << "*q^" << i;
        first = false;
    }
    return os.str();
}

// Rows transcribed term by term; conditions like 8|q-3 mean q ≡ 3 (mod 8).

std::vector<Term> pointed_row(long g) {
    switch (g) {
        case 2:
            return {
                term({0, 0, 0, 2}),
                term({-2, 2}, qmod(4, 1)),
                term({4}, qmod(8, 1)),
                term({8}, qmod(5, 1)),
                term({2}, char_is(5)),
            };
        case 3:
            return {
                term({0, 0, 0, 0, 0, 2}),
                term({2, -2, 2}, qmod(4, 1)),
                term({-4, 4}, qmod(3, 1)),
                term({12}, qmod(7, 1)),
                term({4}, qmod(12, 1)),
                term({2}, char_is(7)),
            };
        case 4:
            return {
                term({0, 0, 0, 0, 0, 0, 0, 2}),
                term({-2, 2, -2, 2}, qmod(4, 1)),
                term({4, -4, 4}, qmod(3, 1)),
                term({-4, 4}, qmod(8, 1)),
                term({12}, qmod(9, 1)),
                term({8}, qmod(16, 1)),
                term({0, -2, 2}, char_is(3)),
            };
        case 5:
            return {
                term({0, 0, 0, 0, 0, 0, 0, 0, 0, 2}),
                term({2, -2, 2, -2, 2}, qmod(4, 1)),
                term({-8, 8}, qmod(5, 1)),
                term({20}, qmod(11, 1)),
                term({8}, qmod(20, 1)),
                term({2}, char_is(11)),
            };
        case 6:
            return {
                term({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2}),
                term({-2, 2, -2, 2, -2, 2}, qmod(4, 1)),
                term({-4, 4, -4, 4}, qmod(3, 1)),
                term({4, -4, 4}, qmod(8, 1)),
                term({-4, 4}, qmod(12, 1)),
                term({24}, qmod(13, 1)),
                term({8}, qmod(24, 1)),
                term({2}, char_is(13)),
            };
        case 7:
            return {
                term({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2}),
                term({2, -2, 2, -2, 2, -2, 2}, qmod(4, 1)),
                term({4, -4, 4, -4, 4}, qmod(3, 1)),
                term({8, -8, 8}, qmod(5, 1)),
                term({-12, 12}, qmod(7, 1)),
                term({16}, qmod(15, 1)),
                term({12}, qmod(28, 1)),
                term({0, 0, 0, -2, 2}, char_is(3)),
                term({0, -2, 2}, char_is(5)),
            };
        default:
            throw argument_error("pointed fixtures cover genus 2..7");
    }
}

std::vector<Term> rational_row(long g) {
    switch (g) {
        case 2:
            return {
                term({frac(11, 16), frac(-1, 2), frac(37, 48), frac(91, 72)}),
                term({-1, 1}, qmod(4, 1)),
                term({frac(1, 8), frac(3, 8)}, qmod(4, -1)),
                term({2}, char_is(5)),
                term({8}, qmod(5, 1)),
                term({2}, qmod(8, 1)),
                term({frac(-2, 9)}, qmod(3, 1)),
                term({frac(5, 9)}, qmod(3, -1)),
                term({frac(1, 2)}, qmod(8, 3)),
            };
        case 3:
            return {
                term({frac(-3, 8), frac(893, 960), frac(-8, 9), frac(83, 144), frac(53, 144),
                      frac(3641, 2880)}),
                term({frac(-7, 16), frac(-4, 3), frac(67, 48)}, qmod(4, 1)),
                term({-2, 2}, qmod(3, 1)),
                term({frac(2, 9), frac(5, 9)}, qmod(3, -1)),
                term({12}, qmod(7, 1)),
                term({2}, char_is(7)),
                term({2}, qmod(12, 1)),
                term({frac(1, 2)}, qmod(8, 1)),
                term({frac(1, 3)}, qmod(12, 5)),
            };
        case 4:
            return {
                term({frac(-59, 1280), frac(-9, 1400), frac(187, 5760), frac(83, 1200),
                      frac(6143, 11520), frac(-2059, 9600), frac(2119, 5760), frac(28319, 22400)}),
                term({frac(117, 128), frac(-607, 384), frac(99, 128), frac(-233, 384)},
                     qmod(4, -1)),
                term({4, -4, 4}, qmod(3, 1)),
                term({0, -2, 2}, char_is(3)),
                term({-2, 2}, qmod(8, 1)),
                term({frac(3, 16), frac(7, 16)}, qmod(8, -1)),
                term({frac(8, 25), frac(18, 25)}, qmod(5, -1)),
                term({frac(-18, 25), frac(18, 25)}, qmod(5, 1)),
                term({frac(-1, 5), frac(9, 25)}, char_is(5)),
                term({12}, qmod(9, 1)),
                term({4}, qmod(16, 1)),
                term({frac(1, 2)}, qmod(16, 7)),
            };
        case 5:
            return {
                term({frac(-171, 256), frac(357221, 161280), frac(-252227, 201600),
                      frac(3133141, 3628800), frac(-43909, 43200), frac(44881, 64800),
                      frac(11923, 86400), frac(-778721, 3628800), frac(16481, 44800),
                      frac(27526069, 21772800)}),
                term({frac(597, 256), frac(-391, 240), frac(521, 640), frac(-199, 160),
                      frac(5351, 3840)},
                     qmod(4, 1)),
                term({frac(137, 972), frac(-167, 162), frac(155, 324)}, qmod(3, -1)),
                term({frac(-1361, 972), frac(241, 162), frac(-155, 324)}, qmod(3, 1)),
                term({-4, 4}, qmod(5, 1)),
                term({frac(8, 25), frac(18, 25)}, qmod(5, -1)),
                term({20}, qmod(11, 1)),
                term({2}, char_is(11)),
                term({4}, qmod(20, 1)),
                term({frac(1, 3)}, qmod(12, 1)),
                term({frac(2, 5)}, qmod(20, 9)),
            };
        default:
            throw argument_error("rational fixtures cover genus 2..5");
    }
}

std::vector<FixtureTerm> evaluate(const std::vector<Term>& row, long q) {
    long p = 0, e = 0;
    if (!factor_prime_power(q, p, e) || p == 2)
        throw argument_error("q must be an odd prime power");
    std::vector<FixtureTerm> out;
    for (const auto& t : row) {
        FixtureTerm ft;
        ft.active = t.cond.holds(q, p);
        ft.value = ft.active ? eval_poly(t.poly, q) : 0;
        std::string cond = t.cond.str();
        ft.label = "[" + poly_str(t.poly) + "]" + (cond.empty() ? "" : "_" + cond);
        out.push_back(std::move(ft));
    }
    return out;
}

ExactRat total_of(const std::vector<FixtureTerm>& terms) {
    ExactRat total = 0;
    for (const auto& t : terms)
        if (t.active) total += t.value;
    return total;
}

}  // namespace

std::vector<FixtureTerm> fixture_pointed_terms(long g, long q) {
    return evaluate(pointed_row(g), q);
}

std::vector<FixtureTerm> fixture_rational_terms(long g, long q) {
    return evaluate(rational_row(g), q);
}

ExactInt fixture_pointed(long g, long q) {
    ExactRat total = total_of(fixture_pointed_terms(g, q));
    if (!is_integer(total)) throw internal_error("pointed fixture evaluated to a fraction");
    return numerator(total);
}

ExactInt fixture_rational(long g, long q) {
    ExactRat total = total_of(fixture_rational_terms(g, q));
    if (!is_integer(total))
        throw internal_error("rational fixture evaluated to a fraction at q=" + std::to_string(q) +
                             ": check the transcription");
    return numerator(total);
}

}  // namespace hypcount
