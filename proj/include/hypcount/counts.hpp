#pragma once

#include <functional>

#include "hypcount/exact.hpp"

namespace hypcount {

// The four varieties whose rational n-set counts drive everything: the
// projective line, the affine line, the multiplicative group, and the
// projective line minus one conjugate pair of quadratic points.
enum class Variety { ProjLine, AffLine, MultGroup, ProjLineMinusQuadPair };

// Parameters of a counting problem: genus g >= 2 over F_q, q = p^e odd.
struct CountParams {
    long g;
    long q;
    long p;
    long e;
    long n;  // 2g+2

    CountParams(long g, long q);
};

// Number of rational n-sets of V over F_q. Conventions: a(0) = 1, a(n) = 0
// for n < 0.
ExactInt a_variety(Variety v, long n, long q);

// Normalized counts. Non-integral or non-positive arguments yield 0; the
// normalizers are q, q-1 and q+1 respectively.
ExactRat A1(const ExactRat& n, long q);
ExactRat A2(const ExactRat& n, long q);
ExactRat A0(const ExactRat& n, long q);

// Number of rational n-sets avoiding / meeting a fixed set of r rational
// points, given the total-count sequence of the variety.
using CountSeq = std::function<ExactInt(long)>;
ExactInt a_avoiding(const CountSeq& a_seq, long r, long n);
ExactInt b_meeting(const CountSeq& a_seq, long r, long n);
CountSeq a_seq_of(Variety v, long q);

// Normalized meeting counts, printed closed forms. B(n) requires n > 3;
// B0 requires m | q+1, B2 requires m | q-1. Non-integral n gives 0.
ExactRat B(const ExactRat& n, long q);
ExactRat B0(long m, const ExactRat& n, long q);
ExactRat B1(const ExactRat& n, long q, long p);
ExactRat B2(long m, const ExactRat& n, long q);

// Isomorphism class counts: pointed curves of genus g, and curves with at
// least one rational Weierstrass point. Both are exact nonnegative integers;
// a non-integral intermediate raises internal_error.
ExactInt hyp_pointed(long g, long q);
ExactInt hyp_rational(long g, long q);

}  // namespace hypcount
