#include "hypcount/exact.hpp"

#include "hypcount/errors.hpp"

namespace hypcount {

ExactInt pow_int(const ExactInt& base, long exp) {
    if (exp < 0) throw argument_error("pow_int: negative exponent");
    ExactInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

ExactInt binomial(const ExactInt& n, long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    ExactInt num = 1, den = 1;
    for (long i = 1; i <= k; ++i) {
        num *= n - (k - i);
        den *= i;
    }
    return num / den;
}

ExactInt multiset_coeff(long r, long i) {
    if (r < 0 || i < 0) throw argument_error("multiset_coeff: negative argument");
    if (i == 0) return 1;
    if (r == 0) return 0;
    return binomial(ExactInt(r) + i - 1, i);
}

long euler_phi(long m) {
    if (m < 1) throw argument_error("euler_phi: argument must be positive");
    long result = m;
    long n = m;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> divisors(long m) {
    if (m < 1) throw argument_error("divisors: argument must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool factor_prime_power(long q, long& p, long& e) {
    if (q < 2) return false;
    long n = q;
    long base = 0;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            base = d;
            break;
        }
    }
    if (base == 0) {
        p = q;
        e = 1;
        return true;
    }
    long exp = 0;
    while (n % base == 0) {
        n /= base;
        ++exp;
    }
    if (n != 1) return false;
    p = base;
    e = exp;
    return true;
}

bool is_integer(const ExactRat& x) {
    return denominator(x) == 1;
}

std::string decimal_string(const ExactRat& x, int digits) {
    ExactInt num = numerator(x);
    ExactInt den = denominator(x);
    bool neg = num < 0;
    if (neg) num = -num;
    ExactInt scale = pow_int(10, digits);
    ExactInt scaled = num * scale / den;
    ExactInt whole = scaled / scale;
    ExactInt frac = scaled % scale;
    std::string out = neg && scaled != 0 ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

}  // namespace hypcount
