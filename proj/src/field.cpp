#include "hypcount/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hypcount/errors.hpp"

namespace hypcount {

namespace {

constexpr long kMaxFieldOrder = 1 << 20;
constexpr long kTableLimit = 1024;

// --- F_p[x] helpers used during construction (no Field instance yet) ---

using Poly = std::vector<uint32_t>;  // low degree first, no trailing zeros

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + 1ull * a[i] * b[j]) % p);
    trim(r);
    return r;
}

Poly pmod(Poly a, const Poly& m, long p) {
    trim(a);
    long dm = static_cast<long>(m.size()) - 1;
    uint32_t lead_inv = 1;
    // modulus is monic here
    while (static_cast<long>(a.size()) - 1 >= dm) {
        long shift = static_cast<long>(a.size()) - 1 - dm;
        uint32_t c = static_cast<uint32_t>((1ull * a.back() * lead_inv) % p);
        for (long i = 0; i <= dm; ++i) {
            uint64_t sub = (1ull * c * m[i]) % p;
            a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly pgcd(Poly a, Poly b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic for pmod
        uint32_t lead = b.back();
        if (lead != 1) {
            // inverse mod p by Fermat
            uint64_t inv = 1, base = lead, ex = p - 2;
            while (ex) {
                if (ex & 1) inv = inv * base % p;
                base = base * base % p;
                ex >>= 1;
            }
            for (auto& c : b) c = static_cast<uint32_t>(c * inv % p);
        }
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly xpow_mod(ExactInt n, const Poly& m, long p) {
    Poly result{1};
    Poly base{0, 1};
    while (n > 0) {
        if ((n & 1) != 0) result = pmod(pmul(result, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        n >>= 1;
    }
    return result;
}

bool poly_irreducible(const Poly& f, long p) {
    long e = static_cast<long>(f.size()) - 1;
    Poly x{0, 1};
    if (xpow_mod(pow_int(p, e), f, p) != x) return false;
    // gcd(x^(p^(e/r)) - x, f) must be constant for every prime r | e
    for (long r = 2; r <= e; ++r) {
        if (e % r != 0 || !is_prime(r)) continue;
        Poly diff = xpow_mod(pow_int(p, e / r), f, p);
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
        trim(diff);
        Poly gc = pgcd(f, diff, p);
        if (gc.size() > 1) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree e over F_p,
// coefficients (c_0, ..., c_{e-1}) compared low degree first.
Poly smallest_irreducible(long p, long e) {
    if (e == 1) return Poly{0, 1};  // x
    std::vector<uint32_t> c(e, 0);
    for (;;) {
        Poly f(c.begin(), c.end());
        f.push_back(1);
        if (poly_irreducible(f, p)) return f;
        // increment (c_0,...,c_{e-1}) with c_{e-1} as the fastest digit
        long i = e - 1;
        while (i >= 0) {
            if (++c[i] < static_cast<uint32_t>(p)) break;
            c[i] = 0;
            --i;
        }
        if (i < 0) throw internal_error("no irreducible polynomial found");
    }
}

}  // namespace

Field::Field(long p, long e, std::vector<uint32_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (long i = 0; i < e_; ++i) q_ *= p_;
}

FieldPtr Field::make(long p, long e) {
    if (p < 2 || !is_prime(p) || p % 2 == 0)
        throw argument_error("field characteristic must be an odd prime, got " + std::to_string(p));
    if (e < 1) throw argument_error("extension degree must be at least 1");
    double size = 1;
    for (long i = 0; i < e; ++i) size *= static_cast<double>(p);
    if (size > static_cast<double>(kMaxFieldOrder))
        throw argument_error("field order exceeds the supported limit");

    // construction is deterministic, so instances are shared per (p, e)
    static std::mutex registry_mutex;
    static std::map<std::pair<long, long>, FieldPtr> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& slot = registry[{p, e}];
    if (!slot) slot = FieldPtr(new Field(p, e, smallest_irreducible(p, e)));
    return slot;
}

FieldPtr Field::parse(const std::string& spec) {
    auto caret = spec.find('^');
    auto to_long = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw argument_error("invalid field specification '" + spec + "'");
        return std::stol(s);
    };
    if (caret != std::string::npos) {
        long p = to_long(spec.substr(0, caret));
        long e = to_long(spec.substr(caret + 1));
        return make(p, e);
    }
    long q = to_long(spec);
    long p = 0, e = 0;
    if (!factor_prime_power(q, p, e))
        throw argument_error("field order " + spec + " is not a prime power");
    return make(p, e);
}

std::vector<uint32_t> Field::coeffs(uint32_t a) const {
    std::vector<uint32_t> c(e_);
    for (long i = 0; i < e_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

uint32_t Field::from_coeffs(const std::vector<uint32_t>& c) const {
    uint32_t a = 0;
    for (long i = std::min<long>(e_, c.size()) - 1; i >= 0; --i)
        a = static_cast<uint32_t>(a * p_ + c[i] % p_);
    return a;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (e_ == 1) return static_cast<uint32_t>((a + 1ull * b) % q_);
    uint32_t r = 0, m = 1;
    for (long i = 0; i < e_; ++i) {
        r += m * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        m *= p_;
    }
    return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::neg(uint32_t a) const {
    if (e_ == 1) return a == 0 ? 0 : static_cast<uint32_t>(q_ - a);
    uint32_t r = 0, m = 1;
    for (long i = 0; i < e_; ++i) {
        uint32_t c = a % p_;
        r += m * (c == 0 ? 0 : p_ - c);
        a /= p_;
        m *= p_;
    }
    return r;
}

std::vector<uint32_t> Field::poly_mul_mod(const std::vector<uint32_t>& a,
                                          const std::vector<uint32_t>& b) const {
    Poly r = pmod(pmul(a, b, p_), modulus_, p_);
    r.resize(e_, 0);
    return r;
}

uint32_t Field::mul_raw(uint32_t a, uint32_t b) const {
    if (e_ == 1) return static_cast<uint32_t>(1ull * a * b % q_);
    Poly pa = coeffs(a), pb = coeffs(b);
    trim(pa);
    trim(pb);
    return from_coeffs(poly_mul_mod(pa, pb));
}

void Field::ensure_tables() const {
    std::call_once(tables_once_, [this] {
        if (q_ > kTableLimit) return;
        if (e_ > 1) {
            mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
            for (long a = 0; a < q_; ++a)
                for (long b = a; b < q_; ++b) {
                    uint32_t m = mul_raw(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
                    mul_table_[a * q_ + b] = m;
                    mul_table_[b * q_ + a] = m;
                }
            inv_table_.assign(q_, 0);
            for (long a = 1; a < q_; ++a) {
                if (inv_table_[a] != 0) continue;
                for (long b = 1; b < q_; ++b) {
                    if (mul_table_[a * q_ + b] == 1) {
                        inv_table_[a] = static_cast<uint32_t>(b);
                        inv_table_[b] = static_cast<uint32_t>(a);
                        break;
                    }
                }
            }
        }
        square_table_.assign(q_, 0);
        sqrt_table_.assign(q_, 0);
        for (long y = q_ - 1; y >= 1; --y) {
            uint32_t s = mul_raw(static_cast<uint32_t>(y), static_cast<uint32_t>(y));
            square_table_[s] = 1;
            sqrt_table_[s] = static_cast<uint32_t>(y);  // descending loop leaves the smallest root
        }
        has_tables_ = true;
    });
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (e_ == 1) return static_cast<uint32_t>(1ull * a * b % q_);
    ensure_tables();
    if (has_tables_) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_raw(a, b);
}

uint32_t Field::pow(uint32_t a, ExactInt n) const {
    if (n < 0) return pow(inv(a), -n);
    uint32_t r = one(), b = a;
    while (n > 0) {
        if ((n & 1) != 0) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw domain_error("division by zero in F_" + std::to_string(q_));
    if (e_ == 1) {
        uint64_t r = 1, b = a;
        long ex = q_ - 2;
        while (ex) {
            if (ex & 1) r = r * b % q_;
            b = b * b % q_;
            ex >>= 1;
        }
        return static_cast<uint32_t>(r);
    }
    ensure_tables();
    if (has_tables_) return inv_table_[a];
    return pow(a, ExactInt(q_) - 2);
}

uint32_t Field::frobenius(uint32_t a) const { return pow(a, p_); }

bool Field::is_square(uint32_t a) const {
    if (a == 0) throw argument_error("square classes are defined on nonzero elements only");
    ensure_tables();
    if (has_tables_) return square_table_[a] != 0;
    return pow(a, (ExactInt(q_) - 1) / 2) == one();
}

uint32_t Field::nonsquare() const {
    for (long a = 1; a < q_; ++a)
        if (!is_square(static_cast<uint32_t>(a))) return static_cast<uint32_t>(a);
    throw internal_error("no nonsquare found");
}

uint32_t Field::sqrt(uint32_t a) const {
    if (a == 0) throw argument_error("sqrt of zero is excluded from the square-class contract");
    if (!is_square(a)) throw domain_error("element has no square root in F_" + std::to_string(q_));
    if (has_tables_) return sqrt_table_[a];
    // Tonelli-Shanks over F_q, deterministic via the canonical nonsquare.
    ExactInt s = ExactInt(q_) - 1;
    long t = 0;
    while ((s & 1) == 0) {
        s >>= 1;
        ++t;
    }
    uint32_t z = pow(nonsquare(), s);
    uint32_t r = pow(a, (s + 1) / 2);
    uint32_t w = pow(a, s);
    long m = t;
    while (w != one()) {
        long i = 0;
        uint32_t ww = w;
        while (ww != one()) {
            ww = mul(ww, ww);
            ++i;
        }
        uint32_t b = z;
        for (long j = 0; j < m - i - 1; ++j) b = mul(b, b);
        r = mul(r, b);
        z = mul(b, b);
        w = mul(w, z);
        m = i;
    }
    uint32_t other = neg(r);
    return std::min(r, other);
}

std::string Field::format(uint32_t a) const {
    if (e_ == 1) return std::to_string(a);
    std::ostringstream os;
    auto c = coeffs(a);
    for (long i = 0; i < e_; ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

uint32_t Field::parse_element(const std::string& text) const {
    std::vector<uint32_t> c;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        size_t pos = item.find_first_not_of(" \t");
        size_t end = item.find_last_not_of(" \t");
        if (pos == std::string::npos) throw argument_error("empty coefficient in '" + text + "'");
        item = item.substr(pos, end - pos + 1);
        bool neg_flag = !item.empty() && item[0] == '-';
        if (neg_flag) item = item.substr(1);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw argument_error("invalid element '" + text + "'");
        long v = std::stol(item) % p_;
        if (neg_flag && v != 0) v = p_ - v;
        c.push_back(static_cast<uint32_t>(v));
    }
    if (c.empty() || static_cast<long>(c.size()) > e_)
        throw argument_error("element '" + text + "' does not fit F_" + std::to_string(q_));
    c.resize(e_, 0);
    return from_coeffs(c);
}

FieldPtr Field::quadratic_extension() const {
    std::lock_guard<std::mutex> lock(ext_mutex_);
    if (!ext_) ext_ = make(p_, 2 * e_);
    return ext_;
}

uint32_t Field::embed(const Field& ext, uint32_t a) const {
    if (ext.p_ != p_ || ext.e_ != 2 * e_)
        throw argument_error("embed supports only the quadratic extension");
    if (e_ == 1) return a;  // prime subfield is coefficientwise
    std::lock_guard<std::mutex> lock(ext_mutex_);
    if (embed_table_.empty()) {
        // image of the generator: smallest root of our modulus in ext
        uint32_t root = 0;
        bool found = false;
        for (long x = 0; x < ext.q_ && !found; ++x) {
            uint32_t acc = 0, xp = ext.one();
            for (size_t i = 0; i < modulus_.size(); ++i) {
                acc = ext.add(acc, ext.mul(modulus_[i] % p_, xp));
                xp = ext.mul(xp, static_cast<uint32_t>(x));
            }
            if (acc == 0) {
                root = static_cast<uint32_t>(x);
                found = true;
            }
        }
        if (!found) throw internal_error("modulus has no root in the quadratic extension");
        embed_table_.assign(q_, 0);
        for (long v = 0; v < q_; ++v) {
            auto c = coeffs(static_cast<uint32_t>(v));
            uint32_t acc = 0, rp = ext.one();
            for (long i = 0; i < e_; ++i) {
                acc = ext.add(acc, ext.mul(c[i], rp));
                rp = ext.mul(rp, root);
            }
            embed_table_[v] = acc;
        }
    }
    return embed_table_[a];
}

std::string format_point(const Field& k, const ProjPoint& t) {
    return t.inf ? "inf" : k.format(t.v);
}

}  // namespace hypcount
