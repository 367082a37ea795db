#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hypcount/exact.hpp"

namespace hypcount {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// The finite field F_q, q = p^e with p an odd prime. Elements are referred to
// by a canonical index in 0..q-1: the element with coefficient vector
// (c_0, ..., c_{e-1}) over F_p (low degree first) has index sum c_i p^i.
// Prime fields use the residue itself. Construction is deterministic: the
// modulus is the lexicographically smallest monic irreducible polynomial of
// degree e over F_p, coefficients compared low degree first.
//
// All state is immutable after construction apart from lazily built lookup
// tables guarded by a mutex; behavior does not depend on them.
class Field : public std::enable_shared_from_this<Field> {
 public:
    static FieldPtr make(long p, long e);

    // Accepts "q" (decimal prime power) or "p^e".
    static FieldPtr parse(const std::string& spec);

    long p() const { return p_; }
    long e() const { return e_; }
    long q() const { return q_; }

    // Monic modulus, length e+1, low degree first (x itself when e = 1).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    // --- element arithmetic on canonical indices ---
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, ExactInt n) const;
    uint32_t one() const { return 1 % static_cast<uint32_t>(q_); }

    // image of an integer under Z -> F_q (a prime-subfield constant)
    uint32_t from_int(long n) const {
        long v = n % p_;
        return static_cast<uint32_t>(v < 0 ? v + p_ : v);
    }

    // Arithmetic Frobenius x -> x^p; iterating it e times is the identity.
    uint32_t frobenius(uint32_t a) const;

    bool is_square(uint32_t a) const;      // a != 0
    uint32_t sqrt(uint32_t a) const;       // smallest of the two roots in index order
    uint32_t nonsquare() const;            // first non-square in index order

    std::vector<uint32_t> coeffs(uint32_t a) const;
    uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

    // Text format: decimal residue for prime fields, comma separated
    // coefficient list low degree first for extensions ("2,1" = 2+t).
    std::string format(uint32_t a) const;
    uint32_t parse_element(const std::string& text) const;

    // The quadratic extension F_{q^2} = make(p, 2e), plus the canonical
    // embedding of this field into it (image of the index).
    FieldPtr quadratic_extension() const;
    uint32_t embed(const Field& ext, uint32_t a) const;

    bool same(const Field& other) const { return this == &other; }

 private:
    Field(long p, long e, std::vector<uint32_t> modulus);

    std::vector<uint32_t> poly_mul_mod(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) const;
    uint32_t mul_raw(uint32_t a, uint32_t b) const;
    void ensure_tables() const;

    long p_, e_, q_;
    std::vector<uint32_t> modulus_;

    // lazy lookup tables (small fields only)
    mutable std::once_flag tables_once_;
    mutable bool has_tables_ = false;
    mutable std::vector<uint32_t> mul_table_;
    mutable std::vector<uint32_t> inv_table_;
    mutable std::vector<uint8_t> square_table_;
    mutable std::vector<uint32_t> sqrt_table_;

    mutable std::mutex ext_mutex_;
    mutable FieldPtr ext_;                       // cached quadratic extension
    mutable std::vector<uint32_t> embed_table_;  // index map into ext_
};

// A point of the projective line over a given field: a finite value or the
// point at infinity. Infinity sorts after every finite point.
struct ProjPoint {
    uint32_t v = 0;
    bool inf = false;

    static ProjPoint infinity() { return ProjPoint{0, true}; }
    static ProjPoint finite(uint32_t t) { return ProjPoint{t, false}; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.inf != b.inf) return !a.inf;
        return !a.inf && a.v < b.v;
    }
};

std::string format_point(const Field& k, const ProjPoint& t);

}  // namespace hypcount
