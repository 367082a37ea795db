#include "hypcount/isom.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hypcount/errors.hpp"

namespace hypcount {

KoblitzModel normalize_model(const FieldPtr& k, const std::vector<uint32_t>& coeffs) {
    const Field& F = *k;
    long deg = static_cast<long>(coeffs.size()) - 1;
    while (deg >= 0 && coeffs[deg] == 0) --deg;
    if (deg < 5) throw argument_error("degree must be at least 5 (genus at least 2)");
    for (uint32_t c : coeffs)
        if (c >= static_cast<uint32_t>(F.q())) throw argument_error("coefficient out of range");
    uint32_t lead = coeffs[deg];
    uint32_t inv_lead = F.inv(lead);
    std::vector<uint32_t> monic(deg);
    for (long i = 0; i < deg; ++i) monic[i] = F.mul(coeffs[i], inv_lead);

    KoblitzModel m;
    m.k = k;
    m.lam = F.is_square(lead) ? SquareClass::Trivial : SquareClass::NonTrivial;
    m.g = (deg - 1) / 2;  // deg = 2g+1 or 2g+2
    try {
        m.s = make_nset(F, std::move(monic), deg % 2 == 1);
    } catch (const argument_error&) {
        throw argument_error("polynomial is not separable: the model is singular");
    }
    return m;
}

namespace {

void require_comparable(const KoblitzModel& c1, const KoblitzModel& c2) {
    if (c1.k.get() != c2.k.get()) throw argument_error("models live over different fields");
    if (c1.g != c2.g) throw argument_error("models have different genus");
}

// mu with mu^2 = lam1 * J / lam2; nullopt when the square classes differ.
std::optional<uint32_t> mu_for(const KoblitzModel& c1, const KoblitzModel& c2, uint32_t J) {
    const Field& k = *c1.k;
    uint32_t ratio = k.div(k.mul(c1.lam_rep(), J), c2.lam_rep());
    if (!k.is_square(ratio)) return std::nullopt;
    return k.sqrt(ratio);
}

std::optional<IsoWitness> search(const KoblitzModel& c1, const KoblitzModel& c2, GroupKind kind) {
    const Field& k = *c1.k;
    for (const Mobius& g : enumerate_group(k, kind)) {
        if (!(act(g, c1.s) == c2.s)) continue;
        auto mu = mu_for(c1, c2, multiplier(g, c1.s));
        if (!mu) continue;
        return IsoWitness{g, *mu, kind == GroupKind::Affine};
    }
    return std::nullopt;
}

}  // namespace

bool check_witness(const KoblitzModel& c1, const KoblitzModel& c2, const IsoWitness& w) {
    if (c1.k.get() != c2.k.get() || w.gamma.k != c1.k.get()) return false;
    if (w.pointed && !w.gamma.is_affine()) return false;
    if (!(act(w.gamma, c1.s) == c2.s)) return false;
    const Field& k = *c1.k;
    uint32_t ratio = k.div(k.mul(c1.lam_rep(), multiplier(w.gamma, c1.s)), c2.lam_rep());
    return w.mu != 0 && k.mul(w.mu, w.mu) == ratio && w.mu == k.sqrt(ratio);
}

std::optional<IsoWitness> isomorphism_pointed(const KoblitzModel& c1, const KoblitzModel& c2) {
    require_comparable(c1, c2);
    if (!c1.pointed_capable() || !c2.pointed_capable())
        throw domain_error("pointed comparison requires odd-degree models (marked point at infinity)");
    return search(c1, c2, GroupKind::Affine);
}

std::optional<IsoWitness> isomorphism(const KoblitzModel& c1, const KoblitzModel& c2) {
    require_comparable(c1, c2);
    if (!contains_rational_point(c1.s) || !contains_rational_point(c2.s))
        throw domain_error(
            "model has no rational ramification point; such curves are outside the "
            "correspondence this tool decides");
    return search(c1, c2, GroupKind::Projective);
}

ExactInt reduced_automorphism_count(const KoblitzModel& c, GroupKind kind) {
    const Field& k = *c.k;
    if (kind == GroupKind::Affine && !c.pointed_capable())
        throw domain_error("affine stabilizer requires an odd-degree model");
    ExactInt count = 0;
    for (const Mobius& g : enumerate_group(k, kind)) {
        if (!(act(g, c.s) == c.s)) continue;
        if (k.is_square(multiplier(g, c.s))) ++count;
    }
    return count;
}

namespace {

std::vector<uint32_t> parse_symbolic(const Field& k, const std::string& text) {
    if (k.e() != 1)
        throw argument_error("symbolic polynomials are supported over prime fields only");
    std::vector<uint32_t> coeffs;
    auto bump = [&](long deg, long coef) {
        if (deg < 0 || deg > 64) throw argument_error("unsupported exponent in polynomial");
        if (static_cast<long>(coeffs.size()) <= deg) coeffs.resize(deg + 1, 0);
        long p = k.p();
        long v = ((coef % p) + p) % p;
        coeffs[deg] = k.add(coeffs[deg], static_cast<uint32_t>(v));
    };
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            throw argument_error("expected '+' or '-' in polynomial '" + text + "'");
        }
        long coef = 1;
        bool have_coef = false;
        if (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            coef = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                coef = coef * 10 + (text[i++] - '0');
            have_coef = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        long deg = 0;
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            ++i;
            deg = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
                    throw argument_error("missing exponent in polynomial '" + text + "'");
                deg = 0;
                while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                    deg = deg * 10 + (text[i++] - '0');
            }
        } else if (!have_coef) {
            throw argument_error("unexpected character in polynomial '" + text + "'");
        }
        bump(deg, sign * coef);
        any = true;
        skip_ws();
    }
    if (!any) throw argument_error("empty polynomial");
    return coeffs;
}

}  // namespace

std::vector<uint32_t> parse_polynomial(const Field& k, const std::string& text) {
    char sep = k.e() == 1 ? ',' : ';';
    if (text.find('x') != std::string::npos || text.find('X') != std::string::npos)
        return parse_symbolic(k, text);
    std::vector<uint32_t> coeffs;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) coeffs.push_back(k.parse_element(item));
    if (coeffs.empty()) throw argument_error("empty polynomial");
    return coeffs;
}

}  // namespace hypcount
