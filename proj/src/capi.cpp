#include "hypcount.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "hypcount/counts.hpp"
#include "hypcount/errors.hpp"
#include "hypcount/field.hpp"
#include "hypcount/fixtures.hpp"
#include "hypcount/isom.hpp"
#include "hypcount/verify.hpp"

using nlohmann::json;

struct hyp_field {
    hypcount::FieldPtr field;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
hyp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const hypcount::budget_error& err) {
        g_last_error = err.what();
        return HYP_ERR_BUDGET;
    } catch (const hypcount::argument_error& err) {
        g_last_error = err.what();
        return HYP_ERR_INPUT;
    } catch (const hypcount::domain_error& err) {
        g_last_error = err.what();
        return HYP_ERR_INPUT;
    } catch (const std::exception& err) {
        g_last_error = err.what();
        return HYP_ERR_INTERNAL;
    }
}

hyp_status count_impl(int g, const char* q_spec, bool rational, char** out) {
    return guarded([&] {
        auto k = hypcount::Field::parse(q_spec);
        hypcount::ExactInt value = rational ? hypcount::hyp_rational(g, k->q())
                                            : hypcount::hyp_pointed(g, k->q());
        *out = dup_string(value.str());
        return HYP_OK;
    });
}

std::string mobius_map_string(const hypcount::Mobius& m) {
    const hypcount::Field& k = *m.k;
    std::string num = k.format(m.a) + "*t+" + k.format(m.b);
    std::string den = k.format(m.c) + "*t+" + k.format(m.d);
    return "t -> (" + num + ")/(" + den + ")";
}

}  // namespace

extern "C" {

hyp_status hyp_field_create(const char* spec, hyp_field** out) {
    return guarded([&] {
        if (!spec || !out) {
            g_last_error = "null argument";
            return HYP_ERR_INPUT;
        }
        *out = new hyp_field{hypcount::Field::parse(spec)};
        return HYP_OK;
    });
}

void hyp_field_destroy(hyp_field* field) { delete field; }

long long hyp_field_order(const hyp_field* field) { return field->field->q(); }
long long hyp_field_characteristic(const hyp_field* field) { return field->field->p(); }
int hyp_field_degree(const hyp_field* field) { return static_cast<int>(field->field->e()); }

hyp_status hyp_count_pointed(int g, const char* q_spec, char** out) {
    return count_impl(g, q_spec, false, out);
}

hyp_status hyp_count_rational(int g, const char* q_spec, char** out) {
    return count_impl(g, q_spec, true, out);
}

hyp_status hyp_fixture_pointed(int g, const char* q_spec, char** out) {
    return guarded([&] {
        auto k = hypcount::Field::parse(q_spec);
        *out = dup_string(hypcount::fixture_pointed(g, k->q()).str());
        return HYP_OK;
    });
}

hyp_status hyp_fixture_rational(int g, const char* q_spec, char** out) {
    return guarded([&] {
        auto k = hypcount::Field::parse(q_spec);
        *out = dup_string(hypcount::fixture_rational(g, k->q()).str());
        return HYP_OK;
    });
}

hyp_status hyp_count_ratio(int g, const char* q_spec, int rational, char** out) {
    return guarded([&] {
        auto k = hypcount::Field::parse(q_spec);
        hypcount::ExactInt value = rational ? hypcount::hyp_rational(g, k->q())
                                            : hypcount::hyp_pointed(g, k->q());
        hypcount::ExactRat ratio =
            hypcount::ExactRat(value) / (2 * hypcount::ExactRat(hypcount::pow_int(k->q(), 2 * g - 1)));
        *out = dup_string(numerator(ratio).str() + "/" + denominator(ratio).str());
        return HYP_OK;
    });
}

hyp_status hyp_verify(int g, const char* q_spec, const char* tiers,
                      unsigned long long budget, int workers, int deterministic,
                      char** out_json) {
    return guarded([&] {
        auto k = hypcount::Field::parse(q_spec);
        hypcount::VerifyOptions opts;
        if (budget > 0) opts.budget = budget;
        opts.workers = workers > 0 ? workers : 1;
        auto tier_list = hypcount::parse_tiers(tiers ? tiers : "all");
        auto results = hypcount::run_tiers(g, k->q(), tier_list, opts);

        json doc;
        doc["g"] = g;
        doc["q"] = k->q();
        doc["p"] = k->p();
        doc["budget"] = opts.budget;
        doc["workers"] = opts.workers;
        bool all_pass = true;
        json tier_rows = json::array();
        for (const auto& r : results) {
            json row;
            row["name"] = hypcount::tier_name(r.tier);
            row["pass"] = r.pass;
            row["checks"] = r.checks;
            if (!r.detail.empty()) row["detail"] = r.detail;
            if (!deterministic) row["millis"] = r.millis;
            tier_rows.push_back(std::move(row));
            all_pass = all_pass && r.pass;
        }
        doc["tiers"] = std::move(tier_rows);
        doc["pass"] = all_pass;
        *out_json = dup_string(doc.dump(2));
        return all_pass ? HYP_OK : HYP_ERR_INTERNAL;
    });
}

hyp_status hyp_isomorphic(const hyp_field* field, const char* f1, const char* f2,
                          int pointed, char** out_json) {
    return guarded([&] {
        const auto& k = field->field;
        auto m1 = hypcount::normalize_model(k, hypcount::parse_polynomial(*k, f1));
        auto m2 = hypcount::normalize_model(k, hypcount::parse_polynomial(*k, f2));
        auto witness = pointed ? hypcount::isomorphism_pointed(m1, m2)
                               : hypcount::isomorphism(m1, m2);
        json doc;
        doc["q"] = k->q();
        doc["genus"] = m1.g;
        doc["pointed"] = pointed != 0;
        doc["isomorphic"] = witness.has_value();
        if (witness) {
            json w;
            w["matrix"] = json::array(
                {json::array({k->format(witness->gamma.a), k->format(witness->gamma.b)}),
                 json::array({k->format(witness->gamma.c), k->format(witness->gamma.d)})});
            w["map"] = mobius_map_string(witness->gamma);
            w["mu"] = k->format(witness->mu);
            doc["witness"] = std::move(w);
            doc["verified"] = hypcount::check_witness(m1, m2, *witness);
        }
        *out_json = dup_string(doc.dump(2));
        return witness ? HYP_OK : HYP_NOT_ISOMORPHIC;
    });
}

void hyp_free(char* s) { std::free(s); }

const char* hyp_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
