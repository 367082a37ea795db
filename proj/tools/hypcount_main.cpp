// Command line front end; talks to the library through the C API only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypcount.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // not isomorphic / verification failed
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Output {
    std::string path;  // optional --out target

    void emit(const std::string& payload) const {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        if (!path.empty()) {
            std::ofstream f(path);
            f << payload;
            if (!payload.empty() && payload.back() != '\n') f << "\n";
        }
    }
};

int fail(hyp_status status) {
    std::cerr << "error: " << hyp_last_error() << "\n";
    switch (status) {
        case HYP_ERR_BUDGET:
            return kExitBudget;
        case HYP_ERR_INPUT:
            return kExitInput;
        default:
            return kExitInput;
    }
}

std::string take(char* s) {
    std::string out = s ? s : "";
    hyp_free(s);
    return out;
}

// "num/den" -> fixed 6 digit decimal (courtesy rendering; the exact value
// is the fraction)
std::string ratio_decimal(const std::string& frac) {
    auto slash = frac.find('/');
    long double num = strtold(frac.substr(0, slash).c_str(), nullptr);
    long double den = strtold(frac.substr(slash + 1).c_str(), nullptr);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6Lf", num / den);
    return buf;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

bool is_odd_prime_power(long q) {
    if (q < 3 || q % 2 == 0) return false;
    long base = 0;
    for (long d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            base = d;
            break;
        }
    if (base == 0) return true;
    while (q % base == 0) q /= base;
    return q == 1;
}

int cmd_count(int g, const std::string& q, const std::string& kind, const std::string& format,
              const Output& out) {
    hyp_field* field = nullptr;
    if (hyp_status s = hyp_field_create(q.c_str(), &field); s != HYP_OK) return fail(s);
    long long qv = hyp_field_order(field), pv = hyp_field_characteristic(field);
    hyp_field_destroy(field);

    std::string pointed, rational;
    if (kind == "pointed" || kind == "both") {
        char* s = nullptr;
        if (hyp_status st = hyp_count_pointed(g, q.c_str(), &s); st != HYP_OK) return fail(st);
        pointed = take(s);
    }
    if (kind == "rational" || kind == "both") {
        char* s = nullptr;
        if (hyp_status st = hyp_count_rational(g, q.c_str(), &s); st != HYP_OK) return fail(st);
        rational = take(s);
    }

    if (format == "json") {
        json doc;
        doc["g"] = g;
        doc["q"] = qv;
        doc["p"] = pv;
        if (!pointed.empty()) doc["pointed"] = pointed;
        if (!rational.empty()) doc["rational"] = rational;
        out.emit(doc.dump(2));
    } else {
        std::ostringstream os;
        os << "g=" << g << " q=" << qv << " p=" << pv << "\n";
        if (!pointed.empty()) os << "pointed  " << pointed << "\n";
        if (!rational.empty()) os << "rational " << rational << "\n";
        out.emit(os.str());
    }
    return kExitOk;
}

int cmd_verify(int g, const std::string& q, const std::string& tiers, unsigned long long budget,
               int workers, bool deterministic, const std::string& format, const Output& out) {
    char* report = nullptr;
    hyp_status st = hyp_verify(g, q.c_str(), tiers.c_str(), budget, workers,
                               deterministic ? 1 : 0, &report);
    if (st == HYP_ERR_BUDGET || st == HYP_ERR_INPUT) return fail(st);
    std::string payload = take(report);
    if (format == "json") {
        out.emit(payload);
    } else {
        json doc = json::parse(payload);
        std::ostringstream os;
        for (const auto& tier : doc["tiers"]) {
            os << (tier["pass"].get<bool>() ? "pass" : "FAIL") << "  "
               << tier["name"].get<std::string>() << "  checks=" << tier["checks"].get<long long>();
            if (tier.contains("millis")) os << "  millis=" << tier["millis"].get<double>();
            if (tier.contains("detail")) os << "  (" << tier["detail"].get<std::string>() << ")";
            os << "\n";
        }
        os << (doc["pass"].get<bool>() ? "all tiers passed" : "verification FAILED") << "\n";
        out.emit(os.str());
    }
    return st == HYP_OK ? kExitOk : kExitNegative;
}

int cmd_scan(int g, const std::string& q_list, const std::string& q_range,
             const std::string& kind, const std::string& format, const Output& out) {
    std::vector<long long> qs;
    for (const auto& item : split_csv(q_list)) {
        char* end = nullptr;
        long long v = strtoll(item.c_str(), &end, 10);
        if (end == item.c_str() || *end != '\0') {
            std::cerr << "error: invalid q '" << item << "'\n";
            return kExitInput;
        }
        qs.push_back(v);
    }
    if (!q_range.empty()) {
        auto colon = q_range.find(':');
        if (colon == std::string::npos) {
            std::cerr << "error: --q-range wants LO:HI\n";
            return kExitInput;
        }
        long lo = atol(q_range.substr(0, colon).c_str());
        long hi = atol(q_range.substr(colon + 1).c_str());
        for (long v = lo; v <= hi; ++v)
            if (is_odd_prime_power(v)) qs.push_back(v);
    }
    std::vector<std::string> kinds;
    if (kind == "both") kinds = {"pointed", "rational"};
    else kinds = {kind};

    json rows = json::array();
    for (long long qv : qs) {
        hyp_field* field = nullptr;
        if (hyp_status s = hyp_field_create(std::to_string(qv).c_str(), &field); s != HYP_OK)
            return fail(s);
        long long pv = hyp_field_characteristic(field);
        hyp_field_destroy(field);
        for (const auto& kd : kinds) {
            char* count_s = nullptr;
            char* ratio_s = nullptr;
            hyp_status st = kd == "rational"
                                ? hyp_count_rational(g, std::to_string(qv).c_str(), &count_s)
                                : hyp_count_pointed(g, std::to_string(qv).c_str(), &count_s);
            if (st != HYP_OK) return fail(st);
            st = hyp_count_ratio(g, std::to_string(qv).c_str(), kd == "rational" ? 1 : 0, &ratio_s);
            if (st != HYP_OK) return fail(st);
            json row;
            row["g"] = g;
            row["q"] = qv;
            row["p"] = pv;
            row["kind"] = kd;
            row["count"] = take(count_s);
            row["ratio"] = take(ratio_s);
            row["ratio_decimal"] = ratio_decimal(row["ratio"].get<std::string>());
            rows.push_back(std::move(row));
        }
    }

    if (format == "json") {
        json doc;
        doc["rows"] = std::move(rows);
        out.emit(doc.dump(2));
    } else {
        std::ostringstream os;
        os << "g,q,p,kind,count,ratio,ratio_decimal\n";
        for (const auto& row : rows)
            os << row["g"].get<int>() << "," << row["q"].get<long long>() << ","
               << row["p"].get<long long>() << "," << row["kind"].get<std::string>() << ","
               << row["count"].get<std::string>() << "," << row["ratio"].get<std::string>() << ","
               << row["ratio_decimal"].get<std::string>() << "\n";
        out.emit(os.str());
    }
    return kExitOk;
}

int cmd_isom(const std::string& q, const std::string& f1, const std::string& f2, bool pointed,
             const std::string& format, const Output& out) {
    hyp_field* field = nullptr;
    if (hyp_status s = hyp_field_create(q.c_str(), &field); s != HYP_OK) return fail(s);
    char* report = nullptr;
    hyp_status st = hyp_isomorphic(field, f1.c_str(), f2.c_str(), pointed ? 1 : 0, &report);
    hyp_field_destroy(field);
    if (st != HYP_OK && st != HYP_NOT_ISOMORPHIC) return fail(st);
    std::string payload = take(report);
    if (format == "json") {
        out.emit(payload);
    } else {
        json doc = json::parse(payload);
        std::ostringstream os;
        if (doc["isomorphic"].get<bool>()) {
            os << "isomorphic: yes\n";
            os << "gamma: " << doc["witness"]["matrix"].dump()
               << "   " << doc["witness"]["map"].get<std::string>() << "\n";
            os << "mu: " << doc["witness"]["mu"].get<std::string>() << "\n";
            os << "witness verified: " << (doc["verified"].get<bool>() ? "yes" : "NO") << "\n";
        } else {
            os << "not isomorphic\n";
        }
        out.emit(os.str());
    }
    return st == HYP_OK ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting and isomorphism testing for hyperelliptic curves over odd finite fields"};
    app.require_subcommand(1);

    std::string q, kind = "both", format = "text", out_path;
    int g = 2;

    auto* count = app.add_subcommand("count", "Isomorphism class counts for one (g, q)");
    count->add_option("-g,--genus", g, "genus, at least 2")->required();
    count->add_option("-q,--field", q, "field size, q or p^e")->required();
    count->add_option("--kind", kind, "pointed | rational | both")
        ->check(CLI::IsMember({"pointed", "rational", "both"}));
    count->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    count->add_option("--out", out_path, "also write the output to a file");

    std::string tiers = "all";
    unsigned long long budget = 0;
    int workers = 1;
    bool deterministic = false;
    auto* verify = app.add_subcommand("verify", "Cross-check formulas against brute-force oracles");
    verify->add_option("-g,--genus", g)->required();
    verify->add_option("-q,--field", q)->required();
    verify->add_option("--tiers", tiers, "all or a comma list of zeta,quotient,epsilon,burnside,naive,tables");
    verify->add_option("--budget", budget, "work budget for brute-force tiers (default 5e8)");
    verify->add_option("--workers", workers, "worker threads for oracle tiers");
    verify->add_flag("--deterministic", deterministic, "omit timing fields");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path);

    std::string q_list, q_range;
    auto* scan = app.add_subcommand("scan", "Counts and leading-term ratios over a list of q");
    scan->add_option("-g,--genus", g)->required();
    scan->add_option("--q-list", q_list, "comma separated field sizes");
    scan->add_option("--q-range", q_range, "LO:HI, scans odd prime powers in the range");
    scan->add_option("--kind", kind)->check(CLI::IsMember({"pointed", "rational", "both"}));
    scan->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    scan->add_option("--out", out_path);

    std::string f1, f2;
    bool pointed = false;
    auto* isom = app.add_subcommand("isom", "Decide k-isomorphism of two models y^2 = f(x)");
    isom->add_option("-q,--field", q)->required();
    isom->add_option("--f1", f1, "first polynomial")->required();
    isom->add_option("--f2", f2, "second polynomial")->required();
    isom->add_flag("--pointed", pointed, "compare as pointed curves");
    isom->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    isom->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    Output out{out_path};
    if (count->parsed()) return cmd_count(g, q, kind, format, out);
    if (verify->parsed())
        return cmd_verify(g, q, tiers, budget, workers, deterministic, format, out);
    if (scan->parsed())
        return cmd_scan(g, q_list, q_range, kind, format == "text" ? "csv" : format, out);
    if (isom->parsed()) return cmd_isom(q, f1, f2, pointed, format, out);
    return kExitInput;
}
