#pragma once

#include <string>
#include <vector>

#include "hypcount/exact.hpp"
#include "hypcount/oracle.hpp"

namespace hypcount {

enum class Tier { Zeta, Quotient, Epsilon, Burnside, Naive, Tables };

std::string tier_name(Tier t);
std::vector<Tier> parse_tiers(const std::string& csv);  // "all" or comma list

struct TierResult {
    Tier tier;
    bool pass = false;
    long long checks = 0;
    std::string detail;  // first failure or summary
    double millis = 0.0;
};

struct VerifyOptions {
    uint64_t budget = kDefaultBudget;
    int workers = 1;
};

// Work estimate used for the feasibility guard, in budget units.
uint64_t tier_cost_estimate(Tier t, long g, long q);

// Runs the requested tiers for one (g, q). Throws budget_error up front if
// any requested tier is infeasible, naming the tiers that would fit.
std::vector<TierResult> run_tiers(long g, long q, const std::vector<Tier>& tiers,
                                  const VerifyOptions& opts);

}  // namespace hypcount
