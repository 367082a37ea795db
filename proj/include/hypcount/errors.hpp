#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypcount {

// Malformed or out-of-contract input (maps to CLI exit code 2).
class argument_error : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

// Mathematically undefined operation: zero inversion, square root of a
// non-residue, model outside the supported space, and the like.
class domain_error : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

// A brute-force tier refused to run (or aborted) because its work estimate
// exceeds the configured budget (CLI exit code 3).
class budget_error : public std::runtime_error {
 public:
    budget_error(const std::string& msg, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(msg), required_work(required), allowed_budget(budget) {}

    std::uint64_t required_work;
    std::uint64_t allowed_budget;
};

// An exact identity that must hold by construction failed; never expected.
class internal_error : public std::logic_error {
 public:
    using std::logic_error::logic_error;
};

}  // namespace hypcount
