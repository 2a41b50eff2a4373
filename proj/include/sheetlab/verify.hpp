#pragma once

/**
 * @file verify.hpp
 * @brief End-to-end property suite over all modules.
 *
 * Each case draws from its own Rng stream derived from (seed, case name), so
 * the report is identical for identical options regardless of the order or
 * concurrency in which cases run. Cases are reported sorted by name.
 */

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sheetlab {

struct VerifyOptions {
    std::size_t n_max = 3;
    std::uint64_t seed = 42;
    std::size_t samples = 25;
    /// Largest accepted n_max.
    std::size_t size_limit = 5;
    /// Largest n for symbolic generator checks (all sheets up to min(n_max, 3),
    /// the regular sheet up to this limit).
    std::size_t symbolic_limit = 4;
    /// Test hook: "tower" corrupts the invariant-factor tower checked by the
    /// tower-law case. Empty for normal runs.
    std::string inject_fault;
    bool parallel = true;
};

struct CaseResult {
    std::string name;
    std::vector<std::string> covers;
    bool passed = true;
    std::size_t checks = 0;
    std::string detail;
    nlohmann::json witness;  // null unless the case failed
};

struct VerificationReport {
    std::string suite = "sheetlab-verify";
    VerifyOptions options;
    std::vector<CaseResult> cases;
    double elapsed_seconds = 0.0;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] nlohmann::json to_json(bool include_elapsed = true) const;
};

struct CaseInfo {
    std::string name;
    std::vector<std::string> covers;
};

/// Identifiers of every module invariant the suite must exercise.
std::vector<std::string> invariant_manifest();

/// Names and coverage tags of all suite cases.
std::vector<CaseInfo> suite_cases();

/// Throws ResourceGuardError when n_max is 0 or above options.size_limit.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace sheetlab
