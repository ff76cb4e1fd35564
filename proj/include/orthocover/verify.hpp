#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace orthocover {

enum class ClaimStatus { Pass, Fail, Inconclusive };

const char* to_string(ClaimStatus status);

struct ClaimResult {
    std::string id;
    std::string description;
    ClaimStatus status = ClaimStatus::Fail;
    std::string detail;
    std::string witness;  // directory holding this claim's witnesses, empty if none were written
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::vector<ClaimResult> claims;

    bool all_passed() const;
    bool any_failed() const;
    /// Claims in id order; `include_timing` false drops elapsed_ms for byte comparisons.
    nlohmann::json to_json(bool include_timing = true) const;
    std::string to_text() const;
};

struct VerifyOptions {
    std::uint64_t budget = 100'000'000;
    std::uint64_t seed = 20'200'101;
    /// Witness files go under this directory when set.
    std::optional<std::string> witness_dir;
    /// Restrict the run to these claim ids; empty runs everything.
    std::vector<std::string> only;
};

struct ClaimSpec {
    std::string id;
    std::string description;
};

/// Stable list of claim ids and one-line descriptions.
std::vector<ClaimSpec> claim_catalogue();

/// Runs a single claim by id. Throws InvalidInput for an unknown id.
ClaimResult run_claim(const std::string& id, const VerifyOptions& options);

/// Runs every selected claim in catalogue order.
VerificationReport verify_paper(const VerifyOptions& options);

}  // namespace orthocover
