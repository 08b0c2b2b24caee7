#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace rfs {

/// Outcome of one exhaustive proposition check. A failed check is a report
/// with status fail and a counterexample, not an exception.
struct VerificationReport {
    std::string proposition;   // machine id, e.g. "generation-set-counts"
    std::string anchor;        // human-readable statement of what was checked
    std::string range;         // e.g. "n=2..5"
    bool pass = false;
    std::uint64_t checked = 0;  // number of individual facts tested
    std::optional<nlohmann::json> counterexample;
    std::optional<nlohmann::json> details;  // per-relation / per-n breakdown

    nlohmann::json to_json() const;
};

}  // namespace rfs
