#include "rfs/report.hpp"

namespace rfs {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j{
        {"proposition", proposition},
        {"paper_anchor", anchor},
        {"range", range},
        {"status", pass ? "pass" : "fail"},
        {"checked", checked},
    };
    if (counterexample) j["counterexample"] = *counterexample;
    if (details) j["details"] = *details;
    return j;
}

}  // namespace rfs
