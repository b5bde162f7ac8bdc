#include "nuwigner/report.hpp"

namespace nuwigner {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::PassWithCaveat: return "PASS_WITH_CAVEAT";
    }
    return "?";
}

std::string to_string(VerificationMode m) {
    switch (m) {
        case VerificationMode::Exact: return "exact";
        case VerificationMode::Numeric: return "numeric";
        case VerificationMode::Mixed: return "mixed";
    }
    return "?";
}

ReportTally tally(const std::vector<AlgebraReport>& reports) {
    ReportTally t;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::Pass: ++t.pass; break;
            case Verdict::Fail: ++t.fail; break;
            case Verdict::PassWithCaveat: ++t.caveat; break;
        }
    }
    return t;
}

}  // namespace nuwigner
