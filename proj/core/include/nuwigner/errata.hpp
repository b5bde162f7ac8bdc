#pragma once

#include <string>
#include <vector>

#include "nuwigner/report.hpp"

namespace nuwigner {

/// A printed formula that disagrees with direct computation.
struct ErratumFinding {
    std::string id;
    std::string summary;
    std::string printed;
    std::string computed;
    /// Checks of the printed form (expected to fail) followed by checks of the
    /// computed form (expected to pass).
    std::vector<AlgebraReport> printed_checks;
    std::vector<AlgebraReport> computed_checks;

    /// Printed form refuted somewhere and computed form holds everywhere.
    bool confirmed() const;
};

/// All known discrepancies, odd-2j condensed coefficient first.
std::vector<ErratumFinding> errata_findings();

}  // namespace nuwigner
