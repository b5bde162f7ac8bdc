#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nuwigner {

enum class VerificationMode { Exact, Numeric, Mixed };
enum class Verdict { Pass, Fail, PassWithCaveat };

/// First entry at which a relation was found not to hold.
struct Witness {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string expected;
    std::string actual;
};

/// Outcome of one relation check.
///
/// A Fail verdict always carries a witness. PassWithCaveat means a relation as
/// printed did not hold but its corrected form did; the witness then points at
/// the printed form's first failure and the caveat names the correction.
struct AlgebraReport {
    std::string relation_id;
    VerificationMode mode = VerificationMode::Exact;
    double max_residual = 0.0;
    Verdict verdict = Verdict::Pass;
    std::optional<std::string> caveat;
    std::optional<std::string> note;
    std::optional<Witness> witness;

    bool passed() const { return verdict != Verdict::Fail; }
};

std::string to_string(Verdict v);
std::string to_string(VerificationMode m);

struct ReportTally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t caveat = 0;
};

ReportTally tally(const std::vector<AlgebraReport>& reports);

}  // namespace nuwigner
