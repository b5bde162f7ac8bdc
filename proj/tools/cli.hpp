#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nuwigner::cli {

enum class Command { Numbers, SingleMode, TwoMode, Realizations, SpinRep, HpRep, So3Rep, Verify, Errata };
enum class OutputFormat { Json, Csv };

struct RunConfig {
    Command command = Command::Verify;
    std::optional<long> two_j;
    std::vector<double> nu_values;
    std::optional<std::pair<std::size_t, std::size_t>> dims;
    std::optional<long> max_n;
    std::optional<std::size_t> dim;
    std::optional<long> max_two_j;
    std::optional<std::size_t> max_dim;
    std::optional<long> max_number;
    std::vector<std::string> only;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> output_path;
    bool strict = false;
};

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Parses argv (without the program name). On failure or --help, returns
/// nullopt and stores the exit code.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Validates the config, executes the command and writes its output to
/// output_path, to $NUWIGNER_OUTPUT_DIR/<command>.<ext>, or to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nuwigner::cli
