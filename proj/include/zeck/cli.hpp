#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zeck/far_difference.hpp"

namespace zeck::cli {

enum class Command { Seq, Decomp, Legal, Count, Stats, Fardiff, Fdstats, Root, Verify };

enum class Format {
    Text,       // human-readable; for tabular commands the same as Csv
    Csv,
    Tsv,        // decomp only: N<TAB>m<TAB>a_1,...,a_m
    JsonLines,
};

struct RunConfig {
    Command command = Command::Root;
    std::string spec = "1,1";
    std::vector<std::string> args;  // positional arguments of the subcommand
    bool exhaustive = false;
    FarDifferenceInterval interval = FarDifferenceInterval::LeadingIndex;
    std::string output;  // empty = standard output
    Format format = Format::Text;
    double tol = 1e-14;
    unsigned threads = 0;
    std::optional<std::uint64_t> seed;  // reserved, unused
    std::vector<int> only;              // verify: subset of criteria
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitScale = 3;

/// Parses argv. On --help or a usage error returns the exit code instead,
/// after printing to out/err.
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one command. Data goes to config.output (or `out`), the
/// one-line diagnostics for failures to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace zeck::cli
