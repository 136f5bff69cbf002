#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace motivec::cli {

enum class Mode { Motive, Groups, Poincare, Dual, Check };
enum class Format { Text, Json };

struct RunConfig {
    std::string space = "point";  // builtin selector, or a declaration name when file is set
    std::optional<std::string> file;
    std::string theory = "chow";
    Mode mode = Mode::Motive;
    Format format = Format::Text;
    std::optional<int> truncation;
    std::uint64_t seed = 20240611;
};

struct RunResult {
    std::string out;
    std::string err;
    int exit_code = 0;
};

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_invariant = 2;

RunResult run(const RunConfig& config);

/// Parses argv-style arguments (without the program name). env_truncation is
/// the value of MOTIVEC_TRUNCATION, if set.
RunResult run_args(const std::vector<std::string>& args, std::optional<std::string> env_truncation = std::nullopt);

} // namespace motivec::cli
