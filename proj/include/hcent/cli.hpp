#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hcent/analytic.hpp"
#include "hcent/gaussian.hpp"

namespace hcent::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

enum class OutputFormat { text, json, csv };

/// Fully resolved flag set of one invocation.
struct CommandConfig {
    std::string command;
    std::string graph = "hypercube:3";
    int d = 3;
    double g = 0.5;
    std::string scheme;
    std::vector<int> subset;
    double tolerance = 1e-9;
    LogBase log_base = LogBase::two;
    int threads = 1;
    OutputFormat format = OutputFormat::text;
    std::string output;
    std::uint64_t sample = 0;
    std::uint64_t seed = 20240229;
};

/// Accepts "parity", "identity-cut" and "half-strata" plus a few aliases.
std::optional<AnalyticScheme> parse_scheme(std::string_view name);
std::string scheme_name(AnalyticScheme scheme);

/// "0,3,5,6" -> {0,3,5,6}; throws ArgumentError on malformed input.
std::vector<int> parse_subset(std::string_view text);

nlohmann::json config_to_json(const CommandConfig& config);

int run_entropy(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run_census(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run_analytic(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run_spectrum(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the run_* command; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcent::cli
