#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace robustmine::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs the robust-miner command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Verification verdict: exact comparisons allow 1e-9, Monte-Carlo ones
/// 5 standard errors. A sample whose draws all agree has standard error 0;
/// the binomial error at the analytic value is used instead, so only an
/// analytic 0 or 1 demands an exact match.
bool within_tolerance(double analytic, double oracle, bool monte_carlo, double standard_error,
                      std::uint64_t samples = 1);

/// "0.1:0.9:0.1" (inclusive range) or "0.1,0.5,0.9".
std::vector<double> parse_grid(const std::string& text);

}  // namespace robustmine::cli
