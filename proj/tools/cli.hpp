#pragma once

/// \file
/// \brief gftcheck front end: argument parsing and command dispatch.

#include "gft/theorems.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gft::cli {

enum class Command { Check, Crosscheck, Threshold, Grid, Identities, Suite };
enum class OutputFormat { Json, Csv, Human };

/// Exit codes of run().
enum ExitCode : int {
  kSuccess = 0,  ///< success, or the predicate Holds
  kFails = 1,    ///< the predicate/check Fails
  kMarginal = 2, ///< verdict inside the boundary band
  kUsage = 3,
  kNumeric = 4, ///< TruncationNotReached and similar numeric failures
};

struct RunConfig {
  Command command = Command::Check;
  std::optional<std::string> predicate;
  std::optional<double> m;
  std::optional<double> k;
  std::optional<double> lambda;
  std::optional<double> A;
  std::optional<double> B;
  std::optional<double> tau_re;
  std::optional<double> tau_im;
  double eps = 1e-12;
  double tol = 1e-10;
  std::vector<double> radii;
  std::optional<int> points;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> out_path;
  /// Seed for `suite`, from GFT_SEED.
  std::uint64_t seed = 20240601;
};

struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kSuccess; ///< meaningful when config is empty
};

/// Parses argv. Help, unknown flags and malformed values produce an empty
/// config with the message already written to `out`/`err`.
ParseOutcome parse(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err);

/// Reads GFT_SEED into config.seed. Returns false on a malformed value.
bool apply_seed_env(RunConfig& config, std::ostream& err);

/// Executes a parsed config; the report goes to `out` (or config.out_path).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + seed + run.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

} // namespace gft::cli
