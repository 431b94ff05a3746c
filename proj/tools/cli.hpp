#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cnbethe::cli {

inline constexpr int kSchemaVersion = 1;

enum class ExitCode : int { Ok = 0, ExpectationViolated = 1, Usage = 2 };

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;     // consistency, build, verify, scatter, reps
  std::string subcommand;  // verify: boundary, eigen, duality
  std::string model = "delta";
  int n = 2;
  bool regular = false;
  std::string sector = "++";
  double c1 = 1.0;
  double c2 = 2.0;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  std::vector<double> k;  // empty: seeded random
  std::size_t samples = 200;
  std::uint64_t seed = 7;
  std::size_t probes = 20;
  std::size_t points = 20;
  double h = 1e-4;
  std::optional<double> tol;
  std::string parity = "even";
  double c = 2.0;
  double lambda = 0.5;
  std::string v0 = "1e3:1e9:7";
  Format format = Format::Json;
  std::string out;
};

struct CommandResult {
  ExitCode code = ExitCode::Ok;
  std::string document;
  std::string extension = "json";
};

/// Dispatches on config.command. Validation failures yield ExitCode::Usage
/// with the message in the document.
CommandResult run(const RunConfig& config);

CommandResult cmd_consistency(const RunConfig& config);
CommandResult cmd_build(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_scatter(const RunConfig& config);
CommandResult cmd_reps(const RunConfig& config);

/// "start:stop:count", log-spaced. Throws UsageError.
std::vector<double> parse_grid(const std::string& text);
/// "1.1,2.3". Throws UsageError.
std::vector<double> parse_list(const std::string& text);

/// --out if set, else $CNBETHE_OUTPUT_DIR/<name>.<ext>, else empty (stdout).
std::string output_path(const RunConfig& config, const std::string& extension);

}  // namespace cnbethe::cli
