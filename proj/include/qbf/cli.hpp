#pragma once

// Parameter sweeps behind the qbf command-line tool. Every command returns its
// rows and an exit code; rendering and argument parsing live in run_cli.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbf/qscalar.hpp"

namespace qbf::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kUsageError = 2 };

/// Bad flags, bad config files, unreadable input. Maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::vector<double> q = {0.3, 0.5, 0.7, -0.5};
  double s_max = 1.5;
  double t_max = 8.0;
  std::vector<double> beta = {2.0, 4.0, 8.0};
  std::string weight = "poly:0";
  double tol = 1e-10;
  double fusion_tol = 1e-8;
  std::uint64_t seed = 12345;
  std::string format = "json";
  std::string out;           // empty: stdout
  int jobs = 1;
  std::string input;         // char-spec candidates (JSON); empty: seeded sampler
  int samples = 32;          // sampler size for char-spec
  bool inject_corruption = false;

  /// Throws ConfigError on values outside their domains.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

struct CommandResult {
  int exit_code = kOk;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<std::string> messages;  // diagnostics for stderr
};

CommandResult cmd_check_relations(const SweepConfig& cfg);
CommandResult cmd_norm_table(const SweepConfig& cfg);
CommandResult cmd_boundedness(const SweepConfig& cfg);
/// kind is one of ofplus, ufplus, snplus, suq2.
CommandResult cmd_char_spec(const SweepConfig& cfg, const std::string& kind);
CommandResult cmd_fusion_verify(const SweepConfig& cfg);

/// {meta: {config, seed, version}, rows: [...]} or CSV with a header row.
std::string render(const SweepConfig& cfg, const std::string& command, const CommandResult& result);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qbf::cli
