#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgame/game.hpp"
#include "qgame/search.hpp"

namespace qgame::cli {

// Reports are JSON documents tagged "schema": "qgame-report/1"; they echo
// the configuration and round-trip losslessly.
using Report = nlohmann::json;

inline constexpr const char* kReportSchema = "qgame-report/1";

// Exit codes: 0 success, 2 config error, 3 numeric/domain error, 4 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

// Configuration problem; `field` names the offending flag or config key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_config on --help; carries the text to print.
struct HelpRequested {
  std::string text;
};

enum class Model { classical, quantum, approach1, approach2, factorize };

Model model_from_string(const std::string& name);  // throws ConfigError
const char* to_string(Model model);

enum class Command { analyze, sweep, factorize };

struct SweepRange {
  double from = 0.0;
  double to = 0.0;
  int samples = 101;
};

struct RunConfig {
  Command command = Command::analyze;
  Model model = Model::classical;
  std::optional<GameMatrix> game;
  double gamma_ent = 0.0;  // resolved default pi/2 for quantum
  std::optional<double> k;
  std::optional<double> eps1;
  std::optional<std::array<double, 4>> eps;
  GridSpec grid{101, 51};
  double tol = 0.0;  // resolved default 1e-6 (search) / 1e-9 (factorize)
  std::optional<SweepRange> sweep;
  std::string out_path;  // empty: stdout
  std::uint64_t seed = 0;
};

// Parses command-line arguments (without the program name), merging in the
// optional --config JSON file; flags override file values.  Throws
// ConfigError for unknown models, missing required parameters, and
// out-of-range values.
RunConfig parse_config(const std::vector<std::string>& args);

/// Dispatches an analyze/factorize configuration; deterministic per config.
Report run(const RunConfig& config);

struct SweepOutput {
  Report report;
  std::string csv;
};

// One sample per row; endpoint samples reuse the exact parameter values, so
// they match single runs bit for bit.
SweepOutput run_sweep(const RunConfig& config);

/// Full command-line entry point; returns an exit code.
int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace qgame::cli
