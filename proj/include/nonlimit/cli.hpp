#pragma once

// Command implementations behind the `nonlimit` executable. Each command
// returns a RunReport plus one table; the front end renders either the table
// as CSV or the whole report as JSON.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "nonlimit/types.hpp"
#include "nonlimit/vanderpol.hpp"

namespace nonlimit::cli {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  nlohmann::json diagnostics = nlohmann::json::object();
  std::string version;
};

struct CommandResult {
  RunReport report;
  Table table;
  bool checks_passed = true;
};

enum class Format { Csv, Json };

/// 17 significant digits (%.17g); negative zero prints as 0.
[[nodiscard]] std::string format_double(double v);

void write_csv(const Table& table, std::ostream& os);
[[nodiscard]] nlohmann::json to_json(const CommandResult& result);
[[nodiscard]] std::string render(const CommandResult& result, Format format);

struct RulesCheckOptions {
  std::uint64_t seed = 42;
  int trials = 100;
  double tolerance = 1e-12;
};

struct DerivOptions {
  std::string func = "square";
  double param = 1.0;
  double t = 1.0;
  double tau = 0.5;
  /// When set, differentiates these samples instead of `func`.
  std::optional<std::vector<double>> values;
  double t0 = 0.0;
};

struct OscOptions {
  double omega = 1.0;
  double tau = 0.1;
  Complex x0 = 1.0;
  Complex v0 = 0.0;
  int steps = 10;
  bool convergence = false;
  int halvings = 6;
  double at = 1.0;
  double tolerance = 1e-10;
};

struct HeatOptions {
  double alpha = 1.0;
  double tau = 0.01;
  double xi = 0.1;
  Complex c1 = 0.0;
  Complex c4 = 1.0;
  int nt = 3;
  int ny = 4;
  bool series = false;
  double l = 1.0;
  std::string phi = "sin:1";
  int modes = 20;
  int quadrature = 256;
  int points = 100;
  std::uint64_t seed = 1;
  double t_max = 1.0;
  double tolerance = 1e-10;
};

struct VdpOptions {
  double lambda = 1.0;
  double omega = 1.0;
  std::optional<double> x0;
  std::optional<double> v0;
  double t0 = 0.0;
  int steps = 64;
  std::optional<double> tau;
  Sign r_branch = Sign::Plus;
  Sign phase = Sign::Plus;
  double tolerance = 1e-10;
};

[[nodiscard]] CommandResult rules_check(const RulesCheckOptions& opt);
[[nodiscard]] CommandResult deriv(const DerivOptions& opt);
[[nodiscard]] CommandResult osc(const OscOptions& opt);
[[nodiscard]] CommandResult heat(const HeatOptions& opt);
[[nodiscard]] CommandResult vdp(const VdpOptions& opt);

/// Parses arguments, runs one command and writes its output.
/// Returns 0 when all checks pass, 1 when a tolerance check fails and 2 for
/// usage errors or rejected inputs.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nonlimit::cli
