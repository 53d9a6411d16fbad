#include <cstdio>
#include <ostream>
#include <sstream>

#include "nonlimit/cli.hpp"

namespace nonlimit::cli {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

struct CsvCell {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(const std::string& v) const { return csv_escape(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
};

struct JsonCell {
  nlohmann::json operator()(std::monostate) const { return nullptr; }
  nlohmann::json operator()(std::int64_t v) const { return v; }
  nlohmann::json operator()(double v) const { return v; }
  nlohmann::json operator()(const std::string& v) const { return v; }
  nlohmann::json operator()(bool v) const { return v; }
};

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  row.resize(columns.size());
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << csv_escape(table.columns[i]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    }
    os << '\n';
  }
}

nlohmann::json to_json(const CommandResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(std::visit(JsonCell{}, cell));
    rows.push_back(std::move(r));
  }
  nlohmann::json outputs = result.report.outputs;
  outputs["table"] = {{"columns", result.table.columns}, {"rows", std::move(rows)}};
  nlohmann::json diagnostics = result.report.diagnostics;
  diagnostics["checks_passed"] = result.checks_passed;

  // nlohmann::json objects are std::map backed, so keys serialize sorted.
  return {
      {"command", result.report.command},
      {"inputs", result.report.inputs},
      {"outputs", std::move(outputs)},
      {"diagnostics", std::move(diagnostics)},
      {"version", result.report.version},
  };
}

std::string render(const CommandResult& result, Format format) {
  if (format == Format::Json) return to_json(result).dump(2) + "\n";
  std::ostringstream os;
  write_csv(result.table, os);
  return os.str();
}

}  // namespace nonlimit::cli
