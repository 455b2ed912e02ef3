#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gyrokin::cli {

enum class OutputFormat { Table, Json, Csv };

using Row = std::vector<double>;
using FieldValue = std::variant<double, Row, std::vector<Row>, std::string>;

struct Field {
  std::string name;
  FieldValue value;
};

/// Column-major data for commands that emit a table (the aberration sweep).
struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

struct Report {
  std::string op;
  std::vector<Field> inputs;
  std::vector<Field> result;
  std::vector<Field> checks;
  Table table;

  Report& input(std::string name, FieldValue v) { inputs.push_back({std::move(name), std::move(v)}); return *this; }
  Report& add(std::string name, FieldValue v) { result.push_back({std::move(name), std::move(v)}); return *this; }
  Report& check(std::string name, FieldValue v) { checks.push_back({std::move(name), std::move(v)}); return *this; }
};

/// printf("%.15g"), with negative zero printed as 0.
std::string format_number(double x);

/// Comma-separated components, the same syntax the vector options accept.
std::string format_row(const Row& r);

void render(const Report& report, OutputFormat format, std::ostream& out);

/// Error report; JSON on request, otherwise a single `Kind: message` line.
void render_error(const std::string& kind, const std::string& message, OutputFormat format, std::ostream& out);

}  // namespace gyrokin::cli
