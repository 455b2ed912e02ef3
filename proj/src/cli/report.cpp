#include "cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include <json.hpp>

namespace gyrokin::cli {

namespace {

using nlohmann::ordered_json;

ordered_json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  const double rounded = std::strtod(format_number(x).c_str(), nullptr);
  if (rounded == std::trunc(rounded) && std::abs(rounded) < 1e15) return static_cast<long long>(rounded);
  // nlohmann prints the shortest round-trip form, here at most 15 digits
  return rounded;
}

ordered_json to_json(const FieldValue& v) {
  struct Visitor {
    ordered_json operator()(double x) const { return json_number(x); }
    ordered_json operator()(const Row& r) const {
      ordered_json a = ordered_json::array();
      for (double x : r) a.push_back(json_number(x));
      return a;
    }
    ordered_json operator()(const std::vector<Row>& m) const {
      ordered_json a = ordered_json::array();
      for (const Row& r : m) a.push_back((*this)(r));
      return a;
    }
    ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

ordered_json to_json(const std::vector<Field>& fields) {
  ordered_json o = ordered_json::object();
  for (const auto& f : fields) o[f.name] = to_json(f.value);
  return o;
}

std::string table_text(const FieldValue& v) {
  struct Visitor {
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(const Row& r) const { return format_row(r); }
    std::string operator()(const std::vector<Row>& m) const {
      std::string s;
      for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ";" : "") + format_row(m[i]);
      return s;
    }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Flattens one field into CSV header and value cells.
void csv_cells(const std::string& prefix, const FieldValue& v, std::vector<std::string>& head,
               std::vector<std::string>& cells) {
  if (const auto* x = std::get_if<double>(&v)) {
    head.push_back(prefix);
    cells.push_back(format_number(*x));
  } else if (const auto* r = std::get_if<Row>(&v)) {
    for (std::size_t i = 0; i < r->size(); ++i) {
      head.push_back(prefix + "_" + std::to_string(i));
      cells.push_back(format_number((*r)[i]));
    }
  } else if (const auto* m = std::get_if<std::vector<Row>>(&v)) {
    for (std::size_t i = 0; i < m->size(); ++i) {
      for (std::size_t j = 0; j < (*m)[i].size(); ++j) {
        head.push_back(prefix + "_" + std::to_string(i) + "_" + std::to_string(j));
        cells.push_back(format_number((*m)[i][j]));
      }
    }
  } else {
    head.push_back(prefix);
    cells.push_back(csv_quote(std::get<std::string>(v)));
  }
}

void write_csv_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << '\n';
}

void render_table_csv(const Table& t, std::ostream& out) {
  write_csv_line(t.columns, out);
  for (const Row& r : t.rows) {
    std::vector<std::string> cells;
    for (double x : r) cells.push_back(format_number(x));
    write_csv_line(cells, out);
  }
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string format_row(const Row& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + format_number(r[i]);
  return s;
}

void render(const Report& report, OutputFormat format, std::ostream& out) {
  const bool tabular = !report.table.columns.empty();
  switch (format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["op"] = report.op;
      j["inputs"] = to_json(report.inputs);
      ordered_json result = to_json(report.result);
      if (tabular) {
        ordered_json rows = ordered_json::array();
        for (const Row& r : report.table.rows) {
          ordered_json o;
          for (std::size_t i = 0; i < r.size(); ++i) o[report.table.columns[i]] = json_number(r[i]);
          rows.push_back(o);
        }
        result["rows"] = rows;
      }
      j["result"] = result;
      j["checks"] = to_json(report.checks);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      if (tabular) {
        render_table_csv(report.table, out);
        break;
      }
      std::vector<std::string> head, cells;
      for (const auto& f : report.result) csv_cells(f.name, f.value, head, cells);
      for (const auto& f : report.checks) csv_cells("check_" + f.name, f.value, head, cells);
      write_csv_line(head, out);
      write_csv_line(cells, out);
      break;
    }
    case OutputFormat::Table: {
      if (tabular) {
        render_table_csv(report.table, out);
        break;
      }
      for (const auto& f : report.result) out << f.name << ": " << table_text(f.value) << '\n';
      for (const auto& f : report.checks) out << "check " << f.name << ": " << table_text(f.value) << '\n';
      break;
    }
  }
}

void render_error(const std::string& kind, const std::string& message, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    out << j.dump(2) << '\n';
  } else {
    out << kind << ": " << message << '\n';
  }
}

}  // namespace gyrokin::cli
