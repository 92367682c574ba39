#pragma once

// CLI output plumbing: typed tables rendered as CSV or JSON with fixed
// 17-significant-digit formatting (byte-deterministic for a given config),
// tolerance registry with env/config/flag overrides, and the manifest line.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace dkps3::cli {

using Cell = std::variant<long long, double, std::string, bool>;

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string csv_cell(const Cell& c) {
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  if (std::holds_alternative<bool>(c)) return std::get<bool>(c) ? "true" : "false";
  return std::get<std::string>(c);
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  return out;
}

inline std::string json_cell(const Cell& c) {
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<bool>(c)) return std::get<bool>(c) ? "true" : "false";
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (std::isfinite(v)) return format_double(v);
    return "\"" + format_double(v) + "\"";  // nan/inf are not JSON numbers
  }
  return "\"" + json_escape(std::get<std::string>(c)) + "\"";
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        os << csv_cell(row[i]) << (i + 1 < row.size() ? "," : "\n");
  }

  void write_json(std::ostream& os) const {
    os << "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      os << "  {";
      for (std::size_t i = 0; i < rows[r].size(); ++i) {
        os << "\"" << json_escape(columns[i]) << "\": " << json_cell(rows[r][i]);
        if (i + 1 < rows[r].size()) os << ", ";
      }
      os << "}" << (r + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
  }

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json")
      write_json(os);
    else
      write_csv(os);
  }
};

// Named tolerances. Resolution order: built-in default, then environment
// (DKPS3_TOL_<NAME> with '-' -> '_', uppercased), then config file, then
// --tol NAME=VALUE flags.
class Tolerances {
 public:
  Tolerances() {
    values_ = {
        {"christoffel-fd", 1e-6},   {"tetrad", 1e-12},
        {"metric-compat", 1e-10},   {"field-fd", 1e-8},
        {"ode-resid", 1e-8},        {"eigenrel", 2e-6},
        {"cubic-resid", 1e-12},     {"vieta", 1e-12},
        {"triple-angle", 1e-14},    {"ratio-resid", 1e-12},
        {"eigen-imag", 1e-8},       {"parity", 1e-8},
        {"fit-rel", 0.02},          {"z-decoupled-rel", 0.01},
        {"float-algebra", 1e-14},
    };
    for (auto& [name, v] : values_) {
      std::string env = "DKPS3_TOL_";
      for (char c : name) env += (c == '-') ? '_' : static_cast<char>(std::toupper(c));
      if (const char* s = std::getenv(env.c_str())) v = std::atof(s);
    }
  }

  double get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw std::invalid_argument("unknown tolerance: " + name);
    return it->second;
  }

  void set(const std::string& name, double v) { values_[name] = v; }

  void apply_flag(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--tol expects NAME=VALUE");
    set(spec.substr(0, eq), std::atof(spec.c_str() + eq + 1));
  }

  const std::map<std::string, double>& all() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

struct OutputSink {
  std::string format = "csv";
  std::string path;  // empty -> stdout

  void emit(const Table& t) const {
    if (path.empty()) {
      t.write(std::cout, format);
    } else {
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot open output file: " + path);
      t.write(f, format);
    }
  }
};

inline void manifest(const std::string& cmd, const std::string& config_echo, double wall_ms,
                     const std::string& status, int passed, int total) {
  std::cerr << "dkps3 " << "0.1.0" << " cmd=" << cmd << " config={" << config_echo << "}"
            << " wall_ms=" << static_cast<long long>(wall_ms) << " status=" << status;
  if (total > 0) std::cerr << " checks=" << passed << "/" << total;
  std::cerr << "\n";
}

}  // namespace dkps3::cli
