#include "io/report.hpp"

#include "curvelattice/error.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace curvelattice {

bool operator==(const RunReport& x, const RunReport& y) {
  return x.command == y.command && x.model == y.model &&
         x.inputs == y.inputs && x.result == y.result &&
         x.checks == y.checks && x.wall_ms == y.wall_ms;
}

Json report_to_json(const RunReport& r) {
  Json j = Json::object();
  j["command"] = r.command;
  if (!r.model.empty()) j["model"] = r.model;
  j["inputs"] = r.inputs;
  j["result"] = r.result;
  j["checks"] = r.checks;
  if (r.wall_ms) j["wall_time_ms"] = *r.wall_ms;
  return j;
}

RunReport report_from_json(const Json& j) {
  if (!j.is_object()) {
    fail(Errc::invalid_input, "report must be a JSON object");
  }
  for (const char* key : {"command", "inputs", "result", "checks"}) {
    if (!j.contains(key)) {
      fail(Errc::invalid_input,
           std::string("report is missing \"") + key + "\"");
    }
  }
  if (!j["command"].is_string()) {
    fail(Errc::invalid_input, "report command must be a string");
  }
  if (j.contains("model") && !j["model"].is_string()) {
    fail(Errc::invalid_input, "report model must be a string");
  }
  RunReport r;
  r.command = j["command"].get<std::string>();
  if (j.contains("model")) r.model = j["model"].get<std::string>();
  r.inputs = j["inputs"];
  r.result = j["result"];
  r.checks = j["checks"];
  if (j.contains("wall_time_ms")) {
    r.wall_ms = j["wall_time_ms"].get<double>();
  }
  return r;
}

namespace {

std::string scalar_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    // Compact join for arrays of scalars (criteria tags, classes).
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ";";
      s += scalar_cell(e);
    }
    return s;
  }
  return v.dump();
}

void render_rows_table(std::ostringstream& os, const Json& rows,
                       const std::string& indent) {
  if (rows.empty()) {
    os << indent << "(no rows)\n";
    return;
  }
  std::vector<std::string> cols;
  for (const auto& [key, value] : rows[0].items()) cols.push_back(key);
  std::vector<size_t> width(cols.size());
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(cols);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const std::string& c : cols) {
      line.push_back(row.contains(c) ? scalar_cell(row[c]) : "-");
    }
    cells.push_back(std::move(line));
  }
  for (const auto& line : cells) {
    for (size_t i = 0; i < cols.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  for (size_t li = 0; li < cells.size(); ++li) {
    os << indent;
    for (size_t i = 0; i < cols.size(); ++i) {
      os << cells[li][i];
      if (i + 1 < cols.size()) {
        os << std::string(width[i] - cells[li][i].size() + 2, ' ');
      }
    }
    os << "\n";
  }
}

void render_object(std::ostringstream& os, const Json& obj,
                   const std::string& indent) {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      render_object(os, value, indent + "  ");
    } else if (value.is_array() && key == "rows") {
      os << indent << key << ":\n";
      render_rows_table(os, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      os << indent << key << ":\n";
      for (const auto& e : value) {
        os << indent << "  - " << e.dump() << "\n";
      }
    } else {
      os << indent << key << ": " << scalar_cell(value) << "\n";
    }
  }
}

}  // namespace

std::string render_table(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  if (!r.model.empty()) os << "model: " << r.model << "\n";
  if (!r.inputs.empty()) {
    os << "inputs:\n";
    render_object(os, r.inputs, "  ");
  }
  os << "result:\n";
  render_object(os, r.result, "  ");
  if (!r.checks.empty()) {
    os << "checks:\n";
    render_object(os, r.checks, "  ");
  }
  if (r.wall_ms) os << "wall_time_ms: " << *r.wall_ms << "\n";
  return os.str();
}

std::string render_csv(const RunReport& r) {
  static const char* kCols[] = {"a",     "b",     "d",          "g",
                                "h1_I4", "kind",  "dim_w",      "tangent_dim",
                                "criteria"};
  const Json* rows = nullptr;
  Json single = Json::array();
  if (r.result.contains("rows") && r.result["rows"].is_array()) {
    rows = &r.result["rows"];
  } else if (r.result.contains("kind") && r.result.contains("class")) {
    Json row = Json::object();
    row["a"] = r.result["class"][0];
    row["b"] = r.result["class"][1];
    // dim_w / tangent_dim are absent on not-applicable verdicts; leave the
    // cell empty rather than reaching for a missing key.
    auto put = [&](const char* col, const char* key) {
      if (r.result.contains(key)) row[col] = r.result[key];
    };
    put("d", "d");
    put("g", "g");
    put("h1_I4", "h1_ideal_4");
    put("kind", "kind");
    put("dim_w", "dim_w");
    put("tangent_dim", "tangent_dim");
    put("criteria", "criteria");
    single.push_back(row);
    rows = &single;
  } else {
    fail(Errc::invalid_input,
         "--format csv applies to row-shaped results (classify quartic, "
         "enumerate); use json or table for this command");
  }
  std::ostringstream os;
  for (size_t i = 0; i < std::size(kCols); ++i) {
    os << (i ? "," : "") << kCols[i];
  }
  os << "\n";
  for (const auto& row : *rows) {
    for (size_t i = 0; i < std::size(kCols); ++i) {
      if (i) os << ",";
      if (row.contains(kCols[i]) && !row[kCols[i]].is_null()) {
        os << scalar_cell(row[kCols[i]]);
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace curvelattice
