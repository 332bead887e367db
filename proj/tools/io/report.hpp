#pragma once

#include "io/model_io.hpp"

#include <optional>
#include <string>

namespace curvelattice {

// One CLI invocation's machine-readable record: the command and model echoed
// back, the parsed inputs, the result payload, any oracle-check summaries,
// and wall time (dropped under --stable so output is byte-reproducible).
struct RunReport {
  std::string command;
  std::string model;  // empty when the command takes no model
  Json inputs = Json::object();
  Json result = Json::object();
  Json checks = Json::object();
  std::optional<double> wall_ms;
};

bool operator==(const RunReport& x, const RunReport& y);

// Round-trips losslessly: report_from_json(report_to_json(r)) == r.
Json report_to_json(const RunReport& r);
RunReport report_from_json(const Json& j);

// Human-readable rendering: key/value lines; a result carrying a "rows"
// array of uniform objects is rendered as an aligned column table.
std::string render_table(const RunReport& r);

// CSV rendering for row-shaped results (classify quartic and enumerate):
// documented column order a,b,d,g,h1_I4,kind,dim_w,tangent_dim,criteria.
std::string render_csv(const RunReport& r);

}  // namespace curvelattice
