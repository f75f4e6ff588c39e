#include "ladder/report.h"

#include "ladder/opdsl.h"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ladder::report {

bool Report::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

std::vector<Row> Report::failures() const {
  std::vector<Row> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out), [](const Row& r) { return !r.pass; });
  return out;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Row from_algebra(const AlgebraReport& r) {
  return {r.name, dsl::render(r.rhs), dsl::render(r.lhs), dsl::render(r.residual), r.pass};
}

Row from_relation(const RelationCheck& r) {
  return {r.name, to_string(r.rhs), to_string(r.lhs), to_string(Rational(r.lhs - r.rhs)), r.pass()};
}

Row from_action(const coulomb::ActionReport& r) {
  std::string name = r.generator + " " + r.source + " -> " + r.target;
  std::string residual = "coef " + format_double(r.coefficient_error) + ", L2 " + format_double(r.l2_error);
  return {name, format_double(r.closed), format_double(r.numeric), residual, r.pass};
}

Row from_norm(const coulomb::NormReport& r) {
  return {"<psi|psi> " + r.state, "1", format_double(r.norm_squared), format_double(r.error), r.pass};
}

Row from_casimir(const coulomb::CasimirReport& r) {
  return {"C psi = m(m+1) psi " + r.state, format_double(r.eigenvalue), format_double(r.eigenvalue),
          format_double(r.l2_error), r.pass};
}

Row info(std::string name, std::string value) { return {std::move(name), value, value, "0", true}; }

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = params;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Row& r : report.rows) {
    rows.push_back({{"name", r.name},
                    {"expected", r.expected},
                    {"actual", r.actual},
                    {"residual", r.residual},
                    {"pass", r.pass}});
  }
  j["rows"] = rows;
  j["pass"] = report.pass();
  return j.dump(2) + "\n";
}

std::string row_text(const Row& row) {
  std::ostringstream os;
  os << (row.pass ? "PASS " : "FAIL ") << row.name << "\n"
     << "  expected: " << row.expected << "\n"
     << "  actual:   " << row.actual << "\n"
     << "  residual: " << row.residual << "\n";
  return os.str();
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << report.command;
  for (const auto& [k, v] : report.params) os << " " << k << "=" << v;
  os << "\n";
  for (const Row& r : report.rows) os << row_text(r);
  os << (report.pass() ? "all checks passed" : "some checks failed") << " (" << report.rows.size() << " rows)\n";
  return os.str();
}

}  // namespace ladder::report
