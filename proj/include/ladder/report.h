#pragma once

// Uniform report rows shared by the CLI and the acceptance runner.
//
// JSON layout: {command, params, rows: [{name, expected, actual, residual,
// pass}], pass}. Every number is a decimal string: rationals as p/q, doubles
// with 17 significant digits.

#include "ladder/coulomb.h"
#include "ladder/factorizations.h"
#include "ladder/generators.h"

#include <string>
#include <utility>
#include <vector>

namespace ladder::report {

struct Row {
  std::string name;
  std::string expected;
  std::string actual;
  std::string residual;
  bool pass = false;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Row> rows;

  bool pass() const;
  std::vector<Row> failures() const;
};

std::string format_double(double value);

Row from_algebra(const AlgebraReport& r);
Row from_relation(const RelationCheck& r);
Row from_action(const coulomb::ActionReport& r);
Row from_norm(const coulomb::NormReport& r);
Row from_casimir(const coulomb::CasimirReport& r);
/// Informational row: always passes.
Row info(std::string name, std::string value);

std::string to_json(const Report& report);
std::string to_text(const Report& report);
std::string row_text(const Row& row);

}  // namespace ladder::report
