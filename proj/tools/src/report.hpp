#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace pwhcli {

using Json = nlohmann::ordered_json;

// One cell of a flat table; monostate prints as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, double, long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
  Json to_json() const;  // array of objects keyed by column
};

struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tol = 0.0;
  bool pass() const { return residual < tol; }
};

// {suite, pass, checks:[{name, lhs, rhs, residual, tol, pass}]}
Json suite_json(const std::string& suite, const std::vector<Check>& checks);
Table suite_table(const std::vector<Check>& checks);

// Numbers with 17 significant digits, non-finite values as null.
void write_json(std::ostream& os, const Json& j);
// RFC 4180: CRLF line ends, fields quoted when they contain , " CR or LF.
void write_csv(std::ostream& os, const Table& t);

std::string format_double(double v);

}  // namespace pwhcli
