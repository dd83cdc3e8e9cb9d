#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace pwhcli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

Json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else return v;
      },
      c);
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, double>) return std::isfinite(v) ? format_double(v) : "";
        else if constexpr (std::is_same_v<T, long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      c);
}

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

void write_value(std::ostream& os, const Json& j, int depth) {
  switch (j.type()) {
    case Json::value_t::number_float: {
      double v = j.get<double>();
      if (std::isfinite(v)) os << format_double(v);
      else os << "null";
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        indent(os, depth + 1);
        os << Json(it.key()).dump() << ": ";
        write_value(os, it.value(), depth + 1);
      }
      os << "\n";
      indent(os, depth);
      os << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // arrays of scalars on one line
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      if (flat) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_value(os, j[i], depth);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        indent(os, depth + 1);
        write_value(os, j[i], depth + 1);
      }
      os << "\n";
      indent(os, depth);
      os << "]";
      return;
    }
    default:
      os << j.dump();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

Json Table::to_json() const {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json o = Json::object();
    for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) o[columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(o));
  }
  return arr;
}

Json suite_json(const std::string& suite, const std::vector<Check>& checks) {
  Json j = Json::object();
  bool all = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    all = all && c.pass();
    arr.push_back(Json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"residual", c.residual},
                       {"tol", c.tol}, {"pass", c.pass()}});
  }
  j["suite"] = suite;
  j["pass"] = all;
  j["checks"] = std::move(arr);
  return j;
}

Table suite_table(const std::vector<Check>& checks) {
  Table t;
  t.columns = {"name", "lhs", "rhs", "residual", "tol", "pass"};
  for (const auto& c : checks) t.add({c.name, c.lhs, c.rhs, c.residual, c.tol, c.pass()});
  return t;
}

void write_json(std::ostream& os, const Json& j) {
  write_value(os, j, 0);
  os << "\n";
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << "\r\n";
  }
}

}  // namespace pwhcli
