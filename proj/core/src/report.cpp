#include "expanderlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <tuple>

#include <nlohmann/json.hpp>

namespace expanderlab {

void sort_reports(std::vector<BoundReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const BoundReport& x, const BoundReport& y) {
    return std::tie(x.suite, x.theorem_id, x.p, x.seed) < std::tie(y.suite, y.theorem_id, y.p, y.seed);
  });
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

namespace {

std::string rhs_text(const BoundReport& r) {
  return r.rhs_exact ? to_string(*r.rhs_exact) : format_double(r.rhs);
}

std::vector<std::string> csv_fields(const BoundReport& r) {
  return {r.suite,
          r.theorem_id,
          std::to_string(r.p),
          r.family,
          std::to_string(r.size_a),
          std::to_string(r.size_b),
          std::to_string(r.size_c),
          r.m ? std::to_string(*r.m) : "",
          std::to_string(r.lhs),
          rhs_text(r),
          std::isfinite(r.ratio) ? format_double(r.ratio) : "",
          r.holds ? (*r.holds ? "true" : "false") : "",
          r.exponent ? format_double(*r.exponent) : "",
          std::to_string(r.seed)};
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<BoundReport>& reports) {
  bool first = true;
  for (const char* col : kReportColumns) {
    os << (first ? "" : ",") << col;
    first = false;
  }
  os << "\r\n";
  for (const auto& r : reports) {
    const auto fields = csv_fields(r);
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_escape(fields[i]);
    os << "\r\n";
  }
}

void write_json(std::ostream& os, const std::vector<BoundReport>& reports) {
  os << "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    nlohmann::json j;
    j["suite"] = r.suite;
    j["theorem_id"] = r.theorem_id;
    j["p"] = r.p;
    j["family"] = r.family;
    j["size_A"] = r.size_a;
    j["size_B"] = r.size_b;
    j["size_C"] = r.size_c;
    j["m"] = r.m ? nlohmann::json(*r.m) : nlohmann::json(nullptr);
    j["lhs"] = r.lhs;
    j["rhs"] = rhs_text(r);
    j["ratio"] = std::isfinite(r.ratio) ? nlohmann::json(r.ratio) : nlohmann::json(nullptr);
    j["holds"] = r.holds ? nlohmann::json(*r.holds) : nlohmann::json(nullptr);
    j["exponent"] = r.exponent ? nlohmann::json(*r.exponent) : nlohmann::json(nullptr);
    j["seed"] = r.seed;
    os << (i ? ",\n " : "\n ") << j.dump();
  }
  os << (reports.empty() ? "]\n" : "\n]\n");
}

}  // namespace expanderlab
