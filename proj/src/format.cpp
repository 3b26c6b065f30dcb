#include "icvp/format.hpp"

#include <algorithm>
#include <sstream>

#include "icvp/errors.hpp"
#include "icvp/report.hpp"

namespace icvp {

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "latex") return OutputFormat::latex;
  if (name == "plain") return OutputFormat::plain;
  throw InvalidArgs("unknown format '" + name + "'");
}

std::string json_record(const PolyRecord& record) {
  std::string out = "{";
  if (record.n > 0) out += "\"n\":" + std::to_string(record.n) + ",";
  out += "\"group\":" + Json(record.group).dump() + ",\"d\":" + std::to_string(record.d) + ",\"coeffs\":[";
  const auto coeffs = record.poly.dense();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) out += ",";
    out += coeffs[k].get_str();
  }
  return out + "]}";
}

std::string csv_records(const std::vector<PolyRecord>& records) {
  int width = 0;
  bool by_n = !records.empty();
  for (const auto& r : records) {
    width = std::max(width, r.poly.degree() + 1);
    by_n = by_n && r.n > 0;
  }
  std::ostringstream out;
  out << (by_n ? "n" : "group") << ",d";
  for (int k = 0; k < width; ++k) out << ",c" << k;
  out << "\n";
  for (const auto& r : records) {
    if (by_n) {
      out << r.n;
    } else {
      out << r.group;
    }
    out << "," << r.d;
    for (int k = 0; k < width; ++k) out << "," << r.poly.coeff(k).get_str();
    out << "\n";
  }
  return out.str();
}

std::string latex_poly_terms(const IntPoly& p, std::size_t first_line_terms, std::size_t line_terms) {
  if (p.terms().empty()) return "0";
  std::string out;
  std::size_t on_line = 0;
  std::size_t limit = first_line_terms;
  bool first = true;
  for (const auto& term : p.terms()) {
    const bool negative = sgn(term.coeff) < 0;
    const Integer magnitude = abs(term.coeff);
    std::string body;
    if (term.degree == 0 || magnitude != 1) body = magnitude.get_str();
    if (term.degree == 1) body += "t";
    if (term.degree > 1) body += "t^{" + std::to_string(term.degree) + "}";
    if (first) {
      out += (negative ? "-" : "") + body;
      first = false;
    } else if (on_line == limit) {
      out += std::string("\\\\\n&& ") + (negative ? "-" : "+") + "\\; " + body;
      on_line = 0;
      limit = line_terms;
    } else {
      out += std::string(negative ? " - " : " + ") + body;
    }
    ++on_line;
  }
  return out;
}

std::string latex_records(const std::vector<PolyRecord>& records) {
  std::string out;
  for (const auto& r : records) out += r.label + "(t) &=& " + latex_poly_terms(r.poly) + "\\\\\n";
  return out;
}

}  // namespace icvp
