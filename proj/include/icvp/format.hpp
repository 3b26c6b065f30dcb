#ifndef ICVP_FORMAT_HPP
#define ICVP_FORMAT_HPP

#include <string>
#include <vector>

#include "icvp/poly.hpp"

namespace icvp {

enum class OutputFormat { json, csv, latex, plain };

OutputFormat parse_format(const std::string& name);

// One computed polynomial with its labels.
struct PolyRecord {
  std::string label;  // "P_{5}" style label for LaTeX
  std::string group;  // canonical key, "1" for the trivial group
  int n = 0;          // 0 unless the record is P_n from a table
  int d = 0;
  IntPoly poly;
};

// {"n"?, "group", "d", "coeffs"} on one line. Coefficients are written as
// exact decimal integers at any size.
std::string json_record(const PolyRecord& record);

// Header plus one row per record, coefficient columns padded with zeros.
std::string csv_records(const std::vector<PolyRecord>& records);

// eqnarray* body: "P_{n}(t) &=& 1 + ... \\" with "&& +\; ..." continuations.
std::string latex_records(const std::vector<PolyRecord>& records);

std::string latex_poly_terms(const IntPoly& p, std::size_t first_line_terms = 12, std::size_t line_terms = 9);

}  // namespace icvp

#endif  // ICVP_FORMAT_HPP
