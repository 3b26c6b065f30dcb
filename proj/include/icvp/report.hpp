#ifndef ICVP_REPORT_HPP
#define ICVP_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "icvp/poly.hpp"

namespace icvp {

using Json = nlohmann::ordered_json;

// One verification outcome: {"check", "params", "status", "witness"}.
// A FAIL is a result, not an error.
struct Report {
  std::string check;
  Json params = Json::object();
  bool pass = true;
  Json witness = Json::object();

  Json to_json() const;
  std::string status() const { return pass ? "PASS" : "FAIL"; }
};

// Exact JSON integer. Throws InternalConsistency beyond the 64-bit range
// rather than ever degrading to a float.
Json json_integer(const Integer& value);
Json json_integers(const std::vector<Integer>& values);

bool all_pass(const std::vector<Report>& reports);

}  // namespace icvp

#endif  // ICVP_REPORT_HPP
