#include "icvp/report.hpp"

#include <algorithm>

#include "icvp/errors.hpp"

namespace icvp {

Json Report::to_json() const {
  Json out;
  out["check"] = check;
  out["params"] = params;
  out["status"] = status();
  out["witness"] = witness;
  return out;
}

Json json_integer(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw InternalConsistency("integer " + value.get_str() + " exceeds the 64-bit JSON integer range");
  }
  return static_cast<std::int64_t>(value.get_si());
}

Json json_integers(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(json_integer(v));
  return out;
}

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

}  // namespace icvp
