#include "icvp/ic_core.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include <unistd.h>

#include "icvp/errors.hpp"

namespace icvp {

std::optional<IntPoly> MemoCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void MemoCache::insert(const std::string& key, IntPoly value) {
  std::unique_lock lock(mutex_);
  entries_.insert_or_assign(key, std::move(value));
}

std::size_t MemoCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

MemoCache::Stats MemoCache::stats() const { return {hits_.load(), misses_.load()}; }

std::vector<std::pair<std::string, IntPoly>> MemoCache::snapshot() const {
  std::shared_lock lock(mutex_);
  return {entries_.begin(), entries_.end()};
}

void MemoCache::save(const std::filesystem::path& path) const {
  const auto entries = snapshot();
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << kFileHeader << '\n';
    for (const auto& [key, poly] : entries) {
      out << key << ": ";
      const auto coeffs = poly.dense();
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << coeffs[i].get_str();
      out << '\n';
    }
    if (!out.flush()) throw Error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void MemoCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read cache file " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kFileHeader) {
    throw InternalConsistency("cache file " + path.string() + " lacks the '" + kFileHeader + "' header");
  }
  std::size_t line_no = 1;
  std::vector<std::pair<std::string, IntPoly>> parsed;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto bad = [&](const std::string& why) {
      return InternalConsistency("cache file " + path.string() + " line " + std::to_string(line_no) + ": " + why);
    };
    const auto colon = line.find(": ");
    if (colon == std::string::npos) throw bad("missing ': '");
    const std::string key = line.substr(0, colon);
    try {
      if (GroupType::parse(key).key() != key) throw bad("non-canonical key '" + key + "'");
    } catch (const ParseError&) {
      throw bad("unparseable key '" + key + "'");
    }
    std::vector<Integer> coeffs;
    std::stringstream fields(line.substr(colon + 2));
    std::string field;
    while (std::getline(fields, field, ',')) {
      Integer c;
      if (field.empty() || c.set_str(field, 10) != 0) throw bad("bad coefficient '" + field + "'");
      coeffs.push_back(c);
    }
    if (coeffs.empty()) throw bad("no coefficients");
    parsed.emplace_back(key, IntPoly(std::span<const Integer>(coeffs)));
  }
  for (auto& [key, poly] : parsed) insert(key, std::move(poly));
}

int poincare_degree_bound(int d) { return (d + 1) / 2 - 1; }

int dim_type_a(int n) { return n * (n + 1) / 2 - 1; }

IcEngine::IcEngine(EngineOptions options) : options_(options) {}

IntPoly IcEngine::poincare(const GroupType& group) {
  IntPoly p{1};
  for (const auto& factor : group.factors()) p *= poincare(factor);
  return p;
}

IntPoly IcEngine::poincare(SimpleType type) {
  const std::string key = type.name();
  if (auto hit = cache_.find(key)) return *hit;
  IntPoly value = poincare_simple_uncached(type);
  cache_.insert(key, value);
  return value;
}

IntPoly IcEngine::poincare_simple_uncached(SimpleType type) {
  const int bound = poincare_degree_bound(dim_x(type));
  if (type.family() == Family::A && options_.type_a_fast_path) {
    return truncate(difference_poly_type_a(type.rank() + 1), bound);
  }
  return truncate(difference_poly(type), bound);
}

IntPoly IcEngine::difference_poly(SimpleType type) {
  const std::uint32_t subsets = NodeSet::all(type.rank()).bits();
  const IntPoly f = f_poly(type);

  // Resolve every Levi factor first; the reduction below is then pure arithmetic.
  std::vector<GroupType> levi(subsets);
  std::vector<IntPoly> flipped(subsets);
  for (std::uint32_t mask = 1; mask <= subsets; ++mask) {
    levi[mask - 1] = levi_subtype(type, NodeSet(mask));
    flipped[mask - 1] = reverse(poincare(levi[mask - 1]), dim_x(levi[mask - 1]));
  }

  auto term = [&](std::size_t i) {
    try {
      return exact_div(f, f_poly(levi[i])) * flipped[i];
    } catch (const NonExactDivision& e) {
      std::string nodes;
      for (int v : NodeSet(static_cast<std::uint32_t>(i + 1)).nodes()) nodes += (nodes.empty() ? "" : ",") + std::to_string(v);
      throw NonExactDivision("f_" + type.name() + " / f_" + levi[i].key() + " for S = {" + nodes + "}: " + e.what());
    }
  };
  return reduce_terms(subsets, term, options_.execution);
}

IntPoly IcEngine::poincare_type_a(int n) {
  if (n < 1) throw InvalidArgs("poincare_type_a requires n >= 1");
  if (n == 1) return IntPoly{1};
  return poincare(SimpleType::make(Family::A, n - 1));
}

IntPoly IcEngine::difference_poly_type_a(int n) {
  if (n < 1) throw InvalidArgs("difference_poly_type_a requires n >= 1");
  std::vector<IntPoly> p(static_cast<std::size_t>(n));
  for (int s = 1; s < n; ++s) p[s] = poincare_type_a(s);

  auto term = [&](std::size_t i) {
    const int s = static_cast<int>(i) + 1;
    return f_ratio(n, s) * reverse(p[s], dim_type_a(s)) * p[n - s];
  };
  return reduce_terms(static_cast<std::size_t>(n - 1), term, options_.execution);
}

TruncSeries IcEngine::equivariant_series(const GroupType& group, int valid_through) {
  if (valid_through < 0) throw InvalidArgs("valid_through must be non-negative");
  return series_inverse(f_poly(group), valid_through) * poincare(group);
}

IntPoly orbit_point_count(SimpleType type, NodeSet removed) {
  const GroupType levi = levi_subtype(type, removed);
  IntPoly count = exact_div(f_poly(type), f_poly(levi));
  return (type.rank() - levi.rank()) % 2 == 0 ? count : -count;
}

Report check_antisymmetry(IcEngine& engine, SimpleType type) {
  const int d = dim_x(type);
  const IntPoly diff = engine.difference_poly(type);
  Report report{.check = "antisymmetry", .params = {{"type", type.name()}, {"d", d}}};
  const bool antisymmetric = reverse(diff, d) == -diff;
  const bool midpoint_zero = d % 2 != 0 || diff.coeff(d / 2) == 0;
  report.pass = antisymmetric && midpoint_zero;
  if (!report.pass) {
    report.witness["difference"] = json_integers(diff.dense());
    report.witness["antisymmetric"] = antisymmetric;
    report.witness["midpoint_zero"] = midpoint_zero;
  }
  return report;
}

Report check_subset_recursion(IcEngine& engine, SimpleType type, int valid_through) {
  const TruncSeries lhs = engine.equivariant_series(type, valid_through);
  TruncSeries rhs(IntPoly{}, valid_through);
  const std::uint32_t subsets = NodeSet::all(type.rank()).bits();
  for (std::uint32_t mask = 0; mask <= subsets; ++mask) {
    const GroupType levi = levi_subtype(type, NodeSet(mask));
    const IntPoly flipped = reverse(engine.poincare(levi), dim_x(levi));
    rhs = rhs + series_inverse(f_poly(levi), valid_through) * flipped;
  }
  Report report{.check = "subset_recursion",
                .params = {{"type", type.name()}, {"valid_through", valid_through}}};
  report.pass = lhs == rhs;
  if (!report.pass) {
    report.witness["lhs"] = json_integers(lhs.poly().dense());
    report.witness["rhs"] = json_integers(rhs.poly().dense());
  }
  return report;
}

Report check_composition_recursion(IcEngine& engine, int n, int valid_through) {
  if (n < 1 || n > 24) throw InvalidArgs("composition recursion check requires 1 <= n <= 24");
  std::vector<TruncSeries> part_series;
  for (int m = 0; m <= n; ++m) {
    const IntPoly flipped = m == 0 ? IntPoly{} : reverse(engine.poincare_type_a(m), dim_type_a(m));
    part_series.push_back(series_inverse(f_type_a(m), valid_through) * flipped);
  }
  TruncSeries rhs(IntPoly{}, valid_through);
  // Bit j of `cuts` set means a part ends after position j + 1.
  const std::uint32_t cut_masks = 1u << (n - 1);
  for (std::uint32_t cuts = 0; cuts < cut_masks; ++cuts) {
    TruncSeries product(IntPoly{1}, valid_through);
    int start = 0;
    for (int pos = 1; pos <= n; ++pos) {
      if (pos == n || (cuts >> (pos - 1) & 1u)) {
        product = product * part_series[pos - start];
        start = pos;
      }
    }
    rhs = rhs + product;
  }
  const GroupType group = n == 1 ? GroupType() : GroupType(SimpleType::make(Family::A, n - 1));
  const TruncSeries expected = engine.equivariant_series(group, valid_through);
  Report report{.check = "composition_recursion", .params = {{"n", n}, {"valid_through", valid_through}}};
  report.pass = expected == rhs;
  if (!report.pass) {
    report.witness["lhs"] = json_integers(expected.poly().dense());
    report.witness["rhs"] = json_integers(rhs.poly().dense());
  }
  return report;
}

Report check_fast_path(int n_max, Execution execution) {
  IcEngine fast({.execution = execution, .type_a_fast_path = true});
  IcEngine general({.execution = execution, .type_a_fast_path = false});
  Report report{.check = "fast_path_vs_subsets", .params = {{"n_max", n_max}}};
  for (int n = 1; n <= n_max; ++n) {
    const IntPoly a = fast.poincare_type_a(n);
    const IntPoly b = n == 1 ? IntPoly{1} : general.poincare(SimpleType::make(Family::A, n - 1));
    if (a != b) {
      report.pass = false;
      report.witness = {{"n", n}, {"fast", json_integers(a.dense())}, {"subsets", json_integers(b.dense())}};
      break;
    }
  }
  return report;
}

}  // namespace icvp

namespace icvp {

Report check_equivariant_coefficients(IcEngine& engine, int n) {
  if (n < 3) throw InvalidArgs("check_equivariant_coefficients requires n >= 3");
  const TruncSeries s = engine.equivariant_series(GroupType::of(Family::A, n - 1), 3);
  Report report{.check = "equivariant_coefficients", .params = {{"n", n}}};
  report.witness["t2"] = json_integer(s.coeff(2));
  report.witness["t3"] = json_integer(s.coeff(3));
  report.pass = s.coeff(2) == n - 1 && s.coeff(3) == n - 2;
  return report;
}

}  // namespace icvp
