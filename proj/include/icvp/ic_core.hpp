#ifndef ICVP_IC_CORE_HPP
#define ICVP_IC_CORE_HPP

#include <atomic>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "icvp/parallel.hpp"
#include "icvp/poly.hpp"
#include "icvp/report.hpp"
#include "icvp/root_data.hpp"

namespace icvp {

// Canonical group key -> Poincare polynomial. Safe for concurrent use;
// concurrent inserts of one key carry equal values, so the last writer wins.
class MemoCache {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
  };

  static constexpr const char* kFileHeader = "icvp-cache v1";

  MemoCache() = default;
  MemoCache(const MemoCache&) = delete;
  MemoCache& operator=(const MemoCache&) = delete;

  std::optional<IntPoly> find(const std::string& key) const;
  void insert(const std::string& key, IntPoly value);
  std::size_t size() const;
  Stats stats() const;
  std::vector<std::pair<std::string, IntPoly>> snapshot() const;

  // Line-oriented text: the header line, then "key: c0,c1,c2,...".
  // save() writes a temporary file and renames it over `path`.
  void save(const std::filesystem::path& path) const;
  // Merges entries from `path`; throws InternalConsistency on a malformed file.
  void load(const std::filesystem::path& path);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, IntPoly> entries_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

struct EngineOptions {
  Execution execution = Execution::parallel;
  // Route type A through the O(n) recursion over s instead of 2^(n-1) subsets.
  bool type_a_fast_path = true;
};

// Computes P_G(t), the intersection cohomology Poincare polynomial of the
// Vinberg-Popov variety of G, by the recursion over subsets of simple roots:
//
//   P_G(t) - t^d P_G(1/t) = sum_{S nonempty} f_G/f_{G_S} * t^{d_S} P_{G_S}(1/t)
//
// keeping the terms of degree below d/2. Results are memoized per simple
// factor; products use multiplicativity over factors.
class IcEngine {
 public:
  explicit IcEngine(EngineOptions options = {});

  IntPoly poincare(const GroupType& group);
  IntPoly poincare(SimpleType type);

  // The signed sum over nonempty subsets; always uses the subset recursion
  // at the top level.
  IntPoly difference_poly(SimpleType type);
  // P_n := P for A_{n-1}, by the two-factor recursion over s = 1..n-1.
  IntPoly poincare_type_a(int n);
  IntPoly difference_poly_type_a(int n);

  // P_G / f_G through t^valid_through.
  TruncSeries equivariant_series(const GroupType& group, int valid_through);

  MemoCache& cache() noexcept { return cache_; }
  const EngineOptions& options() const noexcept { return options_; }

 private:
  IntPoly poincare_simple_uncached(SimpleType type);

  EngineOptions options_;
  MemoCache cache_;
};

// Truncation degree for P_G: the largest integer strictly below d/2.
int poincare_degree_bound(int d);

// d for A_{n-1}: n(n+1)/2 - 1.
int dim_type_a(int n);

// Polynomial in q counting F_q-points of the orbit indexed by `removed`:
// (-1)^(rk G - rk G_S) f_G(q) / f_{G_S}(q).
IntPoly orbit_point_count(SimpleType type, NodeSet removed);

// D(t) = -t^d D(1/t) and, for even d, [t^{d/2}] D = 0.
Report check_antisymmetry(IcEngine& engine, SimpleType type);

// Both sides of P_G/f_G = sum over all S (including S = empty) of
// t^{d_S} P_{G_S}(1/t) / f_{G_S}, compared as series through t^valid_through.
Report check_subset_recursion(IcEngine& engine, SimpleType type, int valid_through);

// The same identity for A_{n-1} written as a sum over compositions of n,
// products of t^{d_i} P_i(1/t) / f_i over the parts.
Report check_composition_recursion(IcEngine& engine, int n, int valid_through);

// [t^2] P_n/f_n = n - 1 and [t^3] P_n/f_n = n - 2, for n >= 3.
Report check_equivariant_coefficients(IcEngine& engine, int n);

// Type-A fast path versus the subset recursion, n = 1..n_max.
Report check_fast_path(int n_max, Execution execution);

}  // namespace icvp

#endif  // ICVP_IC_CORE_HPP
