#include "icvp/betti.hpp"

#include <bit>

#include "icvp/errors.hpp"

namespace icvp {

namespace {

// binom(m, k) for any integer m (falling factorial over k!).
Integer general_binomial(long m, long k) {
  if (k < 0) return 0;
  if (m >= 0) return binomial(m, k);
  Integer num = 1;
  for (long j = 0; j < k; ++j) num *= Integer(m - j);
  Integer den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Json expansion_json(const BinomialExpansion& e) { return json_integers(e.coeffs); }

}  // namespace

BettiTable::BettiTable(int i_max, int n_max, std::vector<std::vector<Integer>> by_n)
    : i_max_(i_max), n_max_(n_max), by_n_(std::move(by_n)) {
  if (static_cast<int>(by_n_.size()) != n_max_) throw InvalidArgs("BettiTable needs one row per n");
  for (const auto& row : by_n_) {
    if (static_cast<int>(row.size()) != i_max_ + 1) throw InvalidArgs("BettiTable rows must span 0..i_max");
  }
}

const Integer& BettiTable::at(int i, int n) const {
  if (i < 0 || i > i_max_ || n < 1 || n > n_max_) {
    throw InvalidArgs("c_" + std::to_string(i) + "(" + std::to_string(n) + ") outside the table");
  }
  return by_n_[n - 1][i];
}

BettiTable c_table(IcEngine& engine, int i_max, int n_max) {
  if (i_max < 1 || n_max < 1) throw InvalidArgs("c_table requires i_max, n_max >= 1");
  std::vector<std::vector<Integer>> rows;
  for (int n = 1; n <= n_max; ++n) {
    const IntPoly p = engine.poincare_type_a(n);
    std::vector<Integer> row;
    for (int i = 0; i <= i_max; ++i) row.push_back(p.coeff(i));
    rows.push_back(std::move(row));
  }
  return {i_max, n_max, std::move(rows)};
}

Integer c_coeff(IcEngine& engine, int i, int n) {
  if (i < 0) return 0;
  if (n == 0) return i == 0 ? 1 : 0;
  return engine.poincare_type_a(n).coeff(i);
}

Integer b_coeff(int i, int s, int n) {
  if (s < 1 || s > n - 1 || i < 0) {
    throw InvalidArgs("b_coeff requires i >= 0 and 1 <= s <= n-1, got i=" + std::to_string(i) +
                      " s=" + std::to_string(s) + " n=" + std::to_string(n));
  }
  return f_ratio(n, s).coeff(i);
}

Integer b_coeff_extended(int i, int s, int n) {
  if (i < 0) return 0;
  return (IntPoly{1, -1} * q_binomial(n, s)).coeff(i);
}

Report check_b_stability(int i, int s, int n_max) {
  const int start = std::max(i, 1) + s;
  if (i < 0 || s < 1 || n_max < start) {
    throw InvalidArgs("check_b_stability requires i >= 0, s >= 1 and n_max >= max(i,1)+s");
  }
  Report report{.check = "b_stability", .params = {{"i", i}, {"s", s}, {"n_max", n_max}}};
  const Integer stable = b_coeff(i, s, start);
  report.witness["stable_value"] = json_integer(stable);
  report.witness["from_n"] = start;
  for (int n = start + 1; n <= n_max; ++n) {
    const Integer value = b_coeff(i, s, n);
    if (value != stable) {
      report.pass = false;
      report.witness["n"] = n;
      report.witness["value"] = json_integer(value);
      break;
    }
  }
  return report;
}

Integer BinomialExpansion::evaluate(int n) const {
  Integer out = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += coeffs[k] * general_binomial(n - i, static_cast<long>(k));
  }
  return out;
}

BinomialExpansion binomial_coeffs(IcEngine& engine, int i) {
  if (i < 0) throw InvalidArgs("binomial_coeffs requires i >= 0");
  const int top = i / 2;
  BinomialExpansion out;
  out.i = i;
  std::vector<Rational> a;
  for (int m = 0; m <= top; ++m) {
    Rational rhs = c_coeff(engine, i, i + m);
    for (int k = 0; k < m; ++k) rhs -= a[k] * Rational(binomial(m, k));
    // Diagonal entries binom(m, m) are 1.
    a.push_back(rhs);
  }
  for (int k = 0; k <= top; ++k) {
    a[k].canonicalize();
    if (a[k].get_den() != 1) {
      throw NonIntegralCoefficient("a_{" + std::to_string(i) + "," + std::to_string(k) + "} = " + a[k].get_str());
    }
    out.coeffs.push_back(a[k].get_num());
  }
  const int last = i + top + 3;
  for (int n = i + top + 1; n <= last; ++n) {
    const Integer actual = c_coeff(engine, i, n);
    if (out.evaluate(n) != actual) {
      throw VerificationMismatch("binomial expansion of c_" + std::to_string(i) + " predicts " +
                                 out.evaluate(n).get_str() + " at n=" + std::to_string(n) + ", actual " +
                                 actual.get_str());
    }
  }
  out.verified_through = last;
  return out;
}

const std::map<int, std::vector<long>>& reference_expansions() {
  static const std::map<int, std::vector<long>> table = {
      {0, {1}},
      {1, {0}},
      {2, {0, 1}},
      {3, {0, 1}},
      {4, {0, 2, 1}},
      {5, {1, 4, 2}},
      {6, {6, 9, 5, 1}},
      {7, {15, 20, 12, 3}},
      {8, {50, 53, 30, 9, 1}},
      {9, {123, 125, 73, 25, 4}},
  };
  return table;
}

int expansion_holds_from(IcEngine& engine, const BinomialExpansion& expansion) {
  int from = expansion.i;
  while (from > 1 && expansion.evaluate(from - 1) == c_coeff(engine, expansion.i, from - 1)) --from;
  return std::max(from, 1);
}

Report check_reference_expansions(IcEngine& engine, int n_max) {
  Report report{.check = "reference_expansions", .params = {{"n_max", n_max}}};
  Json mismatches = Json::array();
  for (const auto& [i, listed] : reference_expansions()) {
    BinomialExpansion reference;
    reference.i = i;
    for (long a : listed) reference.coeffs.emplace_back(a);
    const BinomialExpansion computed = binomial_coeffs(engine, i);
    if (computed.coeffs != reference.coeffs) {
      mismatches.push_back({{"i", i}, {"computed", expansion_json(computed)}, {"listed", expansion_json(reference)}});
    }
    for (int n = std::max(i, 1); n <= n_max; ++n) {
      const Integer actual = c_coeff(engine, i, n);
      if (reference.evaluate(n) != actual) {
        mismatches.push_back({{"i", i},
                              {"n", n},
                              {"closed_form", json_integer(reference.evaluate(n))},
                              {"c", json_integer(actual)}});
      }
    }
  }
  report.pass = mismatches.empty();
  if (!report.pass) report.witness["mismatches"] = mismatches;
  return report;
}

Report check_conjecture_binomial(IcEngine& engine, int i_max) {
  Report report{.check = "binomial_nonnegativity", .params = {{"i_max", i_max}}};
  Json expansions = Json::object();
  Json holds_from = Json::object();
  Json negative = Json::array();
  for (int i = 0; i <= i_max; ++i) {
    const BinomialExpansion e = binomial_coeffs(engine, i);
    expansions[std::to_string(i)] = expansion_json(e);
    holds_from[std::to_string(i)] = expansion_holds_from(engine, e);
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
      if (sgn(e.coeffs[k]) < 0) {
        negative.push_back({{"i", i}, {"k", k}, {"a", json_integer(e.coeffs[k])}});
      }
    }
  }
  report.pass = negative.empty();
  report.witness["expansions"] = expansions;
  report.witness["holds_from_n"] = holds_from;
  if (!report.pass) report.witness["negative"] = negative;
  return report;
}

Report check_leading(IcEngine& engine, int i) {
  if (i < 2) throw InvalidArgs("check_leading requires i >= 2");
  const BinomialExpansion e = binomial_coeffs(engine, i);
  const int k = i / 2;
  const Integer expected = i % 2 == 0 ? Integer(1) : Integer((i - 1) / 2);
  Report report{.check = "leading_coefficient", .params = {{"i", i}, {"k", k}}};
  report.pass = e.coeffs[k] == expected;
  report.witness["expected"] = json_integer(expected);
  report.witness["actual"] = json_integer(e.coeffs[k]);
  return report;
}

Report verify_ci_recursion(IcEngine& engine, int i, int n) {
  if (i < 1 || n <= i) throw InvalidArgs("verify_ci_recursion requires n > i >= 1");
  Integer rhs = 0;
  for (int s = 1; s <= i; ++s) {
    const int d_s = dim_type_a(s);
    for (int p = 0; p <= i; ++p) {
      const Integer b = b_coeff(p, s, n);
      if (sgn(b) == 0) continue;
      for (int q = 0; p + q <= i; ++q) {
        const int r = i - p - q;
        rhs += b * c_coeff(engine, d_s - q, s) * c_coeff(engine, r, n - s);
      }
    }
  }
  const Integer lhs = c_coeff(engine, i, n);
  Report report{.check = "ci_recursion", .params = {{"i", i}, {"n", n}}};
  report.pass = lhs == rhs;
  report.witness["lhs"] = json_integer(lhs);
  report.witness["rhs"] = json_integer(rhs);
  return report;
}

namespace {

void check_composition_n(int n) {
  if (n < 1 || n > 22) throw InvalidArgs("composition enumeration requires 1 <= n <= 22");
}

// Adds the contributions of the composition whose cut set is `cuts`.
inline void accumulate(int n, std::uint32_t cuts, std::int64_t& alternating, std::int64_t& c2, std::int64_t& c3) {
  const int r = std::popcount(cuts) + 1;
  int big_parts = 0;
  int start = 0;
  for (int pos = 1; pos <= n; ++pos) {
    if (pos == n || (cuts >> (pos - 1) & 1u)) {
      if (pos - start > 1) ++big_parts;
      start = pos;
    }
  }
  const std::int64_t sign = r % 2 == 0 ? 1 : -1;
  alternating += -sign * (r - 1);
  if (r >= 2) c2 += sign * (n - r - 1);
  c3 += sign * (r - big_parts);
}

}  // namespace

CompositionSums composition_sums_serial(int n) {
  check_composition_n(n);
  std::int64_t alternating = 0, c2 = 0, c3 = 0;
  const std::uint32_t count = 1u << (n - 1);
  for (std::uint32_t cuts = 0; cuts < count; ++cuts) accumulate(n, cuts, alternating, c2, c3);
  return {alternating, c2, c3};
}

CompositionSums composition_sums_omp(int n) {
  check_composition_n(n);
  std::int64_t alternating = 0, c2 = 0, c3 = 0;
  const std::int64_t count = std::int64_t{1} << (n - 1);
#pragma omp parallel for reduction(+ : alternating, c2, c3) schedule(static)
  for (std::int64_t cuts = 0; cuts < count; ++cuts) {
    accumulate(n, static_cast<std::uint32_t>(cuts), alternating, c2, c3);
  }
  return {alternating, c2, c3};
}

Report composition_identity_checks(int n, Execution execution) {
  if (n < 3 || n > 22) throw InvalidArgs("composition_identity_checks requires 3 <= n <= 22");
  const CompositionSums sums =
      execution == Execution::parallel ? composition_sums_omp(n) : composition_sums_serial(n);
  Integer closed_form = 0;
  for (int k = 0; k <= n - 1; ++k) closed_form += Integer(k % 2 == 0 ? k : -k) * binomial(n - 1, k);

  Report report{.check = "composition_identities", .params = {{"n", n}, {"c3_applies", n >= 4}}};
  report.witness["alternating_sum"] = sums.alternating_parts;
  report.witness["alternating_sum_closed_form"] = json_integer(closed_form);
  report.witness["c2_recursion_sum"] = sums.c2_recursion;
  report.witness["c3_sum"] = sums.c3_identity;
  report.pass = sums.alternating_parts == 0 && closed_form == 0 && sums.c2_recursion == n - 2 &&
                (n < 4 || sums.c3_identity == 0);
  return report;
}

}  // namespace icvp
