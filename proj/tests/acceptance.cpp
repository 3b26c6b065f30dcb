#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "published_table.hpp"
#include "icvp/betti.hpp"
#include "icvp/genfun.hpp"
#include "icvp/ic_core.hpp"

using namespace icvp;

namespace {

// Every comparison below is exact; the only tolerances are wall-clock budgets.
constexpr double kTableBudgetSeconds = 10.0;
constexpr double kFunctionalBudgetSeconds = 60.0;
constexpr double kPlogBudgetSeconds = 300.0;
constexpr double kCompositionBudgetSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool condition, const std::string& what) {
  if (!condition && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

IntPoly from_longs(const std::vector<long>& coeffs) {
  std::vector<Integer> dense(coeffs.begin(), coeffs.end());
  return IntPoly(std::span<const Integer>(dense));
}

std::vector<SimpleType> simple_types_up_to_rank(int rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= rank; ++r) out.push_back(SimpleType::make(Family::A, r));
  for (int r = 2; r <= rank; ++r) out.push_back(SimpleType::make(Family::B, r));
  for (int r = 2; r <= rank; ++r) out.push_back(SimpleType::make(Family::C, r));
  for (int r = 4; r <= rank; ++r) out.push_back(SimpleType::make(Family::D, r));
  if (rank >= 6) out.push_back(SimpleType::make(Family::E, 6));
  if (rank >= 4) out.push_back(SimpleType::make(Family::F, 4));
  out.push_back(SimpleType::make(Family::G, 2));
  return out;
}

void check_report(Outcome& o, const Report& r) { require(o, r.pass, r.to_json().dump()); }

Outcome published_table_golden(IcEngine& engine) {
  Outcome o;
  const auto& table = published_polynomials();
  for (std::size_t k = 0; k < table.size(); ++k) {
    require(o, engine.poincare_type_a(static_cast<int>(k) + 1) == from_longs(table[k]),
            "P_" + std::to_string(k + 1) + " differs");
  }
  return o;
}

Outcome worked_examples(IcEngine& engine) {
  Outcome o;
  require(o, engine.poincare_type_a(2) == IntPoly({1}), "P_2");
  require(o, engine.poincare_type_a(3) == IntPoly({1, 0, 1}), "P_3");
  require(o, engine.poincare_type_a(4) == IntPoly({1, 0, 2, 1}), "P_4");
  require(o, engine.poincare(SimpleType::make(Family::G, 2)) == IntPoly({1, 0, 1}), "G2");
  require(o, engine.difference_poly(SimpleType::make(Family::A, 1)) == IntPoly({1, 0, -1}), "D for SL2");
  require(o, engine.difference_poly(SimpleType::make(Family::A, 3)) == IntPoly({1, 0, 2, 1, 0, 0, -1, -2, 0, -1}),
          "D for SL4");
  require(o, engine.difference_poly(SimpleType::make(Family::G, 2)) == IntPoly({1, 0, 1, 0, 0, 0, -1, 0, -1}),
          "D for G2");
  return o;
}

Outcome cross_oracle(IcEngine&) {
  Outcome o;
  check_report(o, check_fast_path(9, Execution::parallel));
  return o;
}

Outcome antisymmetry(IcEngine& engine) {
  Outcome o;
  auto types = simple_types_up_to_rank(6);
  for (int r = 7; r <= 11; ++r) types.push_back(SimpleType::make(Family::A, r));
  for (const auto& t : types) check_report(o, check_antisymmetry(engine, t));
  return o;
}

Outcome functional_equation(IcEngine& engine) {
  Outcome o;
  check_report(o, check_functional_equation(engine, 40, 12));
  return o;
}

Outcome betti_closed_forms(IcEngine& engine) {
  Outcome o;
  check_report(o, check_reference_expansions(engine, 21));
  for (int i = 2; i <= 12; ++i) check_report(o, check_leading(engine, i));
  return o;
}

Outcome gaussian_stability(IcEngine&) {
  Outcome o;
  for (int i = 0; i <= 10; ++i) {
    for (int s = 1; s <= 6; ++s) check_report(o, check_b_stability(i, s, 20));
  }
  return o;
}

Outcome ci_recursion(IcEngine& engine) {
  Outcome o;
  for (int i = 1; i <= 8; ++i) {
    for (int n = i + 1; n <= 14; ++n) check_report(o, verify_ci_recursion(engine, i, n));
  }
  return o;
}

Outcome plog_integrality(IcEngine& engine) {
  Outcome o;
  const BiSeries e = plog(engine, 30, 20);  // throws NonIntegralPLog on a fraction
  for (int n = 0; n <= 20; ++n) {
    for (int i = 0; i <= 30; ++i) {
      require(o, sgn(e.at(i, n)) >= 0, "e(" + std::to_string(i) + "," + std::to_string(n) + ") < 0");
    }
  }
  require(o, plethystic_exp(e) == psi(engine, 30, 20), "re-exponentiation differs from Psi");
  return o;
}

Outcome composition_identities(IcEngine&) {
  Outcome o;
  for (int n = 4; n <= 18; ++n) check_report(o, composition_identity_checks(n));
  return o;
}

Outcome equivariant_coefficients(IcEngine& engine) {
  Outcome o;
  for (int n = 3; n <= 12; ++n) check_report(o, check_equivariant_coefficients(engine, n));
  return o;
}

Outcome exceptional_feasibility(IcEngine& engine) {
  Outcome o;
  std::vector<SimpleType> types{SimpleType::make(Family::E, 6), SimpleType::make(Family::E, 7),
                                SimpleType::make(Family::F, 4)};
  for (int r = 2; r <= 6; ++r) {
    types.push_back(SimpleType::make(Family::B, r));
    types.push_back(SimpleType::make(Family::C, r));
  }
  for (int r = 4; r <= 6; ++r) types.push_back(SimpleType::make(Family::D, r));
  for (const auto& t : types) {
    const IntPoly p = engine.poincare(t);
    require(o, p.coeff(0) == 1, t.name() + " constant term");
    require(o, 2 * p.degree() < dim_x(t), t.name() + " degree bound");
    check_report(o, check_antisymmetry(engine, t));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 for no budget
  std::function<Outcome(IcEngine&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "published table P_1..P_13", kTableBudgetSeconds, published_table_golden},
      {2, "worked examples P_2, P_3, P_4, G2 and difference polynomials", 0, worked_examples},
      {3, "subset recursion equals type-A fast path, n <= 9", 0, cross_oracle},
      {4, "antisymmetry and midpoint, rank <= 6 and A_n, n <= 12", 0, antisymmetry},
      {5, "functional equation, T=40 N=12", kFunctionalBudgetSeconds, functional_equation},
      {6, "Betti closed forms i <= 9, n <= 21; leading terms i <= 12", 0, betti_closed_forms},
      {7, "Gaussian coefficient stability, i <= 10, s <= 6, n <= 20", 0, gaussian_stability},
      {8, "c_i recursion, 1 <= i <= 8, i < n <= 14", 0, ci_recursion},
      {9, "PLog integrality, non-negativity, round trip, T=30 N=20", kPlogBudgetSeconds, plog_integrality},
      {10, "composition identities, 4 <= n <= 18", kCompositionBudgetSeconds, composition_identities},
      {11, "equivariant coefficients [t^2] = n-1, [t^3] = n-2, 3 <= n <= 12", 0, equivariant_coefficients},
      {12, "E6, E7, F4 and B/C/D rank <= 6 terminate and satisfy invariants", 0, exceptional_feasibility},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    IcEngine engine;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome = c.run(engine);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome = {false, "exceeded budget of " + std::to_string(c.budget_seconds) + " s"};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %2d %s (%.2f s)%s%s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                outcome.pass ? "" : ": ", outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
