#include "icvp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>

#include "icvp/betti.hpp"
#include "icvp/errors.hpp"
#include "icvp/format.hpp"
#include "icvp/genfun.hpp"
#include "icvp/ic_core.hpp"

namespace icvp {

namespace {

struct Options {
  std::string cache_path;
  bool serial = false;

  std::string spec;
  std::string format = "plain";
  std::string suite = "all";
  std::optional<int> n_max;
  std::optional<int> t_max;
  std::optional<int> u_max;
  std::optional<int> i_max;
  std::optional<int> ci;
  bool plog = false;
};

PolyRecord record_for(IcEngine& engine, const GroupType& group) {
  return {.label = "P_{" + group.key() + "}",
          .group = group.key(),
          .d = dim_x(group),
          .poly = engine.poincare(group)};
}

PolyRecord record_for_n(IcEngine& engine, int n) {
  const GroupType group = n == 1 ? GroupType() : GroupType::of(Family::A, n - 1);
  PolyRecord r = record_for(engine, group);
  r.label = "P_{" + std::to_string(n) + "}";
  r.n = n;
  return r;
}

void emit(const std::vector<PolyRecord>& records, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::json:
      for (const auto& r : records) out << json_record(r) << "\n";
      break;
    case OutputFormat::csv:
      out << csv_records(records);
      break;
    case OutputFormat::latex:
      out << latex_records(records);
      break;
    case OutputFormat::plain:
      for (const auto& r : records) {
        if (records.size() > 1) out << r.label << " = ";
        out << r.poly.to_string() << "\n";
      }
      break;
  }
}

int positive(const std::optional<int>& value, int fallback, const char* flag) {
  const int v = value.value_or(fallback);
  if (v < 1) throw InvalidArgs(std::string(flag) + " must be positive");
  return v;
}

std::vector<Report> suite_functional(IcEngine& engine, const Options& o) {
  return {check_functional_equation(engine, positive(o.t_max, 40, "--tmax"), positive(o.u_max, 12, "--umax"))};
}

std::vector<Report> suite_plog(IcEngine& engine, const Options& o) {
  const int t = positive(o.t_max, 30, "--tmax");
  const int u = positive(o.u_max, 20, "--umax");
  return {check_plog_roundtrip(engine, t, u), check_plog_conjectures(engine, t, u)};
}

std::vector<Report> suite_betti(IcEngine& engine, const Options& o) {
  const int i_max = positive(o.i_max, 9, "--imax");
  const int n_max = positive(o.n_max, 21, "--nmax");
  std::vector<Report> reports{check_conjecture_binomial(engine, i_max), check_reference_expansions(engine, n_max)};
  for (int i = 2; i <= std::max(i_max, 12); ++i) reports.push_back(check_leading(engine, i));
  for (int i = 0; i <= 10; ++i) {
    for (int s = 1; s <= 6; ++s) reports.push_back(check_b_stability(i, s, 20));
  }
  for (int i = 1; i <= 8; ++i) {
    for (int n = i + 1; n <= 14; ++n) reports.push_back(verify_ci_recursion(engine, i, n));
  }
  return reports;
}

std::vector<Report> suite_identities(IcEngine& engine, const Options& o) {
  const int n_max = positive(o.n_max, 18, "--nmax");
  if (n_max > 22) throw InvalidArgs("--nmax for identities is at most 22");
  std::vector<Report> reports;
  for (int n = 4; n <= n_max; ++n) reports.push_back(composition_identity_checks(n, engine.options().execution));
  return reports;
}

std::vector<SimpleType> simple_types_up_to_rank(int rank) {
  std::vector<SimpleType> types;
  for (int r = 1; r <= rank; ++r) types.push_back(SimpleType::make(Family::A, r));
  for (int r = 2; r <= rank; ++r) types.push_back(SimpleType::make(Family::B, r));
  for (int r = 3; r <= rank; ++r) types.push_back(SimpleType::make(Family::C, r));
  for (int r = 4; r <= rank; ++r) types.push_back(SimpleType::make(Family::D, r));
  if (rank >= 2) types.push_back(SimpleType::make(Family::G, 2));
  if (rank >= 4) types.push_back(SimpleType::make(Family::F, 4));
  for (int r = 6; r <= std::min(rank, 8); ++r) types.push_back(SimpleType::make(Family::E, r));
  return types;
}

std::vector<Report> suite_cross(IcEngine& engine, const Options& o) {
  const int n_max = positive(o.n_max, 8, "--nmax");
  if (n_max > 16) throw InvalidArgs("--nmax for cross is at most 16");
  std::vector<Report> reports{check_fast_path(n_max, engine.options().execution)};
  auto types = simple_types_up_to_rank(6);
  for (int r = 7; r <= 11; ++r) types.push_back(SimpleType::make(Family::A, r));
  for (const auto& type : types) reports.push_back(check_antisymmetry(engine, type));
  for (const auto& type : simple_types_up_to_rank(4)) reports.push_back(check_subset_recursion(engine, type, 30));
  for (int n = 1; n <= n_max; ++n) reports.push_back(check_composition_recursion(engine, n, 30));
  for (int n = 3; n <= 12; ++n) reports.push_back(check_equivariant_coefficients(engine, n));
  return reports;
}

int run_verify(IcEngine& engine, const Options& o, std::ostream& out) {
  using Suite = std::function<std::vector<Report>(IcEngine&, const Options&)>;
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"cross", suite_cross},
      {"betti", suite_betti},
      {"identities", suite_identities},
      {"functional", suite_functional},
      {"plog", suite_plog},
  };
  bool pass = true;
  for (const auto& [name, suite] : suites) {
    if (o.suite != "all" && o.suite != name) continue;
    for (const auto& report : suite(engine, o)) {
      out << report.to_json().dump() << "\n";
      pass = pass && report.pass;
    }
  }
  return pass ? kExitPass : kExitFail;
}

int run_betti(IcEngine& engine, const Options& o, std::ostream& out) {
  if (o.ci) {
    const int i = *o.ci;
    if (i < 0) throw InvalidArgs("--ci must be non-negative");
    const int n_max = positive(o.n_max, 20, "--nmax");
    std::vector<std::string> values;
    for (int n = std::max(i, 1); n <= n_max; ++n) values.push_back(c_coeff(engine, i, n).get_str());
    for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << values[k];
    out << "\n";
    return kExitPass;
  }
  const int i_max = o.i_max.value_or(9);
  if (i_max < 0) throw InvalidArgs("--imax must be non-negative");
  for (int i = 0; i <= i_max; ++i) {
    const BinomialExpansion e = binomial_coeffs(engine, i);
    Json line = {{"i", i},
                 {"a", json_integers(e.coeffs)},
                 {"verified_through", e.verified_through},
                 {"holds_from_n", expansion_holds_from(engine, e)}};
    out << line.dump() << "\n";
  }
  return kExitPass;
}

int run_genfun(IcEngine& engine, const Options& o, std::ostream& out) {
  const int t = positive(o.t_max, 20, "--tmax");
  const int u = positive(o.u_max, 8, "--umax");
  const BiSeries s = o.plog ? plog(engine, t, u) : psi(engine, t, u);
  if (o.format == "json") {
    Json rows = Json::array();
    for (int i = 0; i <= t; ++i) {
      Json row = Json::array();
      for (int n = 0; n <= u; ++n) row.push_back(json_integer(s.integer_at(i, n)));
      rows.push_back(row);
    }
    Json doc = {{"series", o.plog ? "plog" : "psi"}, {"t_cap", t}, {"u_cap", u}, {"rows", rows}};
    out << doc.dump() << "\n";
  } else if (o.format == "csv") {
    out << "i";
    for (int n = 0; n <= u; ++n) out << "," << n;
    out << "\n";
    for (int i = 0; i <= t; ++i) {
      out << i;
      for (int n = 0; n <= u; ++n) out << "," << s.integer_at(i, n).get_str();
      out << "\n";
    }
  } else {
    throw InvalidArgs("genfun supports --format csv or json");
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Intersection cohomology Poincare polynomials of Vinberg-Popov varieties", "icvp"};
  app.require_subcommand(1);
  app.add_option("--cache", o.cache_path, "Persistent memo cache file (default: $ICVP_CACHE)");
  app.add_flag("--serial", o.serial, "Disable OpenMP kernels");
  const std::vector<std::string> formats{"json", "csv", "latex", "plain"};

  auto* poincare = app.add_subcommand("poincare", "Print P_G(t) for a group such as A4, G2 or A2+A2+B3");
  poincare->add_option("spec", o.spec, "Group descriptor")->required();
  poincare->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* table = app.add_subcommand("table", "Print P_1 .. P_nmax (type A)");
  table->add_option("--nmax", o.n_max)->required();
  table->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run a verification suite; one JSON report per line");
  verify->add_option("suite", o.suite)
      ->check(CLI::IsMember({"all", "functional", "plog", "betti", "identities", "cross"}));
  verify->add_option("--nmax", o.n_max);
  verify->add_option("--tmax", o.t_max);
  verify->add_option("--umax", o.u_max);
  verify->add_option("--imax", o.i_max);

  auto* betti = app.add_subcommand("betti", "Binomial expansions of c_i(n), or c_i(n) itself with --ci");
  betti->add_option("--imax", o.i_max);
  betti->add_option("--nmax", o.n_max);
  betti->add_option("--ci", o.ci);

  auto* genfun = app.add_subcommand("genfun", "Coefficients of Psi(t,u), or of its plethystic logarithm");
  genfun->add_flag("--plog", o.plog);
  genfun->add_option("--tmax", o.t_max);
  genfun->add_option("--umax", o.u_max);
  genfun->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (genfun->parsed() && genfun->count("--format") == 0) o.format = "csv";

  if (o.cache_path.empty()) {
    if (const char* env = std::getenv("ICVP_CACHE")) o.cache_path = env;
  }

  try {
    IcEngine engine(EngineOptions{.execution = o.serial ? Execution::serial : Execution::parallel});
    if (!o.cache_path.empty() && std::filesystem::exists(o.cache_path)) engine.cache().load(o.cache_path);

    int code = kExitPass;
    if (poincare->parsed()) {
      emit({record_for(engine, GroupType::parse(o.spec))}, parse_format(o.format), out);
    } else if (table->parsed()) {
      const int n_max = positive(o.n_max, 1, "--nmax");
      std::vector<PolyRecord> records;
      for (int n = 1; n <= n_max; ++n) records.push_back(record_for_n(engine, n));
      emit(records, parse_format(o.format), out);
    } else if (verify->parsed()) {
      code = run_verify(engine, o, out);
    } else if (betti->parsed()) {
      code = run_betti(engine, o, out);
    } else if (genfun->parsed()) {
      code = run_genfun(engine, o, out);
    }

    if (!o.cache_path.empty()) engine.cache().save(o.cache_path);
    return code;
  } catch (const ParseError& e) {
    err << "icvp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgs& e) {
    err << "icvp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "icvp: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace icvp
