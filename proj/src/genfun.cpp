#include "icvp/genfun.hpp"

#include <algorithm>

#include "icvp/errors.hpp"
#include "icvp/parallel.hpp"

namespace icvp {

BiSeries::BiSeries(int t_cap, int u_cap) : t_cap_(t_cap), u_cap_(u_cap) {
  if (t_cap < 0 || u_cap < 0) throw InvalidArgs("BiSeries caps must be non-negative");
  cells_.resize(static_cast<std::size_t>(t_cap + 1) * static_cast<std::size_t>(u_cap + 1));
}

std::size_t BiSeries::index(int i, int n) const {
  if (i < 0 || i > t_cap_ || n < 0 || n > u_cap_) {
    throw InvalidArgs("coefficient (" + std::to_string(i) + "," + std::to_string(n) + ") outside caps (" +
                      std::to_string(t_cap_) + "," + std::to_string(u_cap_) + ")");
  }
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(t_cap_ + 1) + static_cast<std::size_t>(i);
}

bool BiSeries::is_integral() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Integer BiSeries::integer_at(int i, int n) const {
  const Rational& c = at(i, n);
  if (c.get_den() != 1) {
    throw NonIntegralCoefficient("coefficient of t^" + std::to_string(i) + " u^" + std::to_string(n) + " is " +
                                 c.get_str());
  }
  return c.get_num();
}

TruncSeries BiSeries::u_slice(int n) const {
  std::vector<Integer> dense;
  for (int i = 0; i <= t_cap_; ++i) dense.push_back(integer_at(i, n));
  return {IntPoly(std::span<const Integer>(dense)), t_cap_};
}

void BiSeries::set_u_slice(int n, const IntPoly& p) {
  for (int i = 0; i <= t_cap_; ++i) at(i, n) = Rational(p.coeff(i));
}

BiSeries BiSeries::negate_u() const {
  BiSeries out = *this;
  for (int n = 1; n <= u_cap_; n += 2) {
    for (int i = 0; i <= t_cap_; ++i) out.at(i, n) = -at(i, n);
  }
  return out;
}

BiSeries BiSeries::dilate(int k) const {
  if (k < 1) throw InvalidArgs("dilation factor must be positive");
  BiSeries out(t_cap_, u_cap_);
  for (int n = 0; n * k <= u_cap_; ++n) {
    for (int i = 0; i * k <= t_cap_; ++i) out.at(i * k, n * k) = at(i, n);
  }
  return out;
}

BiSeries BiSeries::truncated(int t_cap, int u_cap) const {
  if (t_cap > t_cap_ || u_cap > u_cap_) throw InsufficientPrecision("cannot extend a truncated series");
  BiSeries out(t_cap, u_cap);
  for (int n = 0; n <= u_cap; ++n) {
    for (int i = 0; i <= t_cap; ++i) out.at(i, n) = at(i, n);
  }
  return out;
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
  if (other.t_cap_ != t_cap_ || other.u_cap_ != u_cap_) throw InvalidArgs("BiSeries caps differ");
  for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += other.cells_[k];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other) {
  if (other.t_cap_ != t_cap_ || other.u_cap_ != u_cap_) throw InvalidArgs("BiSeries caps differ");
  for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] -= other.cells_[k];
  return *this;
}

BiSeries& BiSeries::operator*=(const Rational& scalar) {
  for (auto& c : cells_) c *= scalar;
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  const int t_cap = std::min(a.t_cap_, b.t_cap_);
  const int u_cap = std::min(a.u_cap_, b.u_cap_);
  struct Cell {
    int i;
    int n;
    const Rational* value;
  };
  std::vector<Cell> right;
  for (int n = 0; n <= u_cap; ++n) {
    for (int i = 0; i <= t_cap; ++i) {
      if (sgn(b.at(i, n)) != 0) right.push_back({i, n, &b.at(i, n)});
    }
  }
  BiSeries out(t_cap, u_cap);
  for (int n = 0; n <= u_cap; ++n) {
    for (int i = 0; i <= t_cap; ++i) {
      const Rational& x = a.at(i, n);
      if (sgn(x) == 0) continue;
      for (const Cell& c : right) {
        if (i + c.i > t_cap || n + c.n > u_cap) continue;
        out.at(i + c.i, n + c.n) += x * *c.value;
      }
    }
  }
  return out;
}

namespace {

void require_caps(int t_cap, int u_cap) {
  if (t_cap < 0 || u_cap < 0) throw InvalidArgs("caps must be non-negative");
}

std::vector<IntPoly> poincare_up_to(IcEngine& engine, int u_cap) {
  std::vector<IntPoly> p(static_cast<std::size_t>(u_cap) + 1);
  for (int n = 1; n <= u_cap; ++n) p[n] = engine.poincare_type_a(n);
  return p;
}

}  // namespace

BiSeries psi(IcEngine& engine, int t_cap, int u_cap) {
  require_caps(t_cap, u_cap);
  const auto p = poincare_up_to(engine, u_cap);
  std::vector<IntPoly> slices(p.size());
  for_each_index(
      p.size() - 1,
      [&](std::size_t k) {
        const int n = static_cast<int>(k) + 1;
        slices[n] = (series_inverse(f_type_a(n), t_cap) * p[n]).poly();
      },
      engine.options().execution);
  BiSeries out(t_cap, u_cap);
  out.at(0, 0) = 1;
  for (int n = 1; n <= u_cap; ++n) out.set_u_slice(n, slices[n]);
  return out;
}

BiSeries psi_flipped(IcEngine& engine, int t_cap, int u_cap) {
  require_caps(t_cap, u_cap);
  const auto p = poincare_up_to(engine, u_cap);
  std::vector<IntPoly> slices(p.size());
  for_each_index(
      p.size() - 1,
      [&](std::size_t k) {
        const int m = static_cast<int>(k) + 1;
        IntPoly s = (series_inverse(f_type_a(m), t_cap) * reverse(p[m], dim_type_a(m))).poly();
        slices[m] = m % 2 == 1 ? s : -s;
      },
      engine.options().execution);
  BiSeries out(t_cap, u_cap);
  out.at(0, 0) = 1;
  for (int m = 1; m <= u_cap; ++m) out.set_u_slice(m, slices[m]);
  return out;
}

Report check_functional_equation(IcEngine& engine, int t_cap, int u_cap) {
  const BiSeries product = psi_flipped(engine, t_cap, u_cap) * psi(engine, t_cap, u_cap).negate_u();
  Report report{.check = "functional_equation", .params = {{"t_cap", t_cap}, {"u_cap", u_cap}}};
  Json offending = Json::array();
  for (int n = 0; n <= u_cap; ++n) {
    for (int i = 0; i <= t_cap; ++i) {
      const Rational expected = (i == 0 && n == 0) ? 1 : 0;
      if (product.at(i, n) != expected && offending.size() < 10) {
        offending.push_back({{"i", i}, {"n", n}, {"value", product.at(i, n).get_str()}});
      }
    }
  }
  report.pass = offending.empty();
  if (!report.pass) report.witness["coefficients"] = offending;
  return report;
}

BiSeries log_series(const BiSeries& s) {
  if (s.at(0, 0) != 1) throw InvalidArgs("log_series needs constant term 1");
  BiSeries x = s;
  x.at(0, 0) = 0;
  BiSeries out = x;
  BiSeries power = x;
  const int max_power = s.t_cap() + s.u_cap();
  for (int j = 2; j <= max_power; ++j) {
    power = power * x;
    if (power == BiSeries(s.t_cap(), s.u_cap())) break;
    BiSeries term = power;
    term *= Rational(j % 2 == 0 ? -1 : 1, j);
    out += term;
  }
  return out;
}

int mobius(int k) {
  if (k < 1) throw InvalidArgs("mobius requires k >= 1");
  int result = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    result = -result;
  }
  if (k > 1) result = -result;
  return result;
}

BiSeries plog(IcEngine& engine, int t_cap, int u_cap) {
  if (t_cap < 1 || u_cap < 1) throw InvalidArgs("plog requires caps >= 1");
  const BiSeries log_psi = log_series(psi(engine, t_cap, u_cap));
  BiSeries out(t_cap, u_cap);
  for (int k = 1; k <= std::max(t_cap, u_cap); ++k) {
    const int mu = mobius(k);
    if (mu == 0) continue;
    BiSeries term = log_psi.dilate(k);
    term *= Rational(mu, k);
    out += term;
  }
  for (int n = 0; n <= u_cap; ++n) {
    for (int i = 0; i <= t_cap; ++i) {
      if (out.at(i, n).get_den() != 1) {
        throw NonIntegralPLog("e(" + std::to_string(i) + "," + std::to_string(n) + ") = " + out.at(i, n).get_str());
      }
    }
  }
  return out;
}

BiSeries plethystic_exp(const BiSeries& exponents) {
  const int t_cap = exponents.t_cap();
  const int u_cap = exponents.u_cap();
  BiSeries out(t_cap, u_cap);
  out.at(0, 0) = 1;
  for (int n = 0; n <= u_cap; ++n) {
    for (int i = 0; i <= t_cap; ++i) {
      if (i == 0 && n == 0) continue;
      const Integer e = exponents.integer_at(i, n);
      if (sgn(e) == 0) continue;
      // (1 - x)^(-e) = sum_k binom(e + k - 1, k) x^k with x = t^i u^n.
      std::vector<Integer> c{1};
      while (true) {
        const int k = static_cast<int>(c.size());
        if ((i > 0 && i * k > t_cap) || (n > 0 && n * k > u_cap)) break;
        Integer next = c.back() * (e + k - 1);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k));
        c.push_back(next);
      }
      BiSeries next(t_cap, u_cap);
      for (int b = 0; b <= u_cap; ++b) {
        for (int a = 0; a <= t_cap; ++a) {
          const Rational& v = out.at(a, b);
          if (sgn(v) == 0) continue;
          for (std::size_t k = 0; k < c.size(); ++k) {
            const int ai = a + i * static_cast<int>(k);
            const int bn = b + n * static_cast<int>(k);
            if (ai > t_cap || bn > u_cap) break;
            next.at(ai, bn) += v * Rational(c[k]);
          }
        }
      }
      out = std::move(next);
    }
  }
  return out;
}

std::vector<Integer> q_low_coefficients(const BiSeries& exponents, int n) {
  if (n < 2 || n > exponents.u_cap()) throw InvalidArgs("q_low_coefficients requires 2 <= n <= u_cap");
  const TruncSeries r = exponents.u_slice(n) * f_type_a(n);
  if (r.valid_through() < 2) return {};
  if (sgn(r.coeff(0)) != 0 || sgn(r.coeff(1)) != 0) {
    throw VerificationMismatch("f_" + std::to_string(n) + " * e(., " + std::to_string(n) +
                               ") is not divisible by t^2");
  }
  std::vector<Integer> out;
  for (int i = 2; i <= r.valid_through(); ++i) out.push_back(r.coeff(i));
  return out;
}

Report check_plog_roundtrip(IcEngine& engine, int t_cap, int u_cap) {
  const BiSeries e = plog(engine, t_cap, u_cap);
  const BiSeries expected = psi(engine, t_cap, u_cap);
  const BiSeries rebuilt = plethystic_exp(e);
  Report report{.check = "plog_roundtrip", .params = {{"t_cap", t_cap}, {"u_cap", u_cap}}};
  report.pass = rebuilt == expected;
  if (!report.pass) {
    for (int n = 0; n <= u_cap && report.witness.empty(); ++n) {
      for (int i = 0; i <= t_cap; ++i) {
        if (rebuilt.at(i, n) != expected.at(i, n)) {
          report.witness = {{"i", i},
                            {"n", n},
                            {"psi", expected.at(i, n).get_str()},
                            {"rebuilt", rebuilt.at(i, n).get_str()}};
          break;
        }
      }
    }
  }
  return report;
}

Report check_plog_conjectures(IcEngine& engine, int t_cap, int u_cap) {
  if (t_cap < 2 || u_cap < 2) throw InvalidArgs("check_plog_conjectures requires caps >= 2");
  const BiSeries e = plog(engine, t_cap, u_cap);
  Report report{.check = "plog_conjectures",
                .params = {{"t_cap", t_cap},
                           {"u_cap", u_cap},
                           {"q_window", t_cap - 2},
                           {"note",
                            "Q_n is checked through degree t_cap-2 only; polynomiality of Q_n cannot be "
                            "certified from a truncation"}}};
  Json negative = Json::array();
  for (int n = 0; n <= u_cap; ++n) {
    for (int i = 0; i <= t_cap; ++i) {
      if (sgn(e.at(i, n)) < 0) negative.push_back({{"i", i}, {"n", n}, {"e", json_integer(e.integer_at(i, n))}});
    }
  }
  Json q_low = Json::object();
  Json q_failures = Json::array();
  for (int n = 2; n <= u_cap; ++n) {
    try {
      const auto q = q_low_coefficients(e, n);
      q_low[std::to_string(n)] = json_integers(q);
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (sgn(q[k]) < 0) q_failures.push_back({{"n", n}, {"degree", k}, {"coefficient", json_integer(q[k])}});
      }
    } catch (const VerificationMismatch& err) {
      q_failures.push_back({{"n", n}, {"reason", err.what()}});
    }
  }
  report.pass = negative.empty() && q_failures.empty();
  report.witness["q_low"] = q_low;
  if (!negative.empty()) report.witness["negative_e"] = negative;
  if (!q_failures.empty()) report.witness["q_failures"] = q_failures;
  return report;
}

}  // namespace icvp
