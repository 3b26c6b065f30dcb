#ifndef ICVP_GENFUN_HPP
#define ICVP_GENFUN_HPP

#include <vector>

#include "icvp/ic_core.hpp"
#include "icvp/poly.hpp"
#include "icvp/report.hpp"

namespace icvp {

// Truncated series in (t, u) with exact rational coefficients for
// 0 <= i <= t_cap (power of t) and 0 <= n <= u_cap (power of u).
class BiSeries {
 public:
  BiSeries(int t_cap, int u_cap);

  int t_cap() const noexcept { return t_cap_; }
  int u_cap() const noexcept { return u_cap_; }

  const Rational& at(int i, int n) const { return cells_[index(i, n)]; }
  Rational& at(int i, int n) { return cells_[index(i, n)]; }

  bool is_integral() const;
  // Throws NonIntegralCoefficient if the coefficient is not an integer.
  Integer integer_at(int i, int n) const;
  // Coefficients of u^n as a polynomial in t, valid through t_cap.
  TruncSeries u_slice(int n) const;
  void set_u_slice(int n, const IntPoly& p);

  // f(t, -u).
  BiSeries negate_u() const;
  // f(t^k, u^k), same caps.
  BiSeries dilate(int k) const;
  // Restriction to smaller caps.
  BiSeries truncated(int t_cap, int u_cap) const;

  BiSeries& operator+=(const BiSeries& other);
  BiSeries& operator-=(const BiSeries& other);
  BiSeries& operator*=(const Rational& scalar);
  // Truncated product; caps are the minimum of the operands'.
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::size_t index(int i, int n) const;

  int t_cap_;
  int u_cap_;
  std::vector<Rational> cells_;  // row-major in n
};

// Psi(t,u) = 1 + sum_{n>=1} u^n P_n(t)/f_n(t).
BiSeries psi(IcEngine& engine, int t_cap, int u_cap);

// Psi(1/t, u) rewritten with non-negative powers of t:
// [u^m] = (-1)^(m-1) t^{d_m} P_m(1/t) / f_m(t).
BiSeries psi_flipped(IcEngine& engine, int t_cap, int u_cap);

// Psi(1/t, u) Psi(t, -u) = 1 within the caps.
Report check_functional_equation(IcEngine& engine, int t_cap, int u_cap);

// log(s) for s with constant term 1, via log(1 + x) = sum (-1)^(j+1) x^j / j.
BiSeries log_series(const BiSeries& s);

int mobius(int k);

// e(i,n) with Psi = prod (1 - t^i u^n)^(-e(i,n)), from
// sum_k mu(k)/k log Psi(t^k, u^k). Throws NonIntegralPLog.
BiSeries plog(IcEngine& engine, int t_cap, int u_cap);

// prod over (i,n) != (0,0) of (1 - t^i u^n)^(-e(i,n)); e must be integral.
BiSeries plethystic_exp(const BiSeries& exponents);

// Coefficients of f_n(t) * sum_i e(i,n) t^i / t^2 in degrees 0 .. t_cap - 2:
// the low-order part of the conjectured Q_n. Throws VerificationMismatch if
// the product is not divisible by t^2.
std::vector<Integer> q_low_coefficients(const BiSeries& exponents, int n);

// plethystic_exp(plog(...)) reproduces psi(...) within the caps.
Report check_plog_roundtrip(IcEngine& engine, int t_cap, int u_cap);

// e(i,n) >= 0 everywhere in the caps, and for 2 <= n <= u_cap the product
// f_n * e(., n) is divisible by t^2 with non-negative coefficients through t_cap.
Report check_plog_conjectures(IcEngine& engine, int t_cap, int u_cap);

}  // namespace icvp

#endif  // ICVP_GENFUN_HPP
