#ifndef ICVP_POLY_HPP
#define ICVP_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace icvp {

using Integer = mpz_class;
using Rational = mpq_class;

// Univariate polynomial in t with arbitrary-precision integer coefficients.
// Stored sparsely as terms sorted by degree with no zero coefficients.
class IntPoly {
 public:
  struct Term {
    int degree;
    Integer coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  IntPoly() = default;
  // Dense coefficients, constant term first.
  IntPoly(std::initializer_list<long> dense);
  explicit IntPoly(std::span<const Integer> dense);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int degree);
  // Terms in strictly increasing degree order; zero coefficients are dropped.
  static IntPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept { return terms_.empty() ? kMinusInfinity : terms_.back().degree; }
  int valuation() const noexcept;
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Integer coeff(int degree) const;
  // Coefficients 0..degree(); empty for the zero polynomial.
  std::vector<Integer> dense() const;

  // Multiplication by t^k, k >= -valuation().
  IntPoly shifted(int k) const;
  Integer evaluate(const Integer& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // "1 + 2t^2 - t^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void merge(const IntPoly& other, int sign);

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

// Polynomial together with the highest degree through which it is exact.
class TruncSeries {
 public:
  TruncSeries(IntPoly poly, int valid_through);

  const IntPoly& poly() const noexcept { return poly_; }
  int valid_through() const noexcept { return valid_through_; }
  // Throws InsufficientPrecision past valid_through.
  Integer coeff(int degree) const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  // A polynomial is exact to every order.
  friend TruncSeries operator*(const TruncSeries& a, const IntPoly& b);
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  IntPoly poly_;
  int valid_through_;
};

// Quotient q with a = q * b; throws NonExactDivision on a nonzero remainder.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// t^d p(1/t); throws DegreeOverflow if deg p > d.
IntPoly reverse(const IntPoly& p, int d);

// Inverse of p modulo t^(T+1); p(0) must be a unit.
TruncSeries series_inverse(const IntPoly& p, int valid_through);

IntPoly truncate(const IntPoly& p, int k);
// Throws InsufficientPrecision when k exceeds valid_through.
IntPoly truncate(const TruncSeries& s, int k);

// Gaussian binomial [n, s]_t via [n,s] = t^s [n-1,s] + [n-1,s-1].
IntPoly q_binomial(int n, int s);

// f_n(t) = (1 - t^2)(1 - t^3)...(1 - t^n); f_0 = f_1 = 1.
IntPoly f_type_a(int n);

// f_n / (f_s f_{n-s}) computed as (1 - t) [n, s]_t, for 1 <= s <= n - 1.
IntPoly f_ratio(int n, int s);
// Same quantity by exact division of the f polynomials.
IntPoly f_ratio_by_division(int n, int s);

// Ordinary binomial coefficient; zero when k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace icvp

#endif  // ICVP_POLY_HPP
