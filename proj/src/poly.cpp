#include "icvp/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "icvp/errors.hpp"

namespace icvp {

namespace {

// Above this many coefficient products the dense accumulator wins.
constexpr std::size_t kDenseProductThreshold = 64;

}  // namespace

IntPoly::IntPoly(std::initializer_list<long> dense) {
  int degree = 0;
  for (long c : dense) {
    if (c != 0) terms_.push_back({degree, Integer(c)});
    ++degree;
  }
}

IntPoly::IntPoly(std::span<const Integer> dense) {
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) terms_.push_back({static_cast<int>(i), dense[i]});
  }
}

IntPoly IntPoly::constant(const Integer& c) { return monomial(c, 0); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  if (degree < 0) throw InvalidArgs("monomial degree must be non-negative");
  IntPoly p;
  if (sgn(c) != 0) p.terms_.push_back({degree, c});
  return p;
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i - 1].degree >= terms[i].degree) throw InvalidArgs("terms must be in increasing degree order");
  }
  if (!terms.empty() && terms.front().degree < 0) throw InvalidArgs("negative degree");
  IntPoly p;
  p.terms_ = std::move(terms);
  std::erase_if(p.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
  return p;
}

int IntPoly::valuation() const noexcept {
  return terms_.empty() ? kMinusInfinity : terms_.front().degree;
}

Integer IntPoly::coeff(int degree) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                             [](const Term& t, int d) { return t.degree < d; });
  if (it == terms_.end() || it->degree != degree) return 0;
  return it->coeff;
}

std::vector<Integer> IntPoly::dense() const {
  if (terms_.empty()) return {};
  std::vector<Integer> out(static_cast<std::size_t>(degree()) + 1);
  for (const auto& t : terms_) out[t.degree] = t.coeff;
  return out;
}

IntPoly IntPoly::shifted(int k) const {
  if (!terms_.empty() && valuation() + k < 0) throw InvalidArgs("shift produces a negative degree");
  IntPoly p = *this;
  for (auto& t : p.terms_) t.degree += k;
  return p;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  int prev = degree();
  // Horner over the sparse terms, highest degree first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(prev - it->degree));
    acc = acc * power + it->coeff;
    prev = it->degree;
  }
  if (!terms_.empty() && prev > 0) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(prev));
    acc *= power;
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void IntPoly::merge(const IntPoly& other, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->degree < b->degree)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->degree < a->degree) {
      out.push_back({b->degree, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->coeff + b->coeff) : Integer(a->coeff - b->coeff);
      if (sgn(c) != 0) out.push_back({a->degree, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  merge(other, +1);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  merge(other, -1);
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t products = a.terms_.size() * b.terms_.size();
  const int lo = a.valuation() + b.valuation();
  const int hi = a.degree() + b.degree();
  const auto span = static_cast<std::size_t>(hi - lo) + 1;

  if (products >= kDenseProductThreshold && span <= 4 * products) {
    std::vector<Integer> acc(span);
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        mpz_addmul(acc[x.degree + y.degree - lo].get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
      }
    }
    std::vector<IntPoly::Term> terms;
    for (std::size_t i = 0; i < span; ++i) {
      if (sgn(acc[i]) != 0) terms.push_back({static_cast<int>(i) + lo, std::move(acc[i])});
    }
    return IntPoly::from_terms(std::move(terms));
  }

  std::map<int, Integer> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpz_addmul(acc[x.degree + y.degree].get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  std::vector<IntPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [d, c] : acc) terms.push_back({d, std::move(c)});
  return IntPoly::from_terms(std::move(terms));
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer mag = abs(t.coeff);
    if (first) {
      if (sgn(t.coeff) < 0) os << "-";
    } else {
      os << (sgn(t.coeff) < 0 ? " - " : " + ");
    }
    first = false;
    if (t.degree == 0 || mag != 1) os << mag.get_str();
    if (t.degree >= 1) os << "t";
    if (t.degree >= 2) os << "^" << t.degree;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

TruncSeries::TruncSeries(IntPoly poly, int valid_through)
    : poly_(truncate(poly, valid_through)), valid_through_(valid_through) {
  if (valid_through < 0) throw InvalidArgs("valid_through must be non-negative");
}

Integer TruncSeries::coeff(int degree) const {
  if (degree > valid_through_) {
    throw InsufficientPrecision("coefficient of t^" + std::to_string(degree) +
                                " requested from a series valid through t^" + std::to_string(valid_through_));
  }
  return poly_.coeff(degree);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  return {a.poly_ + b.poly_, std::min(a.valid_through_, b.valid_through_)};
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  return {a.poly_ - b.poly_, std::min(a.valid_through_, b.valid_through_)};
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int v = std::min(a.valid_through_, b.valid_through_);
  return {truncate(a.poly_, v) * truncate(b.poly_, v), v};
}

TruncSeries operator*(const TruncSeries& a, const IntPoly& b) {
  return {a.poly_ * truncate(b, a.valid_through_), a.valid_through_};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgs("division by the zero polynomial");
  if (a.is_zero()) return {};

  const int db = b.degree();
  const Integer& lead = b.terms().back().coeff;
  std::map<int, Integer> rem;
  for (const auto& t : a.terms()) rem.emplace(t.degree, t.coeff);

  std::vector<IntPoly::Term> quotient;
  while (!rem.empty() && rem.rbegin()->first >= db) {
    auto top = std::prev(rem.end());
    const int shift = top->first - db;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.get_mpz_t())) {
      throw NonExactDivision("leading coefficient " + top->second.get_str() + " not divisible by " +
                             lead.get_str());
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), top->second.get_mpz_t(), lead.get_mpz_t());
    for (const auto& t : b.terms()) {
      auto& slot = rem[t.degree + shift];
      mpz_submul(slot.get_mpz_t(), q.get_mpz_t(), t.coeff.get_mpz_t());
      if (sgn(slot) == 0) rem.erase(t.degree + shift);
    }
    quotient.push_back({shift, std::move(q)});
  }
  if (!rem.empty()) {
    throw NonExactDivision("nonzero remainder dividing " + a.to_string() + " by " + b.to_string());
  }
  std::reverse(quotient.begin(), quotient.end());
  return IntPoly::from_terms(std::move(quotient));
}

IntPoly reverse(const IntPoly& p, int d) {
  if (p.degree() > d) {
    throw DegreeOverflow("cannot reverse a degree " + std::to_string(p.degree()) + " polynomial at degree " +
                         std::to_string(d));
  }
  std::vector<Integer> dense(static_cast<std::size_t>(std::max(d, 0)) + 1);
  for (const auto& t : p.terms()) dense[d - t.degree] = t.coeff;
  return IntPoly(std::span<const Integer>(dense));
}

TruncSeries series_inverse(const IntPoly& p, int valid_through) {
  if (valid_through < 0) throw InvalidArgs("valid_through must be non-negative");
  const Integer c0 = p.coeff(0);
  if (c0 != 1 && c0 != -1) throw NonUnitConstantTerm("constant term " + c0.get_str() + " is not a unit");

  // q_k = -c0 * sum_{j=1..k} p_j q_{k-j}, since 1/c0 = c0 for c0 = +-1.
  const auto n = static_cast<std::size_t>(valid_through) + 1;
  std::vector<Integer> q(n);
  q[0] = c0;
  for (std::size_t k = 1; k < n; ++k) {
    Integer acc = 0;
    for (const auto& t : p.terms()) {
      if (t.degree == 0) continue;
      if (static_cast<std::size_t>(t.degree) > k) break;
      mpz_addmul(acc.get_mpz_t(), t.coeff.get_mpz_t(), q[k - t.degree].get_mpz_t());
    }
    q[k] = -c0 * acc;
  }
  return {IntPoly(std::span<const Integer>(q)), valid_through};
}

IntPoly truncate(const IntPoly& p, int k) {
  std::vector<IntPoly::Term> kept;
  for (const auto& t : p.terms()) {
    if (t.degree > k) break;
    kept.push_back(t);
  }
  return IntPoly::from_terms(std::move(kept));
}

IntPoly truncate(const TruncSeries& s, int k) {
  if (k > s.valid_through()) {
    throw InsufficientPrecision("truncation at t^" + std::to_string(k) + " exceeds valid_through " +
                                std::to_string(s.valid_through()));
  }
  return truncate(s.poly(), k);
}

IntPoly q_binomial(int n, int s) {
  if (n < 0 || s < 0 || s > n) {
    throw InvalidArgs("q_binomial requires 0 <= s <= n, got n=" + std::to_string(n) + " s=" + std::to_string(s));
  }
  // row[j] = [m, j] for the current m.
  std::vector<IntPoly> row{IntPoly{1}};
  for (int m = 1; m <= n; ++m) {
    std::vector<IntPoly> next(static_cast<std::size_t>(m) + 1);
    next[0] = IntPoly{1};
    next[m] = IntPoly{1};
    for (int j = 1; j < m; ++j) next[j] = row[j].shifted(j) + row[j - 1];
    row = std::move(next);
  }
  return row[s];
}

IntPoly f_type_a(int n) {
  IntPoly f{1};
  for (int k = 2; k <= n; ++k) f *= IntPoly{1} - IntPoly::monomial(1, k);
  return f;
}

IntPoly f_ratio(int n, int s) {
  if (s < 1 || s > n - 1) {
    throw InvalidArgs("f_ratio requires 1 <= s <= n-1, got n=" + std::to_string(n) + " s=" + std::to_string(s));
  }
  return IntPoly{1, -1} * q_binomial(n, s);
}

IntPoly f_ratio_by_division(int n, int s) {
  if (s < 1 || s > n - 1) {
    throw InvalidArgs("f_ratio requires 1 <= s <= n-1, got n=" + std::to_string(n) + " s=" + std::to_string(s));
  }
  return exact_div(f_type_a(n), f_type_a(s) * f_type_a(n - s));
}

Integer binomial(long n, long k) {
  if (n < 0) throw InvalidArgs("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace icvp
