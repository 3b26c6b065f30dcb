#ifndef ICVP_BETTI_HPP
#define ICVP_BETTI_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "icvp/ic_core.hpp"
#include "icvp/parallel.hpp"
#include "icvp/poly.hpp"
#include "icvp/report.hpp"

namespace icvp {

// c_i(n) = [t^i] P_n(t) for 0 <= i <= i_max, 1 <= n <= n_max. Immutable once built.
class BettiTable {
 public:
  BettiTable(int i_max, int n_max, std::vector<std::vector<Integer>> by_n);

  int i_max() const noexcept { return i_max_; }
  int n_max() const noexcept { return n_max_; }
  const Integer& at(int i, int n) const;

 private:
  int i_max_;
  int n_max_;
  std::vector<std::vector<Integer>> by_n_;  // by_n_[n - 1][i]
};

BettiTable c_table(IcEngine& engine, int i_max, int n_max);

// c_i(n) for any i (zero when i < 0 or beyond deg P_n); P_0 = 1.
Integer c_coeff(IcEngine& engine, int i, int n);

// b_{i,s}(n) = [t^i] f_n / (f_s f_{n-s}) for 1 <= s <= n - 1.
Integer b_coeff(int i, int s, int n);
// [t^i] (1 - t)[n, s]_t for 0 <= s <= n; agrees with b_coeff on 1 <= s <= n - 1
// and zero for i < 0.
Integer b_coeff_extended(int i, int s, int n);

// b_{i,s}(n) is constant for max(i,1) + s <= n <= n_max. The witness
// carries the stable value.
Report check_b_stability(int i, int s, int n_max);

// Coefficients a_{i,k} of c_i(n) = sum_k a_{i,k} binom(n - i, k), n >= i.
struct BinomialExpansion {
  int i = 0;
  std::vector<Integer> coeffs;  // k = 0 .. floor(i/2)
  int verified_through = 0;     // largest n checked out of sample

  Integer evaluate(int n) const;
};

// Interpolates at n = i .. i + floor(i/2) by exact forward substitution on
// the unitriangular binomial system, then checks every n up to
// floor(3i/2) + 3. Throws NonIntegralCoefficient or VerificationMismatch.
BinomialExpansion binomial_coeffs(IcEngine& engine, int i);

// Published expansions a_{i,k} for i <= 9.
const std::map<int, std::vector<long>>& reference_expansions();

// Smallest n >= 1 such that the expansion matches c_i(m) for all n <= m <= i.
int expansion_holds_from(IcEngine& engine, const BinomialExpansion& expansion);

// binomial_coeffs(i) equals reference_expansions() for every listed i, and
// the reference expansion gives c_i(n) exactly for i <= n <= n_max.
Report check_reference_expansions(IcEngine& engine, int n_max);

// Reports (never asserts) whether every a_{i,k}, i <= i_max, is non-negative.
Report check_conjecture_binomial(IcEngine& engine, int i_max);

// a_{i,i/2} = 1 for even i; a_{i,(i-1)/2} = (i-1)/2 for odd i.
Report check_leading(IcEngine& engine, int i);

// c_i(n) = sum_{s=1}^{i} sum_{p+q+r=i} b_{p,s}(n) c_{d_s - q}(s) c_r(n - s), n > i >= 1.
Report verify_ci_recursion(IcEngine& engine, int i, int n);

// Sums over all compositions sigma of n with r parts, k_sigma parts larger than 1.
struct CompositionSums {
  std::int64_t alternating_parts = 0;  // sum (-1)^(r-1) (r-1) = sum_k (-1)^k k binom(n-1,k)
  std::int64_t c2_recursion = 0;       // sum over r >= 2 of (-1)^r (n-r-1)
  std::int64_t c3_identity = 0;        // sum (-1)^r (r - k_sigma)
};

CompositionSums composition_sums_serial(int n);
CompositionSums composition_sums_omp(int n);

// Both composition identities by brute-force enumeration, 3 <= n <= 22.
Report composition_identity_checks(int n, Execution execution = Execution::parallel);

}  // namespace icvp

#endif  // ICVP_BETTI_HPP
