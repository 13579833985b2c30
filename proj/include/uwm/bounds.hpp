#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "uwm/cyclotomic.hpp"

namespace uwm {

using Rational = boost::rational<BigInt>;

BigInt floor_rational(const Rational& r);

enum class Setting { complex_roots, real };

// Upper bounds on the size of a bi-angular set of unit vectors in dimension n
// whose pairwise absolute inner products lie in {0, alpha}. The absolute bound
// is always available; the alpha-sensitive bound applies only while its
// denominator is positive. All arithmetic is exact rational.
struct LineSetBound {
  BigInt absolute;
  std::optional<Rational> special;
};

// Requires 0 < alpha_sq < 1.
LineSetBound line_set_bound(int n, const Rational& alpha_sq, Setting setting);

// Bound on the number of mutually unbiased weighing matrices of order n and
// weight w, derived from line_set_bound at alpha^2 = 1/w applied to the
// matrix rows together with the rows of the identity matrix (scaling by
// 1/sqrt(w) keeps the enlarged set bi-angular, which is what permits the
// identity append; see derivation_note).
struct BoundReport {
  int n = 0;
  int w = 0;
  Setting setting = Setting::complex_roots;
  Rational absolute_exact{0};
  BigInt absolute;                      // floor of absolute_exact
  std::optional<Rational> special;      // present only with positive denominator
  std::optional<int> weight_specific;   // weight-2/3 bounds, when applicable
  BigInt effective;                     // floor of the minimum applicable bound
  std::string derivation_note;

  // min(absolute, special) as an exact rational; the headline theoretic bound.
  Rational corollary_value() const;
};

BoundReport muw_upper_bound(int n, int w, Setting setting);

// Weight-specific maxima: weight 2 admits at most 2 matrices for even n and
// none for odd n; weight 3 admits 9 when n is a multiple of 4 and 3 otherwise,
// with no matrices at all for n = 5 or n < 3. Other weights: nullopt.
std::optional<int> weight_specific_bound(int n, int w);

// A real unbiased pair forces HK^T = sqrt(w) L integral, so w must be a
// perfect square.
bool real_pair_feasible(int w);

// One row of the summary table comparing theoretic bounds with the best
// bounds and examples this artifact tracks for that (n, w) type.
struct Table1Row {
  int n = 0;
  int w = 0;
  Setting setting = Setting::complex_roots;
  Rational corollary{0};     // headline bound, exact (may be fractional)
  BigInt corollary_floor;
  int smallest = 0;          // best known upper bound
  std::string smallest_source;
  int largest_example = 0;   // largest set size on record here
  int example_root_order = 0;  // 0 when no example exists
  std::string example_source;
};

// Supported keys: the 21 complex types with 2 <= n <= 7, plus the real
// (8, 4) case. Throws std::out_of_range otherwise.
Table1Row table1_report(int n, int w);

// All supported (n, w) keys for table1_report, complex rows first.
std::vector<std::pair<int, int>> table1_keys();

}  // namespace uwm
