#include "uwm/bounds.hpp"

#include <map>
#include <stdexcept>

namespace uwm {

namespace {

Rational rat(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

BigInt floor_rational(const Rational& r) {
  // boost::rational keeps the denominator positive
  BigInt q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

LineSetBound line_set_bound(int n, const Rational& alpha_sq, Setting setting) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (alpha_sq <= Rational(0) || alpha_sq >= Rational(1))
    throw std::invalid_argument("alpha^2 must lie strictly between 0 and 1");
  LineSetBound out;
  if (setting == Setting::complex_roots) {
    out.absolute = BigInt(n) * binomial(n + 1, 2);
    Rational den = rat(2) - rat(n + 1) * alpha_sq;
    if (den > Rational(0))
      out.special = rat(n) * rat(n + 1) * (rat(1) - alpha_sq) / den;
  } else {
    out.absolute = binomial(n + 2, 3);
    Rational den = rat(3) - rat(n + 2) * alpha_sq;
    if (den > Rational(0))
      out.special = rat(n) * rat(n + 2) * (rat(1) - alpha_sq) / den;
  }
  return out;
}

Rational BoundReport::corollary_value() const {
  if (special && *special < absolute_exact) return *special;
  return absolute_exact;
}

BoundReport muw_upper_bound(int n, int w, Setting setting) {
  if (w < 1 || w > n) throw std::invalid_argument("need 1 <= w <= n");
  BoundReport r;
  r.n = n;
  r.w = w;
  r.setting = setting;
  if (setting == Setting::complex_roots) {
    r.absolute_exact = rat(n - 1) * rat(n + 2) / rat(2);
    long long den = 2LL * w - (n + 1);
    if (den > 0) r.special = rat(w) * rat(n - 1) / rat(den);
  } else {
    r.absolute_exact = rat(n - 1) * rat(n + 4) / rat(6);
    long long den = 3LL * w - (n + 2);
    if (den > 0) r.special = rat(w) * rat(n - 1) / rat(den);
  }
  r.absolute = floor_rational(r.absolute_exact);
  r.weight_specific = weight_specific_bound(n, w);
  Rational best = r.corollary_value();
  if (r.weight_specific && Rational(BigInt(*r.weight_specific)) < best)
    best = Rational(BigInt(*r.weight_specific));
  r.effective = floor_rational(best);
  r.derivation_note =
      "rows of all matrices scaled by 1/sqrt(w), together with the rows of the "
      "identity matrix, form a bi-angular set with alpha^2 = 1/w in dimension n";
  return r;
}

std::optional<int> weight_specific_bound(int n, int w) {
  if (w == 2) return (n % 2 == 1) ? 0 : 2;
  if (w == 3) {
    if (n < 3 || n == 5) return 0;
    return (n % 4 == 0) ? 9 : 3;
  }
  return std::nullopt;
}

bool real_pair_feasible(int w) {
  int r = 0;
  while (r * r < w) ++r;
  return r * r == w;
}

namespace {

// Best-known-bound mechanism and example provenance per (n, w) type.
enum class SmallestFrom { corollary, weight_specific, real_reduction, search_value, nonexistent };

struct TypeFacts {
  SmallestFrom smallest_from;
  int search_value;     // used by SmallestFrom::search_value
  int largest_example;  // largest set size on record
  int example_root;     // 0 = none
  const char* example_source;
};

const std::map<std::pair<int, int>, TypeFacts>& type_facts() {
  static const std::map<std::pair<int, int>, TypeFacts> facts = {
      {{2, 2}, {SmallestFrom::corollary, 0, 2, 4, "prime_full_set"}},
      {{3, 2}, {SmallestFrom::nonexistent, 0, 0, 0, "none"}},
      {{3, 3}, {SmallestFrom::corollary, 0, 3, 3, "prime_full_set"}},
      {{4, 2}, {SmallestFrom::weight_specific, 0, 2, 4, "search"}},
      {{4, 3}, {SmallestFrom::corollary, 0, 9, 6, "bundled_dataset"}},
      {{4, 4}, {SmallestFrom::corollary, 0, 4, 4, "search"}},
      {{5, 2}, {SmallestFrom::nonexistent, 0, 0, 0, "none"}},
      {{5, 3}, {SmallestFrom::nonexistent, 0, 0, 0, "none"}},
      {{5, 4}, {SmallestFrom::search_value, 5, 5, 6, "bundled_dataset"}},
      {{5, 5}, {SmallestFrom::corollary, 0, 5, 5, "prime_full_set"}},
      {{6, 2}, {SmallestFrom::weight_specific, 0, 2, 4, "reported"}},
      {{6, 3}, {SmallestFrom::weight_specific, 0, 3, 3, "construction"}},
      {{6, 4}, {SmallestFrom::corollary, 0, 20, 6, "bundled_dataset"}},
      {{6, 5}, {SmallestFrom::corollary, 0, 2, 12, "reported"}},
      {{6, 6}, {SmallestFrom::corollary, 0, 2, 12, "reported"}},
      {{7, 2}, {SmallestFrom::nonexistent, 0, 0, 0, "none"}},
      {{7, 3}, {SmallestFrom::weight_specific, 0, 3, 6, "construction"}},
      {{7, 4}, {SmallestFrom::real_reduction, 0, 8, 2, "bundled_dataset"}},
      {{7, 5}, {SmallestFrom::nonexistent, 0, 0, 0, "none"}},
      {{7, 6}, {SmallestFrom::corollary, 0, 0, 0, "none"}},
      {{7, 7}, {SmallestFrom::corollary, 0, 7, 7, "prime_full_set"}},
      {{8, 4}, {SmallestFrom::corollary, 0, 14, 2, "bundled_dataset"}},  // real row
  };
  return facts;
}

}  // namespace

Table1Row table1_report(int n, int w) {
  auto it = type_facts().find({n, w});
  if (it == type_facts().end())
    throw std::out_of_range("unsupported table row (" + std::to_string(n) + "," +
                            std::to_string(w) + ")");
  const TypeFacts& f = it->second;
  Table1Row row;
  row.n = n;
  row.w = w;
  row.setting = (n == 8 && w == 4) ? Setting::real : Setting::complex_roots;
  BoundReport br = muw_upper_bound(n, w, row.setting);
  row.corollary = br.corollary_value();
  row.corollary_floor = floor_rational(row.corollary);

  switch (f.smallest_from) {
    case SmallestFrom::corollary:
      row.smallest = static_cast<int>(row.corollary_floor);
      row.smallest_source = "line_set_corollary";
      break;
    case SmallestFrom::weight_specific:
      row.smallest = *weight_specific_bound(n, w);
      row.smallest_source = (w == 2) ? "weight2_bound" : "weight3_bound";
      break;
    case SmallestFrom::real_reduction:
      // every matrix unbiased with the canonical real representative is real,
      // so the real-setting corollary applies
      row.smallest = static_cast<int>(muw_upper_bound(n, w, Setting::real).effective);
      row.smallest_source = "real_reduction";
      break;
    case SmallestFrom::search_value:
      row.smallest = f.search_value;
      row.smallest_source = "exhaustive_search";
      break;
    case SmallestFrom::nonexistent:
      row.smallest = 0;
      row.smallest_source = "nonexistence_registry";
      break;
  }
  row.largest_example = f.largest_example;
  row.example_root_order = f.example_root;
  row.example_source = f.example_source;
  return row;
}

std::vector<std::pair<int, int>> table1_keys() {
  std::vector<std::pair<int, int>> keys;
  for (const auto& [k, v] : type_facts()) keys.push_back(k);
  return keys;
}

}  // namespace uwm
