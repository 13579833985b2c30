#include <doctest.h>

#include "test_helpers.hpp"
#include "uwm/bounds.hpp"
#include "uwm/constructions.hpp"

using namespace uwm;

namespace {
Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("line_set_bound: worked example n=9, alpha^2=1/4, real") {
  LineSetBound b = line_set_bound(9, rat(1, 4), Setting::real);
  CHECK(b.absolute == 165);
  REQUIRE(b.special.has_value());
  CHECK(*b.special == rat(297));
}

TEST_CASE("line_set_bound: n=4, alpha^2=1/4, complex") {
  LineSetBound b = line_set_bound(4, rat(1, 4), Setting::complex_roots);
  CHECK(b.absolute == 40);
  REQUIRE(b.special.has_value());
  CHECK(*b.special == rat(20));
}

TEST_CASE("line_set_bound: special bound absent when the denominator is not positive") {
  LineSetBound b = line_set_bound(9, rat(1, 2), Setting::real);
  CHECK_FALSE(b.special.has_value());
  CHECK(b.absolute == 165);
}

TEST_CASE("line_set_bound: alpha^2 domain") {
  CHECK_THROWS_AS(line_set_bound(4, rat(0), Setting::real), std::invalid_argument);
  CHECK_THROWS_AS(line_set_bound(4, rat(1), Setting::real), std::invalid_argument);
  CHECK_THROWS_AS(line_set_bound(4, rat(3, 2), Setting::complex_roots), std::invalid_argument);
}

TEST_CASE("muw_upper_bound: the corollary column of all 21 complex rows") {
  struct Row {
    int n, w;
    Rational corollary;
  };
  const Row rows[] = {
      {2, 2, rat(2)},       {3, 2, rat(5)},      {3, 3, rat(3)},  {4, 2, rat(9)},
      {4, 3, rat(9)},       {4, 4, rat(4)},      {5, 2, rat(14)}, {5, 3, rat(14)},
      {5, 4, rat(8)},       {5, 5, rat(5)},      {6, 2, rat(20)}, {6, 3, rat(20)},
      {6, 4, rat(20)},      {6, 5, rat(25, 3)},  {6, 6, rat(6)},  {7, 2, rat(27)},
      {7, 3, rat(27)},      {7, 4, rat(27)},     {7, 5, rat(15)}, {7, 6, rat(9)},
      {7, 7, rat(7)},
  };
  for (const Row& r : rows) {
    BoundReport b = muw_upper_bound(r.n, r.w, Setting::complex_roots);
    CHECK(b.corollary_value() == r.corollary);
  }
}

TEST_CASE("muw_upper_bound: named cases") {
  BoundReport b65 = muw_upper_bound(6, 5, Setting::complex_roots);
  REQUIRE(b65.special.has_value());
  CHECK(*b65.special == rat(25, 3));
  CHECK(b65.effective == 8);

  BoundReport b74 = muw_upper_bound(7, 4, Setting::complex_roots);
  CHECK_FALSE(b74.special.has_value());  // denominator 2w - (n+1) = 0
  CHECK(b74.effective == 27);

  BoundReport b84 = muw_upper_bound(8, 4, Setting::real);
  CHECK(b84.effective == 14);

  BoundReport b74r = muw_upper_bound(7, 4, Setting::real);
  CHECK(b74r.effective == 8);

  CHECK_THROWS_AS(muw_upper_bound(4, 5, Setting::real), std::invalid_argument);
}

TEST_CASE("weight-specific bounds") {
  CHECK(weight_specific_bound(6, 2) == 2);
  CHECK(weight_specific_bound(4, 2) == 2);
  CHECK(weight_specific_bound(3, 2) == 0);
  CHECK(weight_specific_bound(5, 2) == 0);
  CHECK(weight_specific_bound(7, 2) == 0);

  CHECK(weight_specific_bound(8, 3) == 9);
  CHECK(weight_specific_bound(4, 3) == 9);
  CHECK(weight_specific_bound(12, 3) == 9);
  CHECK(weight_specific_bound(7, 3) == 3);
  CHECK(weight_specific_bound(6, 3) == 3);
  CHECK(weight_specific_bound(3, 3) == 3);
  CHECK(weight_specific_bound(5, 3) == 0);
  CHECK(weight_specific_bound(2, 3) == 0);

  CHECK_FALSE(weight_specific_bound(6, 4).has_value());

  CHECK(real_pair_feasible(1));
  CHECK(real_pair_feasible(4));
  CHECK(real_pair_feasible(9));
  CHECK_FALSE(real_pair_feasible(5));
  CHECK_FALSE(real_pair_feasible(2));
}

// The matrix bound is the line-set bound at alpha^2 = 1/w after appending
// the n identity rows: mn + n <= line bound, i.e. m <= (bound - n)/n.
TEST_CASE("identity-append composition reproduces the matrix bounds") {
  for (int n = 2; n <= 9; ++n) {
    for (int w = 2; w <= n; ++w) {
      Rational alpha_sq = rat(1, w);
      for (Setting s : {Setting::complex_roots, Setting::real}) {
        LineSetBound lb = line_set_bound(n, alpha_sq, s);
        BoundReport mb = muw_upper_bound(n, w, s);
        CHECK((Rational(lb.absolute) - rat(n)) / rat(n) == mb.absolute_exact);
        CHECK(lb.special.has_value() == mb.special.has_value());
        if (lb.special) CHECK((*lb.special - rat(n)) / rat(n) == *mb.special);
      }
    }
  }
}

TEST_CASE("special complex bound non-increasing in w where defined") {
  for (int n = 3; n <= 8; ++n) {
    std::optional<Rational> prev;
    for (int w = 2; w <= n; ++w) {
      BoundReport b = muw_upper_bound(n, w, Setting::complex_roots);
      if (b.special) {
        if (prev) CHECK(*b.special <= *prev);
        prev = b.special;
      }
    }
  }
}

TEST_CASE("every bundled set fits under its effective bound") {
  struct Item {
    DatasetKey key;
    int n, w;
    Setting setting;
  };
  const Item items[] = {
      {DatasetKey::uw4_3, 4, 3, Setting::complex_roots},
      {DatasetKey::uw5_4, 5, 4, Setting::complex_roots},
      {DatasetKey::uw6_4, 6, 4, Setting::complex_roots},
      {DatasetKey::w7_4, 7, 4, Setting::real},
      {DatasetKey::w8_4, 8, 4, Setting::real},
  };
  for (const Item& it : items) {
    MUWSet set = uwm::test::dataset(it.key);
    BoundReport b = muw_upper_bound(it.n, it.w, it.setting);
    CHECK(BigInt(set.size()) <= b.effective);
  }
}

TEST_CASE("table1_report: spot rows") {
  Table1Row r64 = table1_report(6, 4);
  CHECK(r64.corollary == rat(20));
  CHECK(r64.smallest == 20);
  CHECK(r64.largest_example == 20);
  CHECK(r64.example_root_order == 6);

  Table1Row r54 = table1_report(5, 4);
  CHECK(r54.corollary == rat(8));
  CHECK(r54.smallest == 5);
  CHECK(r54.largest_example == 5);

  Table1Row r76 = table1_report(7, 6);
  CHECK(r76.corollary == rat(9));
  CHECK(r76.smallest == 9);
  CHECK(r76.largest_example == 0);

  Table1Row r65 = table1_report(6, 5);
  CHECK(r65.corollary == rat(25, 3));
  CHECK(r65.smallest == 8);
  CHECK(r65.largest_example == 2);
  CHECK(r65.example_root_order == 12);

  Table1Row r74 = table1_report(7, 4);
  CHECK(r74.smallest == 8);
  CHECK(r74.largest_example == 8);
  CHECK(r74.example_root_order == 2);

  Table1Row r84 = table1_report(8, 4);
  CHECK(r84.setting == Setting::real);
  CHECK(r84.corollary == rat(14));
  CHECK(r84.smallest == 14);
  CHECK(r84.largest_example == 14);

  CHECK_THROWS_AS(table1_report(9, 9), std::out_of_range);
}

TEST_CASE("table1_report: full frozen table") {
  struct Expect {
    int n, w, smallest, largest, root;
  };
  const Expect rows[] = {
      {2, 2, 2, 2, 4},  {3, 2, 0, 0, 0},  {3, 3, 3, 3, 3},   {4, 2, 2, 2, 4},
      {4, 3, 9, 9, 6},  {4, 4, 4, 4, 4},  {5, 2, 0, 0, 0},   {5, 3, 0, 0, 0},
      {5, 4, 5, 5, 6},  {5, 5, 5, 5, 5},  {6, 2, 2, 2, 4},   {6, 3, 3, 3, 3},
      {6, 4, 20, 20, 6}, {6, 5, 8, 2, 12}, {6, 6, 6, 2, 12}, {7, 2, 0, 0, 0},
      {7, 3, 3, 3, 6},  {7, 4, 8, 8, 2},  {7, 5, 0, 0, 0},   {7, 6, 9, 0, 0},
      {7, 7, 7, 7, 7},  {8, 4, 14, 14, 2},
  };
  CHECK(table1_keys().size() == 22);
  for (const Expect& e : rows) {
    Table1Row row = table1_report(e.n, e.w);
    CHECK(row.smallest == e.smallest);
    CHECK(row.largest_example == e.largest);
    CHECK(row.example_root_order == e.root);
    CHECK(row.largest_example <= row.smallest);
  }
}

TEST_CASE("example sizes cross-checked against bundled data and constructions") {
  CHECK(uwm::test::dataset(DatasetKey::uw4_3).size() == table1_report(4, 3).largest_example);
  CHECK(uwm::test::dataset(DatasetKey::uw5_4).size() == table1_report(5, 4).largest_example);
  CHECK(uwm::test::dataset(DatasetKey::uw6_4).size() == table1_report(6, 4).largest_example);
  CHECK(uwm::test::dataset(DatasetKey::w7_4).size() == table1_report(7, 4).largest_example);
  CHECK(uwm::test::dataset(DatasetKey::w8_4).size() == table1_report(8, 4).largest_example);
  for (int p : {2, 3, 5, 7}) CHECK(prime_muhm(p).size() == table1_report(p, p).largest_example);
}
