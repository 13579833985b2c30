#include <doctest.h>

#include <set>

#include "test_helpers.hpp"
#include "uwm/codes.hpp"
#include "uwm/constructions.hpp"

using namespace uwm;

TEST_CASE("decode_hex_row: all-plus and all-minus rows") {
  auto [n0, zero] = decode_hex_row("00000000");
  CHECK(n0 == 32);
  CHECK(zero == 0);

  auto [n1, ones] = decode_hex_row("FFFFFFFF");
  CHECK(n1 == 32);
  CHECK(ones == 0xFFFFFFFFull);

  // MSB of a digit is its leftmost column
  auto [n2, row] = decode_hex_row("80");
  CHECK(n2 == 8);
  CHECK(row == 1);  // column 0 carries the -1

  CHECK(encode_hex_row(32, 0) == "00000000");
  CHECK_THROWS_AS(decode_hex_row("XY"), std::invalid_argument);
}

TEST_CASE("decode fixes the bit convention: first bundled order-32 block is Hadamard") {
  SignMatrixFamily h32 = load_sign_dataset(DatasetKey::h32);
  REQUIRE(h32.members.size() == 32);
  CHECK(is_hadamard(h32.members[0]));
  CHECK(encode_hex_row(32, h32.members[0].row_mask(1)) == "4259F1BA");
}

TEST_CASE("codewords_to_rows: zero and weighted codewords") {
  std::vector<std::uint64_t> words{0};
  auto rows = codewords_to_rows(words);
  CHECK(rows == std::vector<std::uint64_t>{0});  // all-+1 row of length L+1

  std::vector<std::uint64_t> w6{0b1111110};  // a weight-6 word of length 7
  auto r6 = codewords_to_rows(w6);
  CHECK(std::popcount(r6[0]) == 6);
  CHECK((r6[0] & 1) == 0);  // appended zero column sits first
}

TEST_CASE("row set equals the span of any extracted basis") {
  SignMatrixFamily h8 = load_sign_dataset(DatasetKey::h8);
  std::set<std::uint64_t> rows;
  std::vector<std::uint64_t> codewords;
  for (const SignMatrix& m : h8.members) {
    for (int i = 0; i < m.order(); ++i) {
      rows.insert(m.row_mask(i));
      CHECK((m.row_mask(i) & 1) == 0);   // all-+1 first column
      codewords.push_back(m.row_mask(i) >> 1);
    }
  }
  REQUIRE(rows.size() == 64);
  auto basis = xor_basis(codewords);
  CHECK(basis.size() == 6);
  auto span = xor_span(basis);
  auto rebuilt = codewords_to_rows(span);
  CHECK(std::set<std::uint64_t>(rebuilt.begin(), rebuilt.end()) == rows);
}

TEST_CASE("verify_flat_biangular_family: bundled families and a wrong magnitude") {
  SignMatrixFamily h8 = load_sign_dataset(DatasetKey::h8);
  CHECK(h8.c == 4);
  CHECK(verify_flat_biangular_family(h8));

  SignMatrixFamily wrong = h8;
  wrong.c = 2;
  Verdict v = verify_flat_biangular_family(wrong);
  CHECK_FALSE(v);

  SignMatrixFamily h32 = load_sign_dataset(DatasetKey::h32);
  CHECK(h32.c == 8);
  CHECK(verify_flat_biangular_family(h32));
}

TEST_CASE("weight distributions") {
  WeightDistribution wd8 = weight_distribution(load_sign_dataset(DatasetKey::h8));
  WeightDistribution expect8;
  expect8.entries = {{0, 1}, {2, 21}, {4, 35}, {6, 7}};
  CHECK(wd8 == expect8);

  WeightDistribution wd32 = weight_distribution(load_sign_dataset(DatasetKey::h32));
  WeightDistribution expect32;
  expect32.entries = {{0, 1}, {12, 310}, {16, 527}, {20, 186}};
  CHECK(wd32 == expect32);
  long long total = 0;
  for (auto [w, c] : wd32.entries) total += c;
  CHECK(total == 1024);

  SignMatrixFamily trivial{1, 0, {SignMatrix(1, {0})}};
  WeightDistribution wdt = weight_distribution(trivial);
  CHECK(wdt.entries == std::vector<std::pair<int, long long>>{{0, 1}});
}

TEST_CASE("check_linearity") {
  CHECK(check_linearity(load_sign_dataset(DatasetKey::h8)));
  CHECK(check_linearity(load_sign_dataset(DatasetKey::h32)));

  SignMatrixFamily trivial{1, 0, {SignMatrix(1, {0})}};
  CHECK(check_linearity(trivial));

  // drop the all-+1 row's matrix and patch in a duplicate: closure fails
  SignMatrixFamily h8 = load_sign_dataset(DatasetKey::h8);
  SignMatrixFamily broken = h8;
  std::vector<std::uint64_t> rows;
  for (int i = 0; i < 8; ++i) rows.push_back(h8.members[1].row_mask(i));
  rows[0] ^= 0b110;  // perturb one row out of the code
  broken.members[0] = SignMatrix(8, rows);
  CHECK_FALSE(check_linearity(broken));
}

TEST_CASE("identity_extension_check: breaks for the bundled families") {
  IdentityExtension e8 = identity_extension_check(load_sign_dataset(DatasetKey::h8));
  CHECK_FALSE(e8.extends);
  CHECK(e8.introduced == "1/sqrt(8)");

  IdentityExtension e32 = identity_extension_check(load_sign_dataset(DatasetKey::h32));
  CHECK_FALSE(e32.extends);

  // a perfect-square order with c = sqrt(n) would extend
  SignMatrixFamily square{4, 2, {}};
  CHECK(identity_extension_check(square).extends);

  SignMatrixFamily empty{8, 4, {}};
  CHECK(identity_extension_check(empty).extends);
}

TEST_CASE("identity_extension_check: weighing sets always extend") {
  IdentityExtension e = identity_extension_check(uwm::test::dataset(DatasetKey::uw4_3));
  CHECK(e.extends);
  CHECK(e.introduced == "1/sqrt(3)");
}

TEST_CASE("H8 absolute cross values are exactly {0, 4}") {
  SignMatrixFamily h8 = load_sign_dataset(DatasetKey::h8);
  std::set<int> values;
  for (size_t a = 0; a < h8.members.size(); ++a)
    for (size_t b = a + 1; b < h8.members.size(); ++b)
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          values.insert(std::abs(
              sign_inner_product(8, h8.members[a].row_mask(i), h8.members[b].row_mask(j))));
  CHECK(values == std::set<int>{0, 4});
}

TEST_CASE("H32: every block Hadamard, cross products in {0, +-8}") {
  SignMatrixFamily h32 = load_sign_dataset(DatasetKey::h32);
  for (const SignMatrix& m : h32.members) CHECK(is_hadamard(m));
  std::set<int> values;
  for (size_t a = 0; a < h32.members.size(); ++a)
    for (size_t b = a + 1; b < h32.members.size(); ++b)
      for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j)
          values.insert(std::abs(
              sign_inner_product(32, h32.members[a].row_mask(i), h32.members[b].row_mask(j))));
  CHECK(values == std::set<int>{0, 8});
}

TEST_CASE("xor_basis: rank and span agree with raw enumeration") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> count(0, 8);
    std::uniform_int_distribution<std::uint64_t> word(0, 255);
    std::vector<std::uint64_t> words(static_cast<size_t>(count(rng)));
    for (auto& w : words) w = word(rng);

    // oracle: the span as the closure of {0} under xor with each word
    std::set<std::uint64_t> closure{0};
    for (bool grew = true; grew;) {
      grew = false;
      for (std::uint64_t w : words)
        for (std::uint64_t s : std::vector<std::uint64_t>(closure.begin(), closure.end()))
          if (closure.insert(s ^ w).second) grew = true;
    }

    auto basis = xor_basis(words);
    auto span = xor_span(basis);
    CHECK(span.size() == closure.size());
    CHECK(std::set<std::uint64_t>(span.begin(), span.end()) == closure);
  }
}

TEST_CASE("decode_hex_family rejects ragged input") {
  CHECK_THROWS_AS(decode_hex_family("00\nFF\n\n00\n"), std::invalid_argument);
  CHECK_THROWS_AS(decode_hex_family("00\nFFF\n"), std::invalid_argument);
}

TEST_CASE("to_weighing: +-1 matrices become UW(n, n) over square roots of unity") {
  SignMatrixFamily h8 = load_sign_dataset(DatasetKey::h8);
  UnitWeighingMatrix w = to_weighing(h8.members[0]);
  CHECK(w.order() == 8);
  CHECK(w.weight() == 8);
  CHECK(w.root_order() == 2);
  CHECK(verify_weighing(w));
}
