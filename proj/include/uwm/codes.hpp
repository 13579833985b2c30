#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uwm/verdict.hpp"
#include "uwm/wmatrix.hpp"

namespace uwm {

// Square matrix over {+1, -1}, one 64-bit mask per row; bit j set means the
// entry in column j is -1. Pairwise work is XOR + popcount. Orders up to 64.
class SignMatrix {
 public:
  SignMatrix(int n, std::vector<std::uint64_t> row_masks);

  int order() const { return n_; }
  std::uint64_t row_mask(int i) const { return rows_[static_cast<size_t>(i)]; }
  int at(int i, int j) const { return (rows_[static_cast<size_t>(i)] >> j) & 1 ? -1 : 1; }

  bool operator==(const SignMatrix&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

// Unnormalized inner product of two +-1 rows of length n.
int sign_inner_product(int n, std::uint64_t a, std::uint64_t b);

bool is_hadamard(const SignMatrix& m);

// Family of +-1 matrices with a claimed cross-product magnitude c: the
// matrices are Hadamard and every entry of Hi Hj^T (i != j) lies in {0, +-c}.
struct SignMatrixFamily {
  int n = 0;
  int c = 0;
  std::vector<SignMatrix> members;
};

// Decodes blank-line-separated blocks of hex rows, one row per line, MSB
// first within each digit, digits left to right, bit 0 -> +1 and 1 -> -1.
// Order n = 4 * digits per row; every block must have exactly n rows.
SignMatrixFamily decode_hex_family(const std::string& text);

// One hex row; returns (n, row mask).
std::pair<int, std::uint64_t> decode_hex_row(const std::string& digits);
std::string encode_hex_row(int n, std::uint64_t mask);

// Rows of length L+1 from codewords of length L: a zero column is made the
// first column (matching the all-+1 leading column of the bundled families),
// then bits map 0 -> +1, 1 -> -1. Masks use bit j = coordinate j.
std::vector<std::uint64_t> codewords_to_rows(std::span<const std::uint64_t> codewords);

// ok iff every member is Hadamard and every entry of every cross product
// Hi Hj^T (i < j) lies in {0, +-c}, with both 0 and +-c actually realized.
Verdict verify_flat_biangular_family(const SignMatrixFamily& family);

// (weight, count) pairs, ascending weight; weight of a row = number of -1
// entries; counts aggregate all rows of all members.
struct WeightDistribution {
  std::vector<std::pair<int, long long>> entries;
  bool operator==(const WeightDistribution&) const = default;
  std::string to_string() const;
};

WeightDistribution weight_distribution(const SignMatrixFamily& family);

// ok iff the set of rows, mapped back to bits (-1 -> 1), contains the zero
// word and is closed under XOR, i.e. forms a binary linear code.
Verdict check_linearity(const SignMatrixFamily& family);

// Can the rows of the identity be appended without breaking bi-angularity?
// Family rows have norm sqrt(n) and pairwise normalized products {0, c/n};
// an identity row contributes 1/sqrt(n), which stays bi-angular iff c^2 = n.
struct IdentityExtension {
  bool extends = true;
  std::string introduced;  // the normalized value identity rows bring in
  std::string allowed;     // the family's bi-angle set
};

IdentityExtension identity_extension_check(const SignMatrixFamily& family);

// Weighing-matrix variant: entries have modulus 0 or 1 and rows norm
// sqrt(p), so identity rows contribute exactly the unbiased angle 1/sqrt(p).
// Always extends; this is what makes the identity-append bound derivation
// work.
IdentityExtension identity_extension_check(const MUWSet& set);

// View over {+1,-1}: exponents 0/1 at root order 2, weight n.
UnitWeighingMatrix to_weighing(const SignMatrix& m);

// GF(2) span via Gaussian elimination over row masks.
std::vector<std::uint64_t> xor_basis(std::span<const std::uint64_t> words);
std::vector<std::uint64_t> xor_span(std::span<const std::uint64_t> basis);

}  // namespace uwm
