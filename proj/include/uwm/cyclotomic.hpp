#pragma once

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace uwm {

using BigInt = boost::multiprecision::cpp_int;

// Largest root order the arithmetic will accept. Canonical reduction tables are
// built per order, so this is a resource cap, not a correctness limit.
int max_root_order();
void set_max_root_order(int m);

// Minimal polynomial of a primitive m-th root of unity, ascending coefficients.
// Monic, degree = Euler totient of m. Throws std::invalid_argument for m < 1.
std::vector<BigInt> cyclotomic_polynomial(int m);

int euler_totient(int m);

// An element of Z[zeta_m] in canonical form: the coefficient vector of the
// residue modulo the m-th cyclotomic polynomial, basis {1, z, ..., z^(deg-1)}.
// Two values with the same order are equal iff their coefficient vectors are
// identical. All arithmetic is exact; nothing here touches floating point.
class CycInt {
 public:
  CycInt() : m_(1), coeffs_(1) {}

  static CycInt zero(int m);
  static CycInt one(int m);
  static CycInt from_integer(int m, BigInt z);
  static CycInt root(int m, long long k);  // zeta_m^k, any integer k

  // Canonical representative of a polynomial in zeta_m of arbitrary degree:
  // exponents are first folded modulo m (z^m = 1), then the result is reduced
  // modulo the cyclotomic polynomial. Idempotent.
  static CycInt reduce(int m, std::span<const BigInt> raw);

  int order() const { return m_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // True iff the value equals the rational integer z.
  bool equals_integer(const BigInt& z) const;
  bool is_real() const { return *this == conjugate(); }

  CycInt conjugate() const;  // zeta^k -> zeta^(m-k); an involution
  CycInt times_conjugate() const;

  // Image under Z[zeta_m] -> Z[zeta_M], zeta_m = zeta_M^(M/m). Requires m | M.
  CycInt embedded(int new_m) const;

  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt operator-() const;
  CycInt& operator+=(const CycInt& b) { return *this = *this + b; }

  bool operator==(const CycInt& other) const = default;

  std::string to_string() const;  // e.g. "3", "-1+2z", "z^3"

 private:
  CycInt(int m, std::vector<BigInt> coeffs) : m_(m), coeffs_(std::move(coeffs)) {}

  int m_;
  std::vector<BigInt> coeffs_;
};

}  // namespace uwm
