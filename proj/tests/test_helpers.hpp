#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "uwm/constructions.hpp"
#include "uwm/wmatrix.hpp"

namespace uwm::test {

// Floating-point evaluation of a cyclotomic integer. Test oracle only; the
// library itself never touches floating point in a verdict path.
inline std::complex<double> eval(const CycInt& z) {
  std::complex<double> acc{0.0, 0.0};
  const int m = z.order();
  for (size_t i = 0; i < z.coeffs().size(); ++i) {
    const double c = static_cast<double>(z.coeffs()[i]);
    if (c != 0.0)
      acc += c * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / m);
  }
  return acc;
}

inline UnitWeighingMatrix matrix_from(int n, int p, int m, std::initializer_list<int> cells) {
  std::vector<Entry> v;
  v.reserve(cells.size());
  for (int c : cells) v.push_back(static_cast<Entry>(c));
  return UnitWeighingMatrix::from_cells(n, p, m, std::move(v));
}

// Random unimodular permutation matrix as a (permutation, phases) pair.
inline Monomial random_monomial(int n, int m, std::mt19937_64& rng) {
  Monomial mono = identity_monomial(n);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(mono.src[static_cast<size_t>(i)], mono.src[static_cast<size_t>(d(rng))]);
  }
  std::uniform_int_distribution<int> ph(0, m - 1);
  for (int i = 0; i < n; ++i) mono.phase[static_cast<size_t>(i)] = static_cast<Entry>(ph(rng));
  return mono;
}

inline MUWSet dataset(DatasetKey key) { return load_matrix_dataset(key); }

}  // namespace uwm::test
