#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "uwm/cyclotomic.hpp"
#include "uwm/verdict.hpp"

namespace uwm {

// A cell is either zero or a root of unity zeta_m^k stored by exponent.
// Entries stay integers so that search-time enumeration is integer work;
// conversion to CycInt happens only at inner products.
using Entry = std::int16_t;
inline constexpr Entry kZeroEntry = -1;

// Row vector of entries, length n.
using EntryRow = std::vector<Entry>;

// n x n grid of entries with declared weight p and root order m.
// Structural validity (exponent ranges) is enforced on construction;
// the weighing property itself is checked by verify_weighing, never assumed.
class UnitWeighingMatrix {
 public:
  UnitWeighingMatrix(int n, int p, int m);
  static UnitWeighingMatrix from_cells(int n, int p, int m, std::vector<Entry> cells);

  int order() const { return n_; }
  int weight() const { return p_; }
  int root_order() const { return m_; }

  Entry at(int i, int j) const { return cells_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, Entry v);
  std::span<const Entry> row(int i) const {
    return {cells_.data() + static_cast<size_t>(i) * n_, static_cast<size_t>(n_)};
  }
  void set_row(int i, std::span<const Entry> r);

  // Same grid over root order new_m (m | new_m), exponents rescaled.
  UnitWeighingMatrix embedded(int new_m) const;

  bool operator==(const UnitWeighingMatrix&) const = default;
  bool operator<(const UnitWeighingMatrix& other) const { return cells_ < other.cells_; }

 private:
  int n_, p_, m_;
  std::vector<Entry> cells_;
};

// A unimodular permutation matrix: output index i takes source index src[i]
// scaled by zeta^phase[i].
struct Monomial {
  std::vector<int> src;
  std::vector<Entry> phase;
};

Monomial identity_monomial(int n);

// P * W * Q for unimodular permutation matrices P (rows) and Q (columns).
UnitWeighingMatrix transformed(const UnitWeighingMatrix& w, const Monomial& rows,
                               const Monomial& cols);

// Exact inner product of two rows over zeta_m (second argument conjugated).
CycInt row_inner_product(std::span<const Entry> a, std::span<const Entry> b, int m);

// W W*: entry (i,j) = sum_k w_ik * conj(w_jk), canonical CycInt form.
std::vector<std::vector<CycInt>> gram(const UnitWeighingMatrix& w);

// ok iff every row and column has exactly p nonzero entries and gram(W) = p*I.
Verdict verify_weighing(const UnitWeighingMatrix& w);

// ok iff every entry e of HK* has e*conj(e) in {0, p}. For weighing inputs
// this is equivalent to HK* = sqrt(p)*L with L a UW(n,p): M = HK* satisfies
// MM* = p^2*I, which forces exactly p entries of squared modulus p per row
// once all entries lie in {0, p}. Both matrices are assumed to pass
// verify_weighing (checked by callers that take untrusted input).
// Throws std::invalid_argument on (n, p, m) mismatch.
Verdict verify_unbiased(const UnitWeighingMatrix& h, const UnitWeighingMatrix& k);

// ok iff every member passes verify_weighing and every distinct pair passes
// verify_unbiased. Throws std::invalid_argument on mixed (n, p, m).
Verdict verify_mutually_unbiased(std::span<const UnitWeighingMatrix> set);

// Equivalent matrix whose first nonzero entry in every row and every column
// is 1, reached by unimodular row/column scalings only. Idempotent.
UnitWeighingMatrix dephase(const UnitWeighingMatrix& w);

// Members share (n, p); root orders are unified to their least common
// multiple on construction (exponent k over m' becomes k * (m/m')).
class MUWSet {
 public:
  MUWSet() = default;
  explicit MUWSet(std::vector<UnitWeighingMatrix> members);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const UnitWeighingMatrix& operator[](int i) const { return members_[static_cast<size_t>(i)]; }
  const std::vector<UnitWeighingMatrix>& members() const { return members_; }

  int order() const { return members_.empty() ? 0 : members_[0].order(); }
  int weight() const { return members_.empty() ? 0 : members_[0].weight(); }
  int root_order() const { return members_.empty() ? 0 : members_[0].root_order(); }

  Verdict verify() const { return verify_mutually_unbiased(members_); }

 private:
  std::vector<UnitWeighingMatrix> members_;
};

}  // namespace uwm
