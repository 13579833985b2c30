#pragma once

#include <vector>

#include "uwm/verdict.hpp"
#include "uwm/wmatrix.hpp"

namespace uwm {

// Multiset of indecomposable block orders, sorted ascending. Sums to n.
struct BlockStructure {
  std::vector<int> sizes;
  bool operator==(const BlockStructure&) const = default;
  std::string to_string() const;
};

// Connected-component sizes of the row graph that joins two rows whenever
// they share a column with both entries nonzero. Bitset support rows make
// the pairwise overlap test a word-wise AND.
BlockStructure block_structure(const UnitWeighingMatrix& w);

// Indecomposable blocks plus the row/column permutations that align W with
// their direct sum: permuted(i, j) = W(row_perm[i], col_perm[j]) equals
// direct_sum(blocks...). Blocks are ordered by (size, smallest original row);
// rows and columns inside a block keep their original relative order.
struct Decomposition {
  std::vector<UnitWeighingMatrix> blocks;
  std::vector<int> row_perm;                // new index -> original row
  std::vector<int> col_perm;                // new index -> original column
  std::vector<std::vector<int>> block_cols; // original column sets, per block
};

Decomposition decompose(const UnitWeighingMatrix& w);

// Blockwise unbiasedness check (valid when both matrices have equal block
// structure). Blocks are matched by their original column sets, the unique
// correspondence under which (H1 + ... + Hk)(K1 + ... + Kk)* splits into
// HiKi* per block; with that matching the blockwise verdict coincides with
// verify_unbiased(H, K). Differing size multisets give a structure-mismatch
// verdict; equal sizes over different column partitions fall back to the
// global check so the two routes always agree.
Verdict blockwise_unbiased(const UnitWeighingMatrix& h, const UnitWeighingMatrix& k);

}  // namespace uwm
