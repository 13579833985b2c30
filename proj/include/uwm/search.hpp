#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "uwm/wmatrix.hpp"

namespace uwm {

enum class RowRelation { orthogonal, unbiased };

// A fixed row a candidate must relate to: exact inner product 0, or squared
// modulus in {0, p} (the entrywise unbiasedness condition).
struct RowConstraint {
  EntryRow row;
  RowRelation relation = RowRelation::unbiased;
};

// Pattern-major order on rows: zero patterns compare first (nonzero before
// zero, left to right), then the exponent tuples.
bool row_less(const EntryRow& a, const EntryRow& b);

// Enumerates every dephased row (first nonzero = 1, exactly p nonzero
// entries over the m-th roots) satisfying all constraints, in row_less
// order, without duplicates. visit returns false to stop early.
void for_each_candidate_row(int n, int p, int m, std::span<const RowConstraint> constraints,
                            const std::function<bool(const EntryRow&)>& visit);

std::vector<EntryRow> candidate_rows(int n, int p, int m,
                                     std::span<const RowConstraint> constraints);

struct SearchConfig {
  int n = 0;
  int p = 0;
  int m = 1;
  std::optional<int> max_set_goal;             // stop once a set this large is found
  std::optional<std::uint64_t> node_budget;    // row placements before giving up
  int jobs = 1;
  unsigned seed = 0;                           // branch-ordering shuffle; never verdicts
  bool symmetry_reduction = true;              // test hook, see below
  std::optional<UnitWeighingMatrix> first_matrix;  // override the canonical choice
  std::function<void(int depth, std::uint64_t nodes)> progress;  // side channel
};

struct SearchResult {
  MUWSet best;
  bool exhaustive = false;   // the tree was fully explored (no budget/goal stop)
  std::uint64_t nodes_visited = 0;
  std::chrono::milliseconds wall_time{0};
};

// Depth-first search for a largest mutually unbiased set over the m-th
// roots. Matrix 1 is pinned to a canonical representative (a registry matrix
// for the types known to have a single equivalence class, otherwise the
// lexicographically first dephased row-sorted matrix); later matrices are
// built row by row from dephased candidates with exact pruning, rows
// ascending within a matrix and matrices ordered by first row. When
// exhaustive, the size is the true maximum relative to those reductions;
// for every type exercised here the first-matrix class is unique, so it is
// the maximum outright. With symmetry_reduction off, matrix 1 ranges over
// all dephased row-sorted matrices and the ordering cut is dropped.
//
// Weight 1 is degenerate: unbiasedness is vacuous between monomial
// matrices, and every monomial matrix has the same dephased row-sorted
// form, so the reported "maximum" is 1 rather than the count of raw
// matrices (which grows with m).
//
// The returned best set is re-verified through verify_mutually_unbiased
// before being returned. Ties between equal-sized sets resolve to the
// lexicographically smallest serialization, so results are reproducible;
// parallel runs merge worker results the same way and match the sequential
// answer whenever no budget cutoff fires.
SearchResult search_max_muw(const SearchConfig& config);

}  // namespace uwm
