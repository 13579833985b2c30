#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "uwm/codes.hpp"
#include "uwm/wmatrix.hpp"

namespace uwm {

// Deterministic builders. Every function verifies its output before
// returning it (fail-closed): a result that does not pass its own verifier
// raises std::logic_error rather than being handed to the caller.

// Block-diagonal sum; summands must share the weight. Root orders are
// unified to their least common multiple.
UnitWeighingMatrix direct_sum(const UnitWeighingMatrix& w, const UnitWeighingMatrix& x);

// Pairs the k-th members across the collection, k < min size; all sets must
// share the weight. Produces min |Wi| mutually unbiased matrices of order
// sum(ni).
MUWSet direct_sum_sets(std::span<const MUWSet> collection);

// Full set of p mutually unbiased Hadamard matrices of order p, p prime.
// Odd p: matrix t has entry zeta_p^(t*k^2 + j*k) at row j, column k (the
// quadratic phase lives on the column index; cross Gram entries are then
// quadratic Gauss sums of squared modulus p). p = 2: the verified pair over
// the 4th roots. Composite p (including prime powers) is rejected.
MUWSet prime_muhm(int p);

enum class CanonicalMatrix {
  w5,           // the UW(5,4) over cube roots all UW(5,4) are equivalent to
  w7,           // the real W(7,4) with a single indecomposable block
  uw3_3_block,  // order-3 weight-3 block (cube-root Fourier matrix)
  uw4_3_block,  // order-4 weight-3 +-1 block
};

UnitWeighingMatrix canonical(CanonicalMatrix which);

// Family of mutually unbiased UW(n,3) meeting the weight-3 maximum: 9 when
// n is a multiple of 4 (all order-4 blocks), else 3 via a 3t+4l block
// decomposition with as many 4-blocks as possible. Unsupported for n < 3
// and n = 5, where no such family exists.
MUWSet weight3_tight_family(int n);

enum class DatasetKey { uw4_3, uw5_4, uw6_4, w7_4, w8_4, h8, h32 };

std::optional<DatasetKey> parse_dataset_key(const std::string& name);
std::string dataset_name(DatasetKey key);
std::string dataset_file_name(DatasetKey key);
bool dataset_is_sign_family(DatasetKey key);

// Bundled reference data, parsed but deliberately not verified here: the
// verifiers are the point, and callers exercise them.
MUWSet load_matrix_dataset(DatasetKey key, const std::filesystem::path& data_dir = {});
SignMatrixFamily load_sign_dataset(DatasetKey key, const std::filesystem::path& data_dir = {});

}  // namespace uwm
