#include "uwm/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace uwm {

namespace {

std::vector<std::vector<std::uint64_t>> support_masks(const UnitWeighingMatrix& w) {
  const int n = w.order();
  const int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (w.at(i, j) != kZeroEntry) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  return rows;
}

bool overlap(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] & b[k]) return true;
  return false;
}

std::vector<std::vector<int>> row_components(const UnitWeighingMatrix& w) {
  const int n = w.order();
  const auto masks = support_masks(w);
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comps[id].push_back(u);
      for (int v = 0; v < n; ++v) {
        if (comp[v] == -1 && overlap(masks[u], masks[v])) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(comps[id].begin(), comps[id].end());
  }
  return comps;
}

}  // namespace

std::string BlockStructure::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
  return os.str();
}

BlockStructure block_structure(const UnitWeighingMatrix& w) {
  BlockStructure bs;
  for (const auto& c : row_components(w)) bs.sizes.push_back(static_cast<int>(c.size()));
  std::sort(bs.sizes.begin(), bs.sizes.end());
  return bs;
}

Decomposition decompose(const UnitWeighingMatrix& w) {
  const int n = w.order();
  auto comps = row_components(w);
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });

  Decomposition d;
  for (const auto& rows : comps) {
    // Columns touched by this component. Components partition the columns:
    // a shared column would merge the components, and empty columns cannot
    // occur when every column carries p >= 1 nonzero entries.
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) {
      for (int i : rows) {
        if (w.at(i, j) != kZeroEntry) {
          cols.push_back(j);
          break;
        }
      }
    }
    const int bn = static_cast<int>(rows.size());
    if (static_cast<int>(cols.size()) != bn)
      throw std::logic_error("component touches " + std::to_string(cols.size()) +
                             " columns but has " + std::to_string(bn) + " rows");
    UnitWeighingMatrix block(bn, w.weight(), w.root_order());
    for (int bi = 0; bi < bn; ++bi)
      for (int bj = 0; bj < bn; ++bj) block.set(bi, bj, w.at(rows[bi], cols[bj]));
    d.blocks.push_back(std::move(block));
    d.row_perm.insert(d.row_perm.end(), rows.begin(), rows.end());
    d.col_perm.insert(d.col_perm.end(), cols.begin(), cols.end());
    d.block_cols.push_back(std::move(cols));
  }
  return d;
}

Verdict blockwise_unbiased(const UnitWeighingMatrix& h, const UnitWeighingMatrix& k) {
  if (h.order() != k.order() || h.weight() != k.weight() || h.root_order() != k.root_order())
    throw std::invalid_argument("blockwise check requires matching (n, p, m)");
  for (const auto* w : {&h, &k}) {
    Verdict v = verify_weighing(*w);
    if (!v) throw std::invalid_argument("blockwise check needs weighing matrices: " + v.detail);
  }

  BlockStructure sh = block_structure(h);
  BlockStructure sk = block_structure(k);
  if (!(sh == sk))
    return Verdict::mismatch("block structures differ: [" + sh.to_string() + "] vs [" +
                             sk.to_string() + "]");

  Decomposition dh = decompose(h);
  Decomposition dk = decompose(k);

  std::map<std::vector<int>, int> k_by_cols;
  for (size_t b = 0; b < dk.block_cols.size(); ++b) k_by_cols[dk.block_cols[b]] = static_cast<int>(b);

  bool aligned = dh.block_cols.size() == dk.block_cols.size();
  std::vector<std::pair<int, int>> pairs;
  for (size_t b = 0; aligned && b < dh.block_cols.size(); ++b) {
    auto it = k_by_cols.find(dh.block_cols[b]);
    if (it == k_by_cols.end())
      aligned = false;
    else
      pairs.push_back({static_cast<int>(b), it->second});
  }
  if (!aligned) {
    // Same size multiset but the column partitions disagree; the blockwise
    // factorization does not apply, so answer with the global check.
    Verdict v = verify_unbiased(h, k);
    if (!v) v.detail = "column partitions differ; global check: " + v.detail;
    return v;
  }

  for (auto [bh, bk] : pairs) {
    Verdict v = verify_unbiased(dh.blocks[bh], dk.blocks[bk]);
    if (!v) {
      v.detail = "block " + std::to_string(bh) + " (order " +
                 std::to_string(dh.blocks[bh].order()) + "): " + v.detail;
      return v;
    }
  }
  return Verdict::pass();
}

}  // namespace uwm
