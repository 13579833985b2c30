#include "uwm/wmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uwm {

namespace {

void check_entry(int m, Entry v) {
  if (v != kZeroEntry && (v < 0 || v >= m))
    throw std::invalid_argument("entry exponent out of range for root order " + std::to_string(m));
}

std::string cell_name(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

}  // namespace

UnitWeighingMatrix::UnitWeighingMatrix(int n, int p, int m)
    : n_(n), p_(p), m_(m), cells_(static_cast<size_t>(n) * n, kZeroEntry) {
  if (n < 1 || p < 1 || p > n) throw std::invalid_argument("need 1 <= p <= n");
  if (m < 1) throw std::invalid_argument("root order must be positive");
}

UnitWeighingMatrix UnitWeighingMatrix::from_cells(int n, int p, int m, std::vector<Entry> cells) {
  UnitWeighingMatrix w(n, p, m);
  if (cells.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("cell grid size mismatch");
  for (Entry v : cells) check_entry(m, v);
  w.cells_ = std::move(cells);
  return w;
}

void UnitWeighingMatrix::set(int i, int j, Entry v) {
  check_entry(m_, v);
  cells_[static_cast<size_t>(i) * n_ + j] = v;
}

void UnitWeighingMatrix::set_row(int i, std::span<const Entry> r) {
  if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("row length mismatch");
  for (Entry v : r) check_entry(m_, v);
  std::copy(r.begin(), r.end(), cells_.begin() + static_cast<size_t>(i) * n_);
}

UnitWeighingMatrix UnitWeighingMatrix::embedded(int new_m) const {
  if (new_m % m_ != 0) throw std::invalid_argument("embedding target must be a multiple of m");
  if (new_m == m_) return *this;
  const int stride = new_m / m_;
  UnitWeighingMatrix out(n_, p_, new_m);
  for (size_t idx = 0; idx < cells_.size(); ++idx) {
    out.cells_[idx] = cells_[idx] == kZeroEntry ? kZeroEntry
                                                : static_cast<Entry>(cells_[idx] * stride);
  }
  return out;
}

Monomial identity_monomial(int n) {
  Monomial mono;
  mono.src.resize(n);
  std::iota(mono.src.begin(), mono.src.end(), 0);
  mono.phase.assign(n, 0);
  return mono;
}

UnitWeighingMatrix transformed(const UnitWeighingMatrix& w, const Monomial& rows,
                               const Monomial& cols) {
  const int n = w.order(), m = w.root_order();
  UnitWeighingMatrix out(n, w.weight(), m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Entry v = w.at(rows.src[i], cols.src[j]);
      if (v != kZeroEntry) v = static_cast<Entry>((v + rows.phase[i] + cols.phase[j]) % m);
      out.set(i, j, v);
    }
  }
  return out;
}

CycInt row_inner_product(std::span<const Entry> a, std::span<const Entry> b, int m) {
  // Accumulate exponent-difference counts, then combine through the canonical
  // monomial table once.
  std::vector<BigInt> raw(static_cast<size_t>(m), 0);
  bool any = false;
  for (size_t c = 0; c < a.size(); ++c) {
    if (a[c] == kZeroEntry || b[c] == kZeroEntry) continue;
    int d = a[c] - b[c];
    if (d < 0) d += m;
    ++raw[static_cast<size_t>(d)];
    any = true;
  }
  if (!any) return CycInt::zero(m);
  return CycInt::reduce(m, raw);
}

std::vector<std::vector<CycInt>> gram(const UnitWeighingMatrix& w) {
  const int n = w.order(), m = w.root_order();
  std::vector<std::vector<CycInt>> g(n);
  for (int i = 0; i < n; ++i) {
    g[i].reserve(n);
    for (int j = 0; j < n; ++j) g[i].push_back(row_inner_product(w.row(i), w.row(j), m));
  }
  return g;
}

Verdict verify_weighing(const UnitWeighingMatrix& w) {
  const int n = w.order(), p = w.weight(), m = w.root_order();
  for (int i = 0; i < n; ++i) {
    int cnt = 0;
    for (int j = 0; j < n; ++j) cnt += w.at(i, j) != kZeroEntry;
    if (cnt != p)
      return Verdict::fail("row " + std::to_string(i) + " has " + std::to_string(cnt) +
                               " nonzero entries, expected " + std::to_string(p),
                           i, -1);
  }
  for (int j = 0; j < n; ++j) {
    int cnt = 0;
    for (int i = 0; i < n; ++i) cnt += w.at(i, j) != kZeroEntry;
    if (cnt != p)
      return Verdict::fail("column " + std::to_string(j) + " has " + std::to_string(cnt) +
                               " nonzero entries, expected " + std::to_string(p),
                           -1, j);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      CycInt e = row_inner_product(w.row(i), w.row(j), m);
      const bool ok = (i == j) ? e.equals_integer(p) : e.is_zero();
      if (!ok)
        return Verdict::fail("gram entry " + cell_name(i, j) + " = " + e.to_string() +
                                 ", expected " + (i == j ? std::to_string(p) : "0"),
                             i, j);
    }
  }
  return Verdict::pass();
}

Verdict verify_unbiased(const UnitWeighingMatrix& h, const UnitWeighingMatrix& k) {
  if (h.order() != k.order() || h.weight() != k.weight() || h.root_order() != k.root_order())
    throw std::invalid_argument("unbiasedness requires matching (n, p, m)");
  const int n = h.order(), m = h.root_order();
  const BigInt p = h.weight();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CycInt e = row_inner_product(h.row(i), k.row(j), m);
      if (e.is_zero()) continue;
      CycInt q = e.times_conjugate();
      if (!q.equals_integer(p))
        return Verdict::fail("entry " + cell_name(i, j) + " of HK* has squared modulus " +
                                 q.to_string() + ", expected 0 or " + p.str(),
                             i, j);
    }
  }
  return Verdict::pass();
}

Verdict verify_mutually_unbiased(std::span<const UnitWeighingMatrix> set) {
  if (set.empty()) return Verdict::pass();
  const int n = set[0].order(), p = set[0].weight(), m = set[0].root_order();
  for (const auto& w : set) {
    if (w.order() != n || w.weight() != p || w.root_order() != m)
      throw std::invalid_argument("set mixes (n, p, m) parameters");
  }
  for (size_t a = 0; a < set.size(); ++a) {
    Verdict v = verify_weighing(set[a]);
    if (!v) {
      v.detail = "member " + std::to_string(a) + ": " + v.detail;
      return v;
    }
  }
  for (size_t a = 0; a < set.size(); ++a) {
    for (size_t b = a + 1; b < set.size(); ++b) {
      Verdict v = verify_unbiased(set[a], set[b]);
      if (!v) {
        v.detail = "pair (" + std::to_string(a) + "," + std::to_string(b) + "): " + v.detail;
        return v;
      }
    }
  }
  return Verdict::pass();
}

UnitWeighingMatrix dephase(const UnitWeighingMatrix& w) {
  const int n = w.order(), m = w.root_order();
  // Unknowns: row scalings r_i and column scalings c_j (exponents). Every
  // leading cell (first nonzero of a row or of a column) yields the relation
  // r_i + c_j + e_ij = 0 (mod m). The relation graph on rows and columns is
  // a forest: around any would-be cycle, row-leading edges force strictly
  // smaller column indices and column-leading edges strictly smaller row
  // indices, which cannot close up. Propagation therefore always succeeds;
  // free components are pinned to 0 for determinism.
  struct Edge {
    int row, col;
    int e;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (w.at(i, j) != kZeroEntry) {
        edges.push_back({i, j, w.at(i, j)});
        break;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (w.at(i, j) != kZeroEntry) {
        edges.push_back({i, j, w.at(i, j)});
        break;
      }
    }
  }
  // adjacency over vertices 0..n-1 (rows) and n..2n-1 (columns)
  std::vector<std::vector<std::pair<int, int>>> adj(2 * n);  // (other vertex, e)
  for (const Edge& ed : edges) {
    adj[ed.row].push_back({n + ed.col, ed.e});
    adj[n + ed.col].push_back({ed.row, ed.e});
  }
  std::vector<int> val(2 * n, -1);
  for (int start = 0; start < 2 * n; ++start) {
    if (val[start] != -1 || adj[start].empty()) continue;
    val[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, e] : adj[u]) {
        int need = ((-e - val[u]) % m + m) % m;
        if (val[v] == -1) {
          val[v] = need;
          stack.push_back(v);
        } else if (val[v] != need) {
          throw std::logic_error("dephasing relations inconsistent");
        }
      }
    }
  }
  for (int& v : val)
    if (v == -1) v = 0;

  UnitWeighingMatrix out(n, w.weight(), m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Entry v = w.at(i, j);
      if (v != kZeroEntry) v = static_cast<Entry>((v + val[i] + val[n + j]) % m);
      out.set(i, j, v);
    }
  }
  return out;
}

MUWSet::MUWSet(std::vector<UnitWeighingMatrix> members) : members_(std::move(members)) {
  if (members_.empty()) return;
  const int n = members_[0].order(), p = members_[0].weight();
  long long m = 1;
  for (const auto& w : members_) {
    if (w.order() != n || w.weight() != p)
      throw std::invalid_argument("set members must share order and weight");
    m = std::lcm<long long>(m, w.root_order());
  }
  if (m > max_root_order()) throw std::invalid_argument("combined root order exceeds the cap");
  for (auto& w : members_) w = w.embedded(static_cast<int>(m));
}

}  // namespace uwm
