#include "uwm/search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

#include "uwm/constructions.hpp"

namespace uwm {

namespace {

bool row_satisfies(const EntryRow& r, const RowConstraint& c, int m, const BigInt& p) {
  CycInt e = row_inner_product(r, c.row, m);
  if (c.relation == RowRelation::orthogonal) return e.is_zero();
  if (e.is_zero()) return true;
  return e.times_conjugate().equals_integer(p);
}

}  // namespace

bool row_less(const EntryRow& a, const EntryRow& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    const bool za = a[i] == kZeroEntry, zb = b[i] == kZeroEntry;
    if (za != zb) return zb;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != kZeroEntry && a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void for_each_candidate_row(int n, int p, int m, std::span<const RowConstraint> constraints,
                            const std::function<bool(const EntryRow&)>& visit) {
  if (p < 1 || p > n) throw std::invalid_argument("need 1 <= p <= n");
  for (const auto& c : constraints)
    if (static_cast<int>(c.row.size()) != n)
      throw std::invalid_argument("constraint row length mismatch");
  const BigInt pbig = p;

  std::vector<int> pos(p);  // nonzero positions, ascending
  for (int i = 0; i < p; ++i) pos[i] = i;
  EntryRow row(static_cast<size_t>(n), kZeroEntry);

  auto emit_pattern = [&]() -> bool {
    // first nonzero pinned to exponent 0; the rest run through an odometer
    std::vector<Entry> exps(static_cast<size_t>(p), 0);
    while (true) {
      std::fill(row.begin(), row.end(), kZeroEntry);
      for (int i = 0; i < p; ++i) row[static_cast<size_t>(pos[i])] = exps[static_cast<size_t>(i)];
      bool ok = true;
      for (const auto& c : constraints) {
        if (!row_satisfies(row, c, m, pbig)) {
          ok = false;
          break;
        }
      }
      if (ok && !visit(row)) return false;
      int i = p - 1;
      while (i >= 1 && exps[static_cast<size_t>(i)] == m - 1) exps[static_cast<size_t>(i--)] = 0;
      if (i < 1) break;
      ++exps[static_cast<size_t>(i)];
    }
    return true;
  };

  while (true) {
    if (!emit_pattern()) return;
    // next combination of nonzero positions in lexicographic pattern order
    int i = p - 1;
    while (i >= 0 && pos[i] == n - p + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < p; ++j) pos[j] = pos[j - 1] + 1;
  }
}

std::vector<EntryRow> candidate_rows(int n, int p, int m,
                                     std::span<const RowConstraint> constraints) {
  std::vector<EntryRow> out;
  for_each_candidate_row(n, p, m, constraints, [&](const EntryRow& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

namespace {

using Pool = std::vector<EntryRow>;

struct Ctx {
  int n, p, m;
  BigInt pbig;
  std::optional<int> goal;
  std::optional<std::uint64_t> budget;
  bool order_cut = true;
  std::function<void(int, std::uint64_t)> progress;

  std::uint64_t nodes = 0;
  bool budget_hit = false;
  bool goal_hit = false;

  std::vector<UnitWeighingMatrix> best;
  std::vector<Entry> best_key;

  bool stopped() const { return budget_hit || goal_hit; }

  // one node = one row placement; returns false once the budget is gone
  bool tick(int depth) {
    ++nodes;
    if (progress && (nodes & ((std::uint64_t{1} << 20) - 1)) == 0) progress(depth, nodes);
    if (budget && nodes > *budget) budget_hit = true;
    return !stopped();
  }

  static std::vector<Entry> key_of(const std::vector<UnitWeighingMatrix>& set) {
    std::vector<Entry> key;
    for (const auto& w : set)
      for (int i = 0; i < w.order(); ++i) {
        auto r = w.row(i);
        key.insert(key.end(), r.begin(), r.end());
      }
    return key;
  }

  void consider(const std::vector<UnitWeighingMatrix>& set) {
    if (set.size() < best.size()) return;
    std::vector<Entry> key = key_of(set);
    if (set.size() == best.size() && !best.empty() && !(key < best_key)) return;
    best = set;
    best_key = std::move(key);
    if (goal && static_cast<int>(best.size()) >= *goal) goal_hit = true;
  }

  void merge(const Ctx& other) {
    nodes += other.nodes;
    budget_hit = budget_hit || other.budget_hit;
    goal_hit = goal_hit || other.goal_hit;
    if (other.best.size() > best.size() ||
        (other.best.size() == best.size() && !other.best.empty() && other.best_key < best_key))
      {
        best = other.best;
        best_key = other.best_key;
      }
  }
};

bool rows_unbiased(std::span<const Entry> a, std::span<const Entry> b, int m, const BigInt& p) {
  CycInt e = row_inner_product(a, b, m);
  if (e.is_zero()) return true;
  return e.times_conjugate().equals_integer(p);
}

Pool filter_pool(const Pool& pool, const UnitWeighingMatrix& w, int m, const BigInt& p) {
  Pool out;
  out.reserve(pool.size());
  for (const EntryRow& r : pool) {
    bool ok = true;
    for (int i = 0; i < w.order() && ok; ++i) ok = rows_unbiased(r, w.row(i), m, p);
    if (ok) out.push_back(r);
  }
  return out;
}

UnitWeighingMatrix matrix_from_rows(int n, int p, int m, const std::vector<const EntryRow*>& rows) {
  UnitWeighingMatrix w(n, p, m);
  for (int i = 0; i < n; ++i) w.set_row(i, *rows[static_cast<size_t>(i)]);
  return w;
}

void extend_set(Ctx& ctx, std::vector<UnitWeighingMatrix>& set, const Pool& pool,
                const EntryRow* min_first_row, const std::vector<size_t>* top_order);

// Builds the rows of one more matrix from `pool`, rows strictly ascending
// starting at pool index `from`, then recurses into extend_set.
void place_rows(Ctx& ctx, std::vector<UnitWeighingMatrix>& set, const Pool& pool,
                std::vector<const EntryRow*>& rows, std::vector<int>& col_count, size_t from) {
  const int n = ctx.n, p = ctx.p;
  if (static_cast<int>(rows.size()) == n) {
    UnitWeighingMatrix done = matrix_from_rows(n, p, ctx.m, rows);
    // Distinct matrices never share a row when p >= 2 (a shared row would
    // give a cross entry of squared modulus p^2), but for the vacuous p = 1
    // case a completed matrix passes its own unbiasedness filter; refuse
    // duplicates so the recursion terminates.
    for (const auto& prev : set)
      if (prev == done) return;
    set.push_back(std::move(done));
    ctx.consider(set);
    if (!ctx.stopped()) {
      Pool next = filter_pool(pool, set.back(), ctx.m, ctx.pbig);
      const EntryRow first(set.back().row(0).begin(), set.back().row(0).end());
      extend_set(ctx, set, next, &first, nullptr);
    }
    set.pop_back();
    return;
  }
  const int remaining_after = n - static_cast<int>(rows.size()) - 1;
  for (size_t idx = from; idx < pool.size(); ++idx) {
    if (ctx.stopped()) return;
    const EntryRow& r = pool[idx];
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      if (r[static_cast<size_t>(j)] != kZeroEntry && col_count[static_cast<size_t>(j)] >= p)
        ok = false;
    for (const EntryRow* placed : rows) {
      if (!ok) break;
      ok = row_inner_product(r, *placed, ctx.m).is_zero();
    }
    if (!ok) continue;
    for (int j = 0; j < n; ++j)
      if (r[static_cast<size_t>(j)] != kZeroEntry) ++col_count[static_cast<size_t>(j)];
    bool feasible = true;
    for (int j = 0; j < n && feasible; ++j)
      feasible = p - col_count[static_cast<size_t>(j)] <= remaining_after;
    if (feasible && ctx.tick(static_cast<int>(set.size()))) {
      rows.push_back(&r);
      place_rows(ctx, set, pool, rows, col_count, idx + 1);
      rows.pop_back();
    }
    for (int j = 0; j < n; ++j)
      if (r[static_cast<size_t>(j)] != kZeroEntry) --col_count[static_cast<size_t>(j)];
  }
}

void extend_set(Ctx& ctx, std::vector<UnitWeighingMatrix>& set, const Pool& pool,
                const EntryRow* min_first_row, const std::vector<size_t>* top_order) {
  const size_t count = top_order ? top_order->size() : pool.size();
  for (size_t t = 0; t < count; ++t) {
    if (ctx.stopped()) return;
    const size_t idx = top_order ? (*top_order)[t] : t;
    const EntryRow& r = pool[idx];
    if (ctx.order_cut && min_first_row && !row_less(*min_first_row, r)) continue;
    if (!ctx.tick(static_cast<int>(set.size()))) return;
    std::vector<const EntryRow*> rows{&r};
    std::vector<int> col_count(static_cast<size_t>(ctx.n), 0);
    for (int j = 0; j < ctx.n; ++j)
      if (r[static_cast<size_t>(j)] != kZeroEntry) col_count[static_cast<size_t>(j)] = 1;
    place_rows(ctx, set, pool, rows, col_count, idx + 1);
  }
}

// Row-by-row DFS over complete dephased row-sorted weighing matrices. When
// first_only, stops at the first (lexicographically least) completion;
// otherwise every completion is handed to on_complete.
void matrix1_dfs(Ctx& ctx, const Pool& all_rows, std::vector<const EntryRow*>& rows,
                 std::vector<int>& col_count, size_t from, bool first_only,
                 const std::function<void(UnitWeighingMatrix)>& on_complete, bool& done) {
  const int n = ctx.n, p = ctx.p;
  if (static_cast<int>(rows.size()) == n) {
    on_complete(matrix_from_rows(n, p, ctx.m, rows));
    done = first_only;
    return;
  }
  const int remaining_after = n - static_cast<int>(rows.size()) - 1;
  for (size_t idx = from; idx < all_rows.size(); ++idx) {
    if (done || ctx.stopped()) return;
    const EntryRow& r = all_rows[idx];
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      if (r[static_cast<size_t>(j)] != kZeroEntry && col_count[static_cast<size_t>(j)] >= p)
        ok = false;
    for (const EntryRow* placed : rows) {
      if (!ok) break;
      ok = row_inner_product(r, *placed, ctx.m).is_zero();
    }
    if (!ok) continue;
    for (int j = 0; j < n; ++j)
      if (r[static_cast<size_t>(j)] != kZeroEntry) ++col_count[static_cast<size_t>(j)];
    bool feasible = true;
    for (int j = 0; j < n && feasible; ++j)
      feasible = p - col_count[static_cast<size_t>(j)] <= remaining_after;
    if (feasible && ctx.tick(0)) {
      rows.push_back(&r);
      matrix1_dfs(ctx, all_rows, rows, col_count, idx + 1, first_only, on_complete, done);
      rows.pop_back();
    }
    for (int j = 0; j < n; ++j)
      if (r[static_cast<size_t>(j)] != kZeroEntry) --col_count[static_cast<size_t>(j)];
    if (done) return;
  }
}

// Canonical first matrices for the types whose equivalence class is unique.
std::optional<UnitWeighingMatrix> registry_first_matrix(int n, int p, int m) {
  std::optional<UnitWeighingMatrix> w;
  if (n == 2 && p == 2) {
    UnitWeighingMatrix h(2, 2, 2);
    h.set(0, 0, 0);
    h.set(0, 1, 0);
    h.set(1, 0, 0);
    h.set(1, 1, 1);
    w = h;
  } else if (n == 3 && p == 3) {
    w = canonical(CanonicalMatrix::uw3_3_block);
  } else if (n == 4 && p == 3) {
    w = canonical(CanonicalMatrix::uw4_3_block);
  } else if (n == 5 && p == 4) {
    w = canonical(CanonicalMatrix::w5);
  } else if (n == 7 && p == 4) {
    w = canonical(CanonicalMatrix::w7);
  }
  if (!w || m % w->root_order() != 0) return std::nullopt;
  return w->embedded(m);
}

void run_from_first_matrix(Ctx& ctx, const UnitWeighingMatrix& m1, int jobs, unsigned seed) {
  std::vector<UnitWeighingMatrix> set{m1};
  ctx.consider(set);
  if (ctx.stopped()) return;

  Pool pool;
  {
    std::vector<RowConstraint> cons;
    for (int i = 0; i < ctx.n; ++i)
      cons.push_back({EntryRow(m1.row(i).begin(), m1.row(i).end()), RowRelation::unbiased});
    pool = candidate_rows(ctx.n, ctx.p, ctx.m, cons);
  }

  std::vector<size_t> top_order(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) top_order[i] = i;
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(top_order.begin(), top_order.end(), rng);
  }

  if (jobs <= 1 || pool.size() < 2) {
    extend_set(ctx, set, pool, nullptr, &top_order);
    return;
  }

  // Fan out over the first-row choice of matrix 2. Tasks carry their own
  // deterministic budget slice so a fixed (config, jobs) reproduces exactly.
  const size_t tasks = top_order.size();
  std::vector<Ctx> locals(tasks);
  for (size_t t = 0; t < tasks; ++t) {
    Ctx& c = locals[t];
    c.n = ctx.n;
    c.p = ctx.p;
    c.m = ctx.m;
    c.pbig = ctx.pbig;
    c.goal = ctx.goal;
    c.order_cut = ctx.order_cut;
    c.progress = ctx.progress;
    if (ctx.budget) c.budget = *ctx.budget / tasks + (t < *ctx.budget % tasks ? 1 : 0);
  }
  std::atomic<size_t> next_task{0};
  auto worker = [&]() {
    while (true) {
      const size_t t = next_task.fetch_add(1);
      if (t >= tasks) return;
      std::vector<UnitWeighingMatrix> local_set{m1};
      std::vector<size_t> one{top_order[t]};
      extend_set(locals[t], local_set, pool, nullptr, &one);
    }
  };
  std::vector<std::thread> threads;
  for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  for (const Ctx& c : locals) ctx.merge(c);
}

}  // namespace

SearchResult search_max_muw(const SearchConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  if (config.n < 1 || config.p < 1 || config.p > config.n || config.m < 1)
    throw std::invalid_argument("bad search configuration");

  Ctx ctx;
  ctx.n = config.n;
  ctx.p = config.p;
  ctx.m = config.m;
  ctx.pbig = config.p;
  ctx.goal = config.max_set_goal;
  ctx.budget = config.node_budget;
  ctx.order_cut = config.symmetry_reduction;
  ctx.progress = config.progress;
  ctx.consider({});

  std::optional<UnitWeighingMatrix> m1;
  if (config.first_matrix) {
    if (config.first_matrix->order() != config.n || config.first_matrix->weight() != config.p)
      throw std::invalid_argument("first_matrix does not match the configuration");
    if (config.m % config.first_matrix->root_order() != 0)
      throw std::invalid_argument("first_matrix root order must divide m");
    Verdict v = verify_weighing(*config.first_matrix);
    if (!v) throw std::invalid_argument("first_matrix is not a weighing matrix: " + v.detail);
    m1 = config.first_matrix->embedded(config.m);
  } else if (config.symmetry_reduction) {
    m1 = registry_first_matrix(config.n, config.p, config.m);
  }

  if (m1) {
    run_from_first_matrix(ctx, *m1, config.jobs, config.seed);
  } else {
    Pool all_rows = candidate_rows(config.n, config.p, config.m, {});
    std::vector<const EntryRow*> rows;
    std::vector<int> col_count(static_cast<size_t>(config.n), 0);
    bool done = false;
    if (config.symmetry_reduction) {
      std::optional<UnitWeighingMatrix> found;
      matrix1_dfs(ctx, all_rows, rows, col_count, 0, true,
                  [&](UnitWeighingMatrix w) { found = std::move(w); }, done);
      if (found) run_from_first_matrix(ctx, *found, config.jobs, config.seed);
    } else {
      matrix1_dfs(ctx, all_rows, rows, col_count, 0, false,
                  [&](UnitWeighingMatrix w) {
                    // enumerate sets around every possible first matrix
                    run_from_first_matrix(ctx, w, 1, config.seed);
                  },
                  done);
    }
  }

  SearchResult res;
  res.best = MUWSet(ctx.best);
  res.exhaustive = !ctx.budget_hit && !ctx.goal_hit;
  res.nodes_visited = ctx.nodes;
  res.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  Verdict v = res.best.verify();
  if (!v) throw std::logic_error("search produced an unverified set: " + v.detail);
  return res;
}

}  // namespace uwm
