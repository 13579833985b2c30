// Command-line surface over the library: exact verification, bounds, block
// structure, search, constructions, bundled datasets, and the +-1 family
// checks. Machine-readable key=value lines go to stdout, human summaries to
// stderr. Exit codes: 0 verified/found, 1 verified-false, 2 usage or parse
// error.

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "uwm/bounds.hpp"
#include "uwm/codes.hpp"
#include "uwm/constructions.hpp"
#include "uwm/io.hpp"
#include "uwm/search.hpp"
#include "uwm/structure.hpp"
#include "uwm/wmatrix.hpp"

namespace fs = std::filesystem;
using namespace uwm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

std::string verdict_kind(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::ok:
      return "ok";
    case VerdictKind::violation:
      return "violation";
    case VerdictKind::structure_mismatch:
      return "structure-mismatch";
  }
  return "?";
}

void print_verdict(const Verdict& v) {
  std::cout << "ok=" << (v ? "true" : "false") << "\n";
  if (!v) {
    std::cout << "kind=" << verdict_kind(v) << "\n";
    if (v.i >= 0) std::cout << "i=" << v.i << "\n";
    if (v.j >= 0) std::cout << "j=" << v.j << "\n";
    std::cout << "detail=" << v.detail << "\n";
  }
}

fs::path g_data_dir;  // empty = default

fs::path data_dir() { return g_data_dir.empty() ? default_data_dir() : g_data_dir; }

int cmd_verify(const std::vector<std::string>& files) {
  std::vector<UnitWeighingMatrix> all;
  for (const auto& f : files) {
    auto ms = parse_matrices(read_file(f));
    all.insert(all.end(), ms.begin(), ms.end());
  }
  std::cout << "matrices=" << all.size() << "\n";
  Verdict v = all.size() == 1 ? verify_weighing(all[0]) : MUWSet(all).verify();
  print_verdict(v);
  std::cerr << (v ? "verified" : "verification failed: " + v.detail) << "\n";
  return v ? kExitOk : kExitFalse;
}

int cmd_unbiased(const std::string& f1, const std::string& f2) {
  auto a = parse_matrices(read_file(f1));
  auto b = parse_matrices(read_file(f2));
  if (a.size() != 1 || b.size() != 1)
    throw std::invalid_argument("unbiased expects two single-matrix files");
  long long m = std::lcm(a[0].root_order(), b[0].root_order());
  UnitWeighingMatrix h = a[0].embedded(static_cast<int>(m));
  UnitWeighingMatrix k = b[0].embedded(static_cast<int>(m));
  for (const auto* w : {&h, &k}) {
    Verdict v = verify_weighing(*w);
    if (!v) {
      std::cout << "weighing=false\n";
      print_verdict(v);
      std::cerr << "input is not a weighing matrix: " << v.detail << "\n";
      return kExitFalse;
    }
  }
  Verdict v = verify_unbiased(h, k);
  print_verdict(v);
  std::cerr << (v ? "unbiased" : "not unbiased: " + v.detail) << "\n";
  return v ? kExitOk : kExitFalse;
}

int cmd_blocks(const std::string& file) {
  auto ms = parse_matrices(read_file(file));
  if (ms.size() != 1) throw std::invalid_argument("blocks expects a single-matrix file");
  Verdict v = verify_weighing(ms[0]);
  if (!v) {
    print_verdict(v);
    std::cerr << "not a weighing matrix: " << v.detail << "\n";
    return kExitFalse;
  }
  BlockStructure bs = block_structure(ms[0]);
  std::cout << "blocks=" << bs.to_string() << "\n";
  std::cout << "count=" << bs.sizes.size() << "\n";
  std::cerr << "block structure [" << bs.to_string() << "]\n";
  return kExitOk;
}

int cmd_bound(int n, int w, bool real) {
  BoundReport r = muw_upper_bound(n, w, real ? Setting::real : Setting::complex_roots);
  std::cout << "n=" << n << "\n"
            << "w=" << w << "\n"
            << "setting=" << (real ? "real" : "complex") << "\n"
            << "absolute=" << rational_str(r.absolute_exact) << "\n"
            << "special=" << (r.special ? rational_str(*r.special) : std::string("none")) << "\n";
  if (r.weight_specific) std::cout << "weight_specific=" << *r.weight_specific << "\n";
  std::cout << "effective=" << r.effective << "\n";
  std::cerr << "upper bound " << r.effective << " for " << (real ? "W(" : "UW(") << n << "," << w
            << ")\n";
  return kExitOk;
}

void print_table1_row(const Table1Row& row) {
  std::cout << "type=" << (row.setting == Setting::real ? "W" : "UW") << "(" << row.n << ","
            << row.w << ")"
            << " corollary=" << rational_str(row.corollary)
            << " corollary_floor=" << row.corollary_floor << " smallest=" << row.smallest
            << " smallest_source=" << row.smallest_source << " largest=" << row.largest_example
            << " root=" << row.example_root_order << " example_source=" << row.example_source
            << "\n";
}

int cmd_table1(std::optional<int> n, std::optional<int> w, bool all) {
  if (all) {
    for (auto [tn, tw] : table1_keys()) print_table1_row(table1_report(tn, tw));
    return kExitOk;
  }
  if (!n || !w) throw std::invalid_argument("table1 needs --n and --w (or --all)");
  print_table1_row(table1_report(*n, *w));
  return kExitOk;
}

int cmd_search(int n, int w, int m, std::optional<std::uint64_t> budget, std::optional<int> goal,
               int jobs, unsigned seed, const std::string& out, bool progress) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.p = w;
  cfg.m = m;
  cfg.node_budget = budget;
  cfg.max_set_goal = goal;
  cfg.jobs = jobs;
  cfg.seed = seed;
  if (progress)
    cfg.progress = [](int depth, std::uint64_t nodes) {
      std::cerr << "... depth " << depth << ", " << nodes << " nodes\n";
    };
  SearchResult res = search_max_muw(cfg);
  std::cout << "size=" << res.best.size() << "\n"
            << "exhaustive=" << (res.exhaustive ? "true" : "false") << "\n"
            << "nodes=" << res.nodes_visited << "\n"
            << "time_ms=" << res.wall_time.count() << "\n";
  if (!out.empty()) {
    fs::create_directories(out);
    std::vector<std::pair<std::string, std::string>> manifest_files;
    for (int k = 0; k < res.best.size(); ++k) {
      std::ostringstream name;
      name << "matrix_" << k << ".uwm";
      std::string content = serialize_matrix(res.best[k]);
      write_file(fs::path(out) / name.str(), content);
      manifest_files.push_back({name.str(), content});
    }
    std::ostringstream meta;
    meta << "search n=" << n << " w=" << w << " m=" << m << " size=" << res.best.size()
         << " exhaustive=" << (res.exhaustive ? "true" : "false") << " nodes=" << res.nodes_visited
         << "\n"
         << make_manifest(manifest_files);
    write_file(fs::path(out) / "manifest.txt", meta.str());
    std::cout << "out=" << out << "\n";
  }
  std::cerr << "largest set found: " << res.best.size() << " ("
            << (res.exhaustive ? "exhaustive" : "budgeted") << ", " << res.nodes_visited
            << " nodes)\n";
  return res.best.size() >= 1 ? kExitOk : kExitFalse;
}

int emit_set(const MUWSet& set, const std::string& out) {
  std::string text = serialize_set(set);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    std::cout << "file=" << out << "\n"
              << "count=" << set.size() << "\n"
              << "sha256=" << sha256_hex(text) << "\n";
  }
  return kExitOk;
}

int cmd_construct(const std::string& family, std::optional<int> p, std::optional<int> n,
                  const std::string& name, const std::string& out) {
  if (family == "prime-muhm") {
    if (!p) throw std::invalid_argument("prime-muhm needs --p");
    return emit_set(prime_muhm(*p), out);
  }
  if (family == "weight3") {
    if (!n) throw std::invalid_argument("weight3 needs --n");
    return emit_set(weight3_tight_family(*n), out);
  }
  if (family == "canonical") {
    CanonicalMatrix which;
    if (name == "W5")
      which = CanonicalMatrix::w5;
    else if (name == "W7")
      which = CanonicalMatrix::w7;
    else if (name == "UW3_3_BLOCK")
      which = CanonicalMatrix::uw3_3_block;
    else if (name == "UW4_3_BLOCK")
      which = CanonicalMatrix::uw4_3_block;
    else
      throw std::invalid_argument("canonical name must be W5, W7, UW3_3_BLOCK or UW4_3_BLOCK");
    std::string text = serialize_matrix(canonical(which));
    if (out.empty()) {
      std::cout << text;
    } else {
      write_file(out, text);
      std::cout << "file=" << out << "\n"
                << "sha256=" << sha256_hex(text) << "\n";
    }
    return kExitOk;
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

int cmd_dataset(const std::string& name, const std::string& out, bool list) {
  if (list) {
    for (DatasetKey key : {DatasetKey::uw4_3, DatasetKey::uw5_4, DatasetKey::uw6_4,
                           DatasetKey::w7_4, DatasetKey::w8_4, DatasetKey::h8, DatasetKey::h32}) {
      std::cout << "name=" << dataset_name(key) << " file=" << dataset_file_name(key) << " kind="
                << (dataset_is_sign_family(key) ? "hexfam" : "uwmset") << "\n";
    }
    return kExitOk;
  }
  auto key = parse_dataset_key(name);
  if (!key) throw std::invalid_argument("unknown dataset '" + name + "'");
  std::string text = read_file(data_dir() / dataset_file_name(*key));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    std::cout << "file=" << out << "\n"
              << "sha256=" << sha256_hex(text) << "\n";
  }
  return kExitOk;
}

int cmd_codes_verify(const std::string& name, const std::string& file, std::optional<int> c) {
  SignMatrixFamily fam;
  if (!file.empty()) {
    fam = parse_hex_family(read_file(file));
  } else {
    auto key = parse_dataset_key(name);
    if (!key || !dataset_is_sign_family(*key))
      throw std::invalid_argument("codes-verify needs --name H8|H32 or --file");
    fam = load_sign_dataset(*key, data_dir());
  }
  if (c) fam.c = *c;
  std::cout << "n=" << fam.n << "\n"
            << "count=" << fam.members.size() << "\n"
            << "c=" << fam.c << "\n";
  Verdict flat = verify_flat_biangular_family(fam);
  std::cout << "flat_biangular=" << (flat ? "ok" : "violation") << "\n";
  if (!flat) std::cout << "detail=" << flat.detail << "\n";
  std::cout << "weights=" << weight_distribution(fam).to_string() << "\n";
  Verdict lin = check_linearity(fam);
  std::cout << "linear=" << (lin ? "ok" : "violation") << "\n";
  if (!lin) std::cout << "linear_detail=" << lin.detail << "\n";
  IdentityExtension ext = identity_extension_check(fam);
  std::cout << "identity_extension=" << (ext.extends ? "extends" : "breaks")
            << " introduced=" << ext.introduced << "\n";
  const bool ok = flat && lin;
  std::cerr << (ok ? "family verified" : "family check failed") << "\n";
  return ok ? kExitOk : kExitFalse;
}

int cmd_hex_decode(const std::string& file, const std::string& out) {
  SignMatrixFamily fam = parse_hex_family(read_file(file));
  std::vector<UnitWeighingMatrix> members;
  members.reserve(fam.members.size());
  for (const SignMatrix& m : fam.members) members.push_back(to_weighing(m));
  MUWSet set(std::move(members));
  if (out.empty()) {
    std::cout << serialize_set(set);
    return kExitOk;
  }
  fs::create_directories(out);
  std::vector<std::pair<std::string, std::string>> manifest_files;
  for (int k = 0; k < set.size(); ++k) {
    std::ostringstream name;
    name << "matrix_" << k << ".uwm";
    std::string content = serialize_matrix(set[k]);
    write_file(fs::path(out) / name.str(), content);
    manifest_files.push_back({name.str(), content});
  }
  write_file(fs::path(out) / "manifest.txt", make_manifest(manifest_files));
  std::cout << "out=" << out << "\n"
            << "count=" << set.size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for mutually unbiased (unit) weighing matrices"};
  app.require_subcommand(1);
  std::string data_dir_opt;
  app.add_option("--data-dir", data_dir_opt, "bundled dataset directory override");

  std::function<int()> action;

  // verify
  std::vector<std::string> verify_files;
  auto* sc_verify = app.add_subcommand("verify", "verify weighing / mutual unbiasedness");
  sc_verify->add_option("files", verify_files, "matrix or set files")->required();
  sc_verify->callback([&]() { action = [&]() { return cmd_verify(verify_files); }; });

  // unbiased
  std::string ub_f1, ub_f2;
  auto* sc_ub = app.add_subcommand("unbiased", "check one pair for unbiasedness");
  sc_ub->add_option("file1", ub_f1)->required();
  sc_ub->add_option("file2", ub_f2)->required();
  sc_ub->callback([&]() { action = [&]() { return cmd_unbiased(ub_f1, ub_f2); }; });

  // blocks
  std::string blocks_file;
  auto* sc_blocks = app.add_subcommand("blocks", "block structure of a weighing matrix");
  sc_blocks->add_option("file", blocks_file)->required();
  sc_blocks->callback([&]() { action = [&]() { return cmd_blocks(blocks_file); }; });

  // bound
  int bound_n = 0, bound_w = 0;
  bool bound_real = false;
  auto* sc_bound = app.add_subcommand("bound", "upper bounds for a (n, w) type");
  sc_bound->add_option("--n", bound_n)->required();
  sc_bound->add_option("--w", bound_w)->required();
  sc_bound->add_flag("--real", bound_real, "real setting");
  sc_bound->callback([&]() { action = [&]() { return cmd_bound(bound_n, bound_w, bound_real); }; });

  // table1
  int t1_n = -1, t1_w = -1;
  bool t1_all = false;
  auto* sc_t1 = app.add_subcommand("table1", "summary-table row for a (n, w) type");
  sc_t1->add_option("--n", t1_n);
  sc_t1->add_option("--w", t1_w);
  sc_t1->add_flag("--all", t1_all, "print every supported row");
  sc_t1->callback([&]() {
    action = [&]() {
      return cmd_table1(t1_n >= 0 ? std::optional<int>(t1_n) : std::nullopt,
                        t1_w >= 0 ? std::optional<int>(t1_w) : std::nullopt, t1_all);
    };
  });

  // search
  int s_n = 0, s_w = 0, s_m = 0, s_jobs = 1;
  std::uint64_t s_budget = 100000000ULL;
  int s_goal = 0;
  unsigned s_seed = 0;
  std::string s_out;
  bool s_progress = false;
  auto* sc_search = app.add_subcommand("search", "search for a maximal mutually unbiased set");
  sc_search->add_option("--n", s_n)->required();
  sc_search->add_option("--w,--p", s_w)->required();
  sc_search->add_option("--m", s_m)->required();
  sc_search->add_option("--budget", s_budget, "node budget (default 1e8)");
  sc_search->add_option("--goal", s_goal, "stop once a set this large is found");
  sc_search->add_option("--jobs", s_jobs, "worker threads");
  sc_search->add_option("--seed", s_seed, "branch-ordering shuffle; never affects verdicts");
  sc_search->add_option("--out", s_out, "directory for result matrices + manifest");
  sc_search->add_flag("--progress", s_progress, "progress notes on stderr");
  sc_search->callback([&]() {
    action = [&]() {
      return cmd_search(s_n, s_w, s_m, s_budget, s_goal > 0 ? std::optional<int>(s_goal) : std::nullopt,
                        s_jobs, s_seed, s_out, s_progress);
    };
  });

  // construct
  std::string c_family, c_name, c_out;
  int c_p = 0, c_n = 0;
  auto* sc_con = app.add_subcommand("construct", "emit a deterministic construction");
  sc_con->add_option("--family", c_family, "prime-muhm | weight3 | canonical")->required();
  sc_con->add_option("--p", c_p, "prime order (prime-muhm)");
  sc_con->add_option("--n", c_n, "order (weight3)");
  sc_con->add_option("--name", c_name, "canonical matrix name");
  sc_con->add_option("--out", c_out, "output file (default stdout)");
  sc_con->callback([&]() {
    action = [&]() {
      return cmd_construct(c_family, c_p > 0 ? std::optional<int>(c_p) : std::nullopt,
                           c_n > 0 ? std::optional<int>(c_n) : std::nullopt, c_name, c_out);
    };
  });

  // dataset
  std::string d_name, d_out;
  bool d_list = false;
  auto* sc_data = app.add_subcommand("dataset", "dump bundled reference data");
  sc_data->add_option("--name", d_name, "dataset key (UW4_3, ..., H32)");
  sc_data->add_option("--out", d_out, "output file (default stdout)");
  sc_data->add_flag("--list", d_list, "list datasets");
  sc_data->callback([&]() { action = [&]() { return cmd_dataset(d_name, d_out, d_list); }; });

  // codes-verify
  std::string cv_name, cv_file;
  int cv_c = -1;
  auto* sc_codes = app.add_subcommand("codes-verify", "flat bi-angular family checks");
  sc_codes->add_option("--name", cv_name, "bundled family (H8 or H32)");
  sc_codes->add_option("--file", cv_file, "hex family file");
  sc_codes->add_option("--c", cv_c, "cross-product magnitude override");
  sc_codes->callback([&]() {
    action = [&]() {
      return cmd_codes_verify(cv_name, cv_file, cv_c >= 0 ? std::optional<int>(cv_c) : std::nullopt);
    };
  });

  // hex-decode
  std::string hd_file, hd_out;
  auto* sc_hex = app.add_subcommand("hex-decode", "hex family to matrix files");
  sc_hex->add_option("file", hd_file)->required();
  sc_hex->add_option("--out", hd_out, "output directory (default: set file to stdout)");
  sc_hex->callback([&]() { action = [&]() { return cmd_hex_decode(hd_file, hd_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  g_data_dir = data_dir_opt;

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
