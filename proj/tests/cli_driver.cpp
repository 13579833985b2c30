// Integration tests for the command-line tool: spawns the real binary and
// checks the exit-code contract plus the key=value output. Arguments:
// cli_driver <path-to-uwm-binary> <data-dir>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_cli;
fs::path g_workdir;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const fs::path out_file = g_workdir / "stdout.txt";
  const std::string cmd = g_cli + " " + args + " > " + out_file.string() + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  return r;
}

void check(bool cond, const std::string& what) {
  if (!cond) {
    std::cerr << "FAIL: " << what << "\n";
    ++g_failures;
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_driver <uwm-binary> <data-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  const fs::path data_dir = argv[2];
  g_workdir = fs::temp_directory_path() / "uwm_cli_tests";
  fs::remove_all(g_workdir);
  fs::create_directories(g_workdir);
  g_cli += " --data-dir " + fs::path(data_dir).string();

  // bound: the fractional row
  {
    RunResult r = run("bound --n 6 --w 5");
    check(r.exit_code == 0, "bound exit 0");
    check(contains(r.out, "special=25/3"), "bound special=25/3");
    check(contains(r.out, "effective=8"), "bound effective=8");
  }

  // codes-verify on the bundled order-32 family
  {
    RunResult r = run("codes-verify --name H32 --c 8");
    check(r.exit_code == 0, "codes-verify H32 exit 0");
    check(contains(r.out, "flat_biangular=ok"), "H32 flat ok");
    check(contains(r.out, "weights={(0,1),(12,310),(16,527),(20,186)}"), "H32 weights");
    check(contains(r.out, "linear=ok"), "H32 linear");
  }
  {
    RunResult r = run("codes-verify --name H8");
    check(r.exit_code == 0, "codes-verify H8 exit 0");
    check(contains(r.out, "identity_extension=breaks"), "H8 identity breaks");
    RunResult bad = run("codes-verify --name H8 --c 2");
    check(bad.exit_code == 1, "codes-verify wrong c exits 1");
  }

  // verify: dataset passes; a tampered copy fails with coordinates
  {
    RunResult ok = run("verify " + (data_dir / "w8_4.uwms").string());
    check(ok.exit_code == 0, "verify dataset exit 0");
    check(contains(ok.out, "ok=true"), "verify ok=true");

    std::string text = slurp(data_dir / "w8_4.uwms");
    auto pos = text.rfind("0 1");
    check(pos != std::string::npos, "found cell to tamper");
    text[pos] = '1';  // flip one sign
    const fs::path tampered = g_workdir / "w8_4_tampered.uwms";
    spit(tampered, text);
    RunResult bad = run("verify " + tampered.string());
    check(bad.exit_code == 1, "verify tampered exit 1");
    check(contains(bad.out, "ok=false"), "verify tampered ok=false");
    check(contains(bad.out, "i="), "verify tampered reports coordinates");
  }

  // unbiased on two extracted members
  {
    run("construct --family canonical --name W5 --out " + (g_workdir / "w5.uwm").string());
    RunResult self = run("unbiased " + (g_workdir / "w5.uwm").string() + " " +
                         (g_workdir / "w5.uwm").string());
    check(self.exit_code == 1, "self pair is not unbiased");
  }

  // blocks of a weight-3 direct sum
  {
    run("construct --family weight3 --n 7 --out " + (g_workdir / "f7.uwms").string());
    const std::string text = slurp(g_workdir / "f7.uwms");
    // single matrix file for blocks: cut the first member out of the set
    std::istringstream in(text);
    std::string line, body;
    std::getline(in, line);  // header
    for (int i = 0; i < 7; ++i) {
      std::getline(in, line);
      body += line + "\n";
    }
    spit(g_workdir / "f7_one.uwm", "uwm n=7 p=3 m=6\n" + body);
    RunResult r = run("blocks " + (g_workdir / "f7_one.uwm").string());
    check(r.exit_code == 0, "blocks exit 0");
    check(contains(r.out, "blocks=3,4"), "blocks=3,4");
  }

  // table1
  {
    RunResult r = run("table1 --n 7 --w 6");
    check(r.exit_code == 0, "table1 exit 0");
    check(contains(r.out, "corollary=9"), "table1 corollary");
    check(contains(r.out, "largest=0"), "table1 largest");
    RunResult all = run("table1 --all");
    check(all.exit_code == 0, "table1 --all exit 0");
    int lines = 0;
    for (char c : all.out)
      if (c == '\n') ++lines;
    check(lines == 22, "table1 --all prints 22 rows");
  }

  // search with persisted output
  {
    const fs::path out = g_workdir / "search224";
    RunResult r = run("search --n 2 --w 2 --m 4 --out " + out.string());
    check(r.exit_code == 0, "search exit 0");
    check(contains(r.out, "size=2"), "search size=2");
    check(contains(r.out, "exhaustive=true"), "search exhaustive");
    check(fs::exists(out / "matrix_0.uwm") && fs::exists(out / "matrix_1.uwm"),
          "search wrote matrices");
    check(fs::exists(out / "manifest.txt"), "search wrote manifest");
    RunResult v = run("verify " + (out / "matrix_0.uwm").string() + " " +
                      (out / "matrix_1.uwm").string());
    check(v.exit_code == 0, "persisted search result verifies");
  }
  {
    RunResult none = run("search --n 3 --w 2 --m 4");
    check(none.exit_code == 1, "empty search result exits 1");
  }

  // unbiased: a genuinely unbiased pair from the persisted search result
  {
    const fs::path out = g_workdir / "search224";
    RunResult r = run("unbiased " + (out / "matrix_0.uwm").string() + " " +
                      (out / "matrix_1.uwm").string());
    check(r.exit_code == 0, "unbiased pair exit 0");
    check(contains(r.out, "ok=true"), "unbiased ok=true");
  }

  // codes-verify from an explicit file
  {
    RunResult r = run("codes-verify --file " + (data_dir / "h8.hexfam").string());
    check(r.exit_code == 0, "codes-verify --file exit 0");
    check(contains(r.out, "c=4"), "codes-verify --file reads header c");
  }

  // construct: prime family round trip through verify
  {
    const fs::path f = g_workdir / "p5.uwms";
    RunResult r = run("construct --family prime-muhm --p 5 --out " + f.string());
    check(r.exit_code == 0, "construct exit 0");
    RunResult v = run("verify " + f.string());
    check(v.exit_code == 0, "constructed family verifies");
    check(contains(v.out, "matrices=5"), "constructed family has 5 members");
    RunResult bad = run("construct --family prime-muhm --p 6");
    check(bad.exit_code == 2, "composite order is a usage error");
  }

  // dataset dump parses back
  {
    RunResult r = run("dataset --name UW4_3");
    check(r.exit_code == 0, "dataset exit 0");
    check(contains(r.out, "uwmset n=4 p=3 m=6 count=9"), "dataset header");
    RunResult missing = run("dataset --name NOPE");
    check(missing.exit_code == 2, "unknown dataset is a usage error");
  }

  // hex-decode to a set file on stdout
  {
    RunResult r = run("hex-decode " + (data_dir / "h8.hexfam").string());
    check(r.exit_code == 0, "hex-decode exit 0");
    check(contains(r.out, "uwmset n=8 p=8 m=2 count=8"), "hex-decode header");
  }

  // environment-variable data directory override
  {
    const fs::path out_file = g_workdir / "env_stdout.txt";
    const std::string cmd = "UWM_DATA_DIR=" + fs::path(data_dir).string() + " " +
                            std::string(argv[1]) + " dataset --name H8 > " + out_file.string() +
                            " 2>/dev/null";
    int raw = std::system(cmd.c_str());
    check(WIFEXITED(raw) && WEXITSTATUS(raw) == 0, "UWM_DATA_DIR override exit 0");
    check(contains(slurp(out_file), "hexfam n=8 count=8 c=4"), "UWM_DATA_DIR override output");
  }

  // parse errors exit 2
  {
    spit(g_workdir / "bad.uwm", "uwm n=2 p=1 m=6\n0 .\n. 7\n");
    RunResult r = run("verify " + (g_workdir / "bad.uwm").string());
    check(r.exit_code == 2, "out-of-range exponent exits 2");
    RunResult usage = run("bound --n 6");
    check(usage.exit_code == 2, "missing flag exits 2");
    RunResult nocmd = run("");
    check(nocmd.exit_code == 2, "missing subcommand exits 2");
  }

  if (g_failures == 0) {
    std::cout << "cli: all checks passed\n";
    return 0;
  }
  std::cout << "cli: " << g_failures << " failures\n";
  return 1;
}
