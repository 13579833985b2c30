#include "uwm/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace uwm {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// "tag k1=v1 k2=v2 ..." with all keys required, integral values.
std::vector<long long> parse_header(const std::string& line, const std::string& tag,
                                    const std::vector<std::string>& keys) {
  std::istringstream in(line);
  std::string got_tag;
  in >> got_tag;
  if (got_tag != tag) throw ParseError("expected header tag '" + tag + "', got '" + got_tag + "'");
  std::vector<long long> vals;
  for (const auto& key : keys) {
    std::string tok;
    if (!(in >> tok) || tok.rfind(key + "=", 0) != 0)
      throw ParseError("header missing " + key + "=");
    try {
      size_t used = 0;
      vals.push_back(std::stoll(tok.substr(key.size() + 1), &used));
      if (used != tok.size() - key.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad integer in header field " + tok);
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("unexpected header token '" + extra + "'");
  return vals;
}

void serialize_body(std::ostringstream& os, const UnitWeighingMatrix& w) {
  for (int i = 0; i < w.order(); ++i) {
    for (int j = 0; j < w.order(); ++j) {
      if (j) os << ' ';
      if (w.at(i, j) == kZeroEntry)
        os << '.';
      else
        os << w.at(i, j);
    }
    os << '\n';
  }
}

UnitWeighingMatrix parse_body(const std::vector<std::string>& lines, size_t first, int n, int p,
                              int m) {
  UnitWeighingMatrix w(n, p, m);
  for (int i = 0; i < n; ++i) {
    if (first + i >= lines.size()) throw ParseError("matrix body truncated");
    std::istringstream in(lines[first + i]);
    std::string tok;
    for (int j = 0; j < n; ++j) {
      if (!(in >> tok)) throw ParseError("row " + std::to_string(i) + " has too few tokens");
      if (tok == ".") continue;
      int k;
      try {
        size_t used = 0;
        k = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("bad token '" + tok + "' in row " + std::to_string(i));
      }
      if (k < 0 || k >= m)
        throw ParseError("exponent " + std::to_string(k) + " out of range [0," +
                         std::to_string(m) + ") in row " + std::to_string(i));
      w.set(i, j, static_cast<Entry>(k));
    }
    if (in >> tok) throw ParseError("row " + std::to_string(i) + " has too many tokens");
  }
  return w;
}

}  // namespace

std::string serialize_matrix(const UnitWeighingMatrix& w) {
  std::ostringstream os;
  os << "uwm n=" << w.order() << " p=" << w.weight() << " m=" << w.root_order() << '\n';
  serialize_body(os, w);
  return os.str();
}

UnitWeighingMatrix parse_matrix(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty matrix file");
  auto h = parse_header(lines[0], "uwm", {"n", "p", "m"});
  const int n = static_cast<int>(h[0]);
  if (n < 1 || h[1] < 1 || h[1] > n || h[2] < 1) throw ParseError("bad matrix header values");
  UnitWeighingMatrix w = parse_body(lines, 1, n, static_cast<int>(h[1]), static_cast<int>(h[2]));
  for (size_t i = 1 + n; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError("trailing content after matrix body");
  return w;
}

std::string serialize_set(const MUWSet& set) {
  if (set.empty()) throw std::invalid_argument("cannot serialize an empty set");
  std::ostringstream os;
  os << "uwmset n=" << set.order() << " p=" << set.weight() << " m=" << set.root_order()
     << " count=" << set.size() << '\n';
  for (int k = 0; k < set.size(); ++k) {
    if (k) os << '\n';
    serialize_body(os, set[k]);
  }
  return os.str();
}

MUWSet parse_set(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty set file");
  auto h = parse_header(lines[0], "uwmset", {"n", "p", "m", "count"});
  const int n = static_cast<int>(h[0]), p = static_cast<int>(h[1]), m = static_cast<int>(h[2]);
  const int count = static_cast<int>(h[3]);
  if (n < 1 || p < 1 || p > n || m < 1 || count < 1) throw ParseError("bad set header values");
  std::vector<UnitWeighingMatrix> members;
  size_t at = 1;
  for (int k = 0; k < count; ++k) {
    while (at < lines.size() && lines[at].empty()) ++at;
    members.push_back(parse_body(lines, at, n, p, m));
    at += n;
  }
  while (at < lines.size() && lines[at].empty()) ++at;
  if (at != lines.size()) throw ParseError("trailing content after last matrix");
  return MUWSet(std::move(members));
}

std::vector<UnitWeighingMatrix> parse_matrices(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  in >> tag;
  if (tag == "uwm") return {parse_matrix(text)};
  if (tag == "uwmset") return parse_set(text).members();
  throw ParseError("unknown file tag '" + tag + "'");
}

std::string serialize_hex_family(const SignMatrixFamily& family) {
  std::ostringstream os;
  os << "hexfam n=" << family.n << " count=" << family.members.size() << " c=" << family.c
     << '\n';
  for (size_t k = 0; k < family.members.size(); ++k) {
    if (k) os << '\n';
    const SignMatrix& m = family.members[k];
    for (int i = 0; i < m.order(); ++i) os << encode_hex_row(m.order(), m.row_mask(i)) << '\n';
  }
  return os.str();
}

SignMatrixFamily parse_hex_family(const std::string& text) {
  auto nl = text.find('\n');
  if (nl == std::string::npos) throw ParseError("empty hex family file");
  auto h = parse_header(text.substr(0, nl), "hexfam", {"n", "count", "c"});
  SignMatrixFamily fam;
  try {
    fam = decode_hex_family(text.substr(nl + 1));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  fam.c = static_cast<int>(h[2]);
  if (fam.n != static_cast<int>(h[0]))
    throw ParseError("header order " + std::to_string(h[0]) + " does not match rows of " +
                     std::to_string(fam.n));
  if (static_cast<long long>(fam.members.size()) != h[1])
    throw ParseError("header count " + std::to_string(h[1]) + " does not match " +
                     std::to_string(fam.members.size()) + " blocks");
  return fam;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string make_manifest(const std::vector<std::pair<std::string, std::string>>& name_content) {
  std::ostringstream os;
  for (const auto& [name, content] : name_content) os << sha256_hex(content) << "  " << name << '\n';
  return os.str();
}

Verdict verify_manifest(const std::filesystem::path& dir, const std::string& manifest_name) {
  std::string manifest;
  try {
    manifest = read_file(dir / manifest_name);
  } catch (const ParseError& e) {
    return Verdict::fail(e.what());
  }
  for (const std::string& line : split_lines(manifest)) {
    if (line.empty()) continue;
    auto sep = line.find("  ");
    if (sep == std::string::npos || sep != 64)
      return Verdict::fail("malformed manifest line: " + line);
    const std::string want = line.substr(0, sep), name = line.substr(sep + 2);
    std::string got;
    try {
      got = sha256_hex(read_file(dir / name));
    } catch (const ParseError& e) {
      return Verdict::fail(e.what());
    }
    if (got != want)
      return Verdict::fail(name + ": sha256 " + got + " does not match manifest " + want);
  }
  return Verdict::pass();
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("UWM_DATA_DIR"); env && *env) return env;
#ifdef UWM_DEFAULT_DATA_DIR
  return UWM_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace uwm
