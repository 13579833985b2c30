#include "uwm/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uwm {

SignMatrix::SignMatrix(int n, std::vector<std::uint64_t> row_masks)
    : n_(n), rows_(std::move(row_masks)) {
  if (n < 1 || n > 64) throw std::invalid_argument("sign matrix order must be in [1, 64]");
  if (rows_.size() != static_cast<size_t>(n)) throw std::invalid_argument("row count mismatch");
  const std::uint64_t valid = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  for (std::uint64_t r : rows_)
    if (r & ~valid) throw std::invalid_argument("row mask wider than order");
}

int sign_inner_product(int n, std::uint64_t a, std::uint64_t b) {
  return n - 2 * std::popcount(a ^ b);
}

bool is_hadamard(const SignMatrix& m) {
  const int n = m.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sign_inner_product(n, m.row_mask(i), m.row_mask(j)) != 0) return false;
  return true;
}

std::pair<int, std::uint64_t> decode_hex_row(const std::string& digits) {
  if (digits.empty() || digits.size() > 16)
    throw std::invalid_argument("hex row must have 1..16 digits");
  std::uint64_t mask = 0;
  for (size_t d = 0; d < digits.size(); ++d) {
    char ch = digits[d];
    int v;
    if (ch >= '0' && ch <= '9')
      v = ch - '0';
    else if (ch >= 'A' && ch <= 'F')
      v = ch - 'A' + 10;
    else if (ch >= 'a' && ch <= 'f')
      v = ch - 'a' + 10;
    else
      throw std::invalid_argument(std::string("bad hex digit '") + ch + "'");
    for (int b = 0; b < 4; ++b) {
      if ((v >> (3 - b)) & 1) mask |= std::uint64_t{1} << (d * 4 + b);
    }
  }
  return {static_cast<int>(digits.size()) * 4, mask};
}

std::string encode_hex_row(int n, std::uint64_t mask) {
  if (n % 4 != 0) throw std::invalid_argument("hex encoding needs order divisible by 4");
  std::string out;
  for (int d = 0; d < n / 4; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b)
      if ((mask >> (d * 4 + b)) & 1) v |= 1 << (3 - b);
    out += "0123456789ABCDEF"[v];
  }
  return out;
}

SignMatrixFamily decode_hex_family(const std::string& text) {
  std::vector<std::vector<std::string>> blocks(1);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
    } else {
      blocks.back().push_back(line);
    }
  }
  if (!blocks.empty() && blocks.back().empty()) blocks.pop_back();
  if (blocks.empty()) throw std::invalid_argument("no hex blocks found");

  SignMatrixFamily fam;
  for (const auto& block : blocks) {
    auto [n, first] = decode_hex_row(block[0]);
    if (fam.n == 0) fam.n = n;
    if (n != fam.n || static_cast<int>(block.size()) != fam.n)
      throw std::invalid_argument("ragged hex block: expected " + std::to_string(fam.n) +
                                  " rows of " + std::to_string(fam.n / 4) + " digits");
    std::vector<std::uint64_t> rows;
    rows.reserve(block.size());
    for (const auto& r : block) {
      auto [rn, mask] = decode_hex_row(r);
      if (rn != fam.n) throw std::invalid_argument("ragged hex row");
      rows.push_back(mask);
    }
    fam.members.emplace_back(fam.n, std::move(rows));
  }
  return fam;
}

std::vector<std::uint64_t> codewords_to_rows(std::span<const std::uint64_t> codewords) {
  std::vector<std::uint64_t> rows;
  rows.reserve(codewords.size());
  for (std::uint64_t w : codewords) rows.push_back(w << 1);
  return rows;
}

Verdict verify_flat_biangular_family(const SignMatrixFamily& family) {
  const int n = family.n, c = family.c;
  for (size_t k = 0; k < family.members.size(); ++k) {
    const SignMatrix& m = family.members[k];
    if (m.order() != n)
      return Verdict::fail("member " + std::to_string(k) + " has order " +
                           std::to_string(m.order()) + ", family says " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (sign_inner_product(n, m.row_mask(i), m.row_mask(j)) != 0)
          return Verdict::fail("member " + std::to_string(k) + " is not Hadamard: rows " +
                                   std::to_string(i) + "," + std::to_string(j) +
                                   " are not orthogonal",
                               i, j);
      }
    }
  }
  bool saw_zero = false, saw_c = false;
  for (size_t a = 0; a < family.members.size(); ++a) {
    for (size_t b = a + 1; b < family.members.size(); ++b) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          int v = sign_inner_product(n, family.members[a].row_mask(i),
                                     family.members[b].row_mask(j));
          if (v == 0)
            saw_zero = true;
          else if (v == c || v == -c)
            saw_c = true;
          else
            return Verdict::fail("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") cross product entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") = " + std::to_string(v) +
                                     ", expected 0 or +-" + std::to_string(c),
                                 i, j);
        }
      }
    }
  }
  if (family.members.size() > 1) {
    if (!saw_zero) return Verdict::fail("cross products never realize 0");
    if (!saw_c) return Verdict::fail("cross products never realize +-" + std::to_string(c));
  }
  return Verdict::pass();
}

std::string WeightDistribution::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ",";
    os << "(" << entries[i].first << "," << entries[i].second << ")";
  }
  os << "}";
  return os.str();
}

WeightDistribution weight_distribution(const SignMatrixFamily& family) {
  std::map<int, long long> counts;
  for (const SignMatrix& m : family.members)
    for (int i = 0; i < m.order(); ++i) ++counts[std::popcount(m.row_mask(i))];
  WeightDistribution wd;
  for (const auto& [w, c] : counts) wd.entries.push_back({w, c});
  return wd;
}

std::vector<std::uint64_t> xor_basis(std::span<const std::uint64_t> words) {
  // leading-bit elimination: at most one basis element per top bit
  std::array<std::uint64_t, 64> by_top{};
  for (std::uint64_t w : words) {
    while (w) {
      const int t = 63 - std::countl_zero(w);
      if (!by_top[static_cast<size_t>(t)]) {
        by_top[static_cast<size_t>(t)] = w;
        break;
      }
      w ^= by_top[static_cast<size_t>(t)];
    }
  }
  std::vector<std::uint64_t> basis;
  for (int t = 63; t >= 0; --t)
    if (by_top[static_cast<size_t>(t)]) basis.push_back(by_top[static_cast<size_t>(t)]);
  return basis;
}

std::vector<std::uint64_t> xor_span(std::span<const std::uint64_t> basis) {
  std::vector<std::uint64_t> span{0};
  for (std::uint64_t b : basis) {
    const size_t sz = span.size();
    for (size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ b);
  }
  return span;
}

Verdict check_linearity(const SignMatrixFamily& family) {
  std::set<std::uint64_t> rows;
  long long total = 0;
  for (const SignMatrix& m : family.members)
    for (int i = 0; i < m.order(); ++i) {
      rows.insert(m.row_mask(i));
      ++total;
    }
  if (rows.empty()) return Verdict::pass();
  if (static_cast<long long>(rows.size()) != total)
    return Verdict::fail("duplicate rows across the family");
  if (!rows.count(0)) return Verdict::fail("zero word (all-+1 row) missing");
  std::vector<std::uint64_t> words(rows.begin(), rows.end());
  auto basis = xor_basis(words);
  if (rows.size() != (std::uint64_t{1} << basis.size()))
    return Verdict::fail("row set has " + std::to_string(rows.size()) +
                         " words but spans a space of dimension " + std::to_string(basis.size()));
  return Verdict::pass();
}

IdentityExtension identity_extension_check(const SignMatrixFamily& family) {
  IdentityExtension out;
  out.introduced = "1/sqrt(" + std::to_string(family.n) + ")";
  out.allowed = "{0, " + std::to_string(family.c) + "/" + std::to_string(family.n) + "}";
  if (family.members.empty()) {
    out.extends = true;  // nothing to conflict with
    return out;
  }
  // 1/sqrt(n) equals c/n exactly iff c^2 = n.
  out.extends = static_cast<long long>(family.c) * family.c == family.n;
  return out;
}

IdentityExtension identity_extension_check(const MUWSet& set) {
  IdentityExtension out;
  out.extends = true;
  if (set.empty()) {
    out.introduced = "none";
    out.allowed = "{}";
    return out;
  }
  const int p = set.weight();
  out.introduced = "1/sqrt(" + std::to_string(p) + ")";
  out.allowed = "{0, 1/sqrt(" + std::to_string(p) + ")}";
  return out;
}

UnitWeighingMatrix to_weighing(const SignMatrix& m) {
  const int n = m.order();
  UnitWeighingMatrix w(n, n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.set(i, j, m.at(i, j) == 1 ? Entry{0} : Entry{1});
  return w;
}

}  // namespace uwm
