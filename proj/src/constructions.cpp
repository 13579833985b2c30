#include "uwm/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "uwm/io.hpp"

namespace uwm {

namespace {

void require_verified(const Verdict& v, const std::string& what) {
  if (!v) throw std::logic_error(what + " failed verification: " + v.detail);
}

UnitWeighingMatrix from_rows(int n, int p, int m, std::initializer_list<std::initializer_list<int>> rows) {
  UnitWeighingMatrix w(n, p, m);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) w.set(i, j++, static_cast<Entry>(v));
    ++i;
  }
  return w;
}
constexpr int Z = kZeroEntry;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

UnitWeighingMatrix direct_sum(const UnitWeighingMatrix& w, const UnitWeighingMatrix& x) {
  if (w.weight() != x.weight())
    throw std::invalid_argument("direct summands must share the weight");
  const int m = static_cast<int>(std::lcm(w.root_order(), x.root_order()));
  const UnitWeighingMatrix a = w.embedded(m), b = x.embedded(m);
  const int na = a.order(), nb = b.order();
  UnitWeighingMatrix out(na + nb, w.weight(), m);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) out.set(i, j, a.at(i, j));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) out.set(na + i, na + j, b.at(i, j));
  require_verified(verify_weighing(out), "direct sum");
  return out;
}

MUWSet direct_sum_sets(std::span<const MUWSet> collection) {
  if (collection.empty()) throw std::invalid_argument("empty collection");
  const int p = collection[0].weight();
  int count = collection[0].size();
  for (const MUWSet& s : collection) {
    if (s.empty()) throw std::invalid_argument("collection contains an empty set");
    if (s.weight() != p) throw std::invalid_argument("collection mixes weights");
    count = std::min(count, s.size());
  }
  std::vector<UnitWeighingMatrix> members;
  members.reserve(count);
  for (int k = 0; k < count; ++k) {
    UnitWeighingMatrix acc = collection[0][k];
    for (size_t s = 1; s < collection.size(); ++s) acc = direct_sum(acc, collection[s][k]);
    members.push_back(std::move(acc));
  }
  MUWSet out(std::move(members));
  require_verified(out.verify(), "direct-summed set");
  return out;
}

MUWSet prime_muhm(int p) {
  if (!is_prime(p))
    throw std::invalid_argument("order must be prime (prime powers are unsupported)");
  std::vector<UnitWeighingMatrix> members;
  if (p == 2) {
    members.push_back(from_rows(2, 2, 4, {{0, 0}, {0, 2}}));
    members.push_back(from_rows(2, 2, 4, {{0, 1}, {0, 3}}));
  } else {
    for (int t = 0; t < p; ++t) {
      UnitWeighingMatrix h(p, p, p);
      for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k)
          h.set(j, k, static_cast<Entry>(((long long)t * k * k + (long long)j * k) % p));
      members.push_back(std::move(h));
    }
  }
  MUWSet out(std::move(members));
  require_verified(out.verify(), "prime full set");
  return out;
}

UnitWeighingMatrix canonical(CanonicalMatrix which) {
  UnitWeighingMatrix w(1, 1, 1);
  switch (which) {
    case CanonicalMatrix::w5:
      w = from_rows(5, 4, 3,
                    {{0, 0, 0, 0, Z},
                     {0, 1, 2, Z, 0},
                     {0, 2, Z, 1, 2},
                     {0, Z, 1, 2, 1},
                     {Z, 0, 2, 1, 1}});
      break;
    case CanonicalMatrix::w7:
      w = from_rows(7, 4, 2,
                    {{0, 0, 0, 0, Z, Z, Z},
                     {0, 1, Z, Z, 0, 0, Z},
                     {0, Z, 1, Z, 1, Z, 0},
                     {0, Z, Z, 1, Z, 1, 1},
                     {Z, 0, 1, Z, Z, 0, 1},
                     {Z, 0, Z, 1, 0, Z, 0},
                     {Z, Z, 0, 1, 1, 0, Z}});
      break;
    case CanonicalMatrix::uw3_3_block:
      w = from_rows(3, 3, 3, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}});
      break;
    case CanonicalMatrix::uw4_3_block:
      w = from_rows(4, 3, 2, {{0, 0, 0, Z}, {0, 1, Z, 0}, {0, Z, 1, 1}, {Z, 0, 1, 0}});
      break;
  }
  require_verified(verify_weighing(w), "canonical matrix");
  return w;
}

MUWSet weight3_tight_family(int n) {
  if (n < 3 || n == 5)
    throw std::invalid_argument("no mutually unbiased UW(n,3) family exists for n = " +
                                std::to_string(n));
  // Decompose n = 3t + 4l with as many 4-blocks as possible; when n is a
  // multiple of 4 the all-4-block choice is what attains 9 rather than 3.
  int l = n / 4;
  while (l >= 0 && (n - 4 * l) % 3 != 0) --l;
  if (l < 0) throw std::logic_error("no 3t+4l decomposition found");
  const int t = (n - 4 * l) / 3;

  std::vector<MUWSet> parts;
  if (t > 0) {
    MUWSet triples = prime_muhm(3);
    for (int i = 0; i < t; ++i) parts.push_back(triples);
  }
  if (l > 0) {
    MUWSet nine = load_matrix_dataset(DatasetKey::uw4_3);
    for (int i = 0; i < l; ++i) parts.push_back(nine);
  }
  MUWSet out = direct_sum_sets(parts);
  require_verified(out.verify(), "weight-3 family");
  return out;
}

namespace {

struct DatasetInfo {
  DatasetKey key;
  const char* name;
  const char* file;
  bool sign_family;
};

constexpr DatasetInfo kDatasets[] = {
    {DatasetKey::uw4_3, "UW4_3", "uw4_3.uwms", false},
    {DatasetKey::uw5_4, "UW5_4", "uw5_4.uwms", false},
    {DatasetKey::uw6_4, "UW6_4", "uw6_4.uwms", false},
    {DatasetKey::w7_4, "W7_4", "w7_4.uwms", false},
    {DatasetKey::w8_4, "W8_4", "w8_4.uwms", false},
    {DatasetKey::h8, "H8", "h8.hexfam", true},
    {DatasetKey::h32, "H32", "h32.hexfam", true},
};

const DatasetInfo& info(DatasetKey key) {
  for (const auto& d : kDatasets)
    if (d.key == key) return d;
  throw std::invalid_argument("unknown dataset key");
}

std::filesystem::path resolve(const std::filesystem::path& dir) {
  return dir.empty() ? default_data_dir() : dir;
}

}  // namespace

std::optional<DatasetKey> parse_dataset_key(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (const auto& d : kDatasets)
    if (upper == d.name) return d.key;
  return std::nullopt;
}

std::string dataset_name(DatasetKey key) { return info(key).name; }
std::string dataset_file_name(DatasetKey key) { return info(key).file; }
bool dataset_is_sign_family(DatasetKey key) { return info(key).sign_family; }

MUWSet load_matrix_dataset(DatasetKey key, const std::filesystem::path& data_dir) {
  if (dataset_is_sign_family(key))
    throw std::invalid_argument(dataset_name(key) + " is a sign-matrix family");
  return parse_set(read_file(resolve(data_dir) / dataset_file_name(key)));
}

SignMatrixFamily load_sign_dataset(DatasetKey key, const std::filesystem::path& data_dir) {
  if (!dataset_is_sign_family(key))
    throw std::invalid_argument(dataset_name(key) + " is a weighing-matrix set");
  return parse_hex_family(read_file(resolve(data_dir) / dataset_file_name(key)));
}

}  // namespace uwm
