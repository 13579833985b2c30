#include "uwm/cyclotomic.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace uwm {

namespace {

std::atomic<int> g_max_root_order{60};

// Exact division of polynomial a by monic polynomial b; remainder must vanish.
std::vector<BigInt> divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  std::vector<BigInt> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    BigInt c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const BigInt& c : a)
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  if (q.empty()) q.assign(1, 0);
  return q;
}

// Precomputed data for one root order: the cyclotomic polynomial and the
// canonical form of every monomial z^j, j in [0, m).
struct FieldData {
  int m = 1;
  int degree = 1;
  std::vector<BigInt> phi;
  std::vector<std::vector<BigInt>> power;  // power[j] = z^j mod phi
};

std::mutex g_field_mutex;
std::map<int, std::shared_ptr<const FieldData>>& field_cache() {
  static std::map<int, std::shared_ptr<const FieldData>> cache;
  return cache;
}
std::map<int, std::vector<BigInt>>& phi_cache() {
  static std::map<int, std::vector<BigInt>> cache;
  return cache;
}

// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d. Caller holds g_field_mutex.
const std::vector<BigInt>& phi_locked(int m) {
  auto& cache = phi_cache();
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) phi_locked(d);
  }
  std::vector<BigInt> poly(m + 1);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_exact(std::move(poly), cache.at(d));
  }
  return cache.emplace(m, std::move(poly)).first->second;
}

std::shared_ptr<const FieldData> field(int m) {
  if (m < 1) throw std::invalid_argument("root order must be positive");
  // per-thread memo of the last order used; inner products hit one order
  // in tight loops and must not serialize on the cache mutex
  thread_local int memo_m = 0;
  thread_local std::shared_ptr<const FieldData> memo;
  if (memo_m == m) return memo;
  if (m > g_max_root_order.load())
    throw std::invalid_argument("root order " + std::to_string(m) + " exceeds the configured cap");
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto& cache = field_cache();
  if (auto it = cache.find(m); it != cache.end()) {
    memo_m = m;
    memo = it->second;
    return it->second;
  }

  auto data = std::make_shared<FieldData>();
  data->m = m;
  data->phi = phi_locked(m);
  data->degree = static_cast<int>(data->phi.size()) - 1;
  const int deg = data->degree;
  data->power.resize(m);
  for (int j = 0; j < m && j < deg; ++j) {
    data->power[j].assign(deg, 0);
    data->power[j][j] = 1;
  }
  for (int j = deg; j < m; ++j) {
    // z * power[j-1], top coefficient eliminated via z^deg = -phi[0..deg-1]
    const auto& prev = data->power[j - 1];
    std::vector<BigInt> cur(deg, 0);
    for (int i = 0; i + 1 < deg; ++i) cur[i + 1] = prev[i];
    const BigInt& top = prev[deg - 1];
    if (top != 0) {
      for (int i = 0; i < deg; ++i) cur[i] -= top * data->phi[i];
    }
    data->power[j] = std::move(cur);
  }
  cache.emplace(m, data);
  memo_m = m;
  memo = data;
  return data;
}

}  // namespace

int max_root_order() { return g_max_root_order.load(); }

void set_max_root_order(int m) {
  if (m < 1) throw std::invalid_argument("root order cap must be positive");
  g_max_root_order.store(m);
}

std::vector<BigInt> cyclotomic_polynomial(int m) { return field(m)->phi; }

int euler_totient(int m) { return field(m)->degree; }

CycInt CycInt::zero(int m) {
  auto f = field(m);
  return CycInt(m, std::vector<BigInt>(f->degree));
}

CycInt CycInt::one(int m) { return from_integer(m, 1); }

CycInt CycInt::from_integer(int m, BigInt z) {
  auto f = field(m);
  std::vector<BigInt> c(f->degree);
  c[0] = std::move(z);
  return CycInt(m, std::move(c));
}

CycInt CycInt::root(int m, long long k) {
  auto f = field(m);
  long long r = k % m;
  if (r < 0) r += m;
  std::vector<BigInt> c = f->power[static_cast<size_t>(r)];
  if (static_cast<int>(c.size()) < f->degree) c.resize(f->degree);
  return CycInt(m, std::move(c));
}

CycInt CycInt::reduce(int m, std::span<const BigInt> raw) {
  auto f = field(m);
  const int deg = f->degree;
  std::vector<BigInt> folded(static_cast<size_t>(m), 0);
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != 0) folded[i % m] += raw[i];
  }
  std::vector<BigInt> out(deg, 0);
  for (int j = 0; j < m; ++j) {
    const BigInt& c = folded[j];
    if (c == 0) continue;
    if (j < deg) {
      out[j] += c;
    } else {
      const auto& pw = f->power[j];
      for (int i = 0; i < deg; ++i)
        if (pw[i] != 0) out[i] += c * pw[i];
    }
  }
  return CycInt(m, std::move(out));
}

bool CycInt::is_zero() const {
  for (const BigInt& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycInt::equals_integer(const BigInt& z) const {
  // The power basis is linearly independent, so the representation is unique.
  if (coeffs_[0] != z) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CycInt CycInt::conjugate() const {
  std::vector<BigInt> raw(m_, 0);
  raw[0] = coeffs_[0];
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) raw[(m_ - static_cast<int>(i)) % m_] += coeffs_[i];
  }
  return reduce(m_, raw);
}

CycInt CycInt::times_conjugate() const { return *this * conjugate(); }

CycInt CycInt::embedded(int new_m) const {
  if (new_m % m_ != 0) throw std::invalid_argument("embedding target must be a multiple of the root order");
  if (new_m == m_) return *this;
  const int stride = new_m / m_;
  std::vector<BigInt> raw(static_cast<size_t>(new_m), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) raw[i * stride] += coeffs_[i];
  }
  return reduce(new_m, raw);
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("root order mismatch");
  std::vector<BigInt> c(a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return CycInt(a.m_, std::move(c));
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("root order mismatch");
  std::vector<BigInt> c(a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return CycInt(a.m_, std::move(c));
}

CycInt CycInt::operator-() const {
  std::vector<BigInt> c(coeffs_);
  for (BigInt& x : c) x = -x;
  return CycInt(m_, std::move(c));
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("root order mismatch");
  const size_t da = a.coeffs_.size(), db = b.coeffs_.size();
  std::vector<BigInt> conv(da + db - 1, 0);
  for (size_t i = 0; i < da; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < db; ++j) {
      if (b.coeffs_[j] != 0) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycInt::reduce(a.m_, conv);
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (any && c > 0) os << "+";
    if (i == 0) {
      os << c;
    } else {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << c << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace uwm
