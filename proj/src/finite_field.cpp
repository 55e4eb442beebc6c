#include "hyplab/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace hyplab {

namespace {

std::uint64_t g_field_cap = 10'000'000;

// Dense little-endian polynomials over F_p.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, int p) {
  int df = static_cast<int>(f.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= df; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= df; ++j) {
      a[i - df + j] = ((a[i - df + j] - c * f[j]) % p + p * p) % p;
    }
  }
  a.resize(df);
  for (auto& c : a) c = ((c % p) + p) % p;
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, int p) {
  Poly r = {1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  auto inv_mod_p = [p](int v) {
    int r = 1, e = p - 2, bb = ((v % p) + p) % p;
    while (e) {
      if (e & 1) r = r * bb % p;
      bb = bb * bb % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // a mod b after making b monic
    int lead = inv_mod_p(b.back());
    Poly bm = b;
    for (auto& c : bm) c = c * lead % p;
    Poly r = a;
    for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(bm.size()) - 1; --i) {
      int c = ((r[i] % p) + p) % p;
      if (c == 0) continue;
      int off = i - (static_cast<int>(bm.size()) - 1);
      for (std::size_t j = 0; j < bm.size(); ++j) r[off + j] = ((r[off + j] - c * bm[j]) % p + p * p) % p;
    }
    trim(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool poly_is_irreducible(int p, const std::vector<int>& f) {
  int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  // x^{p^d} == x mod f, and gcd(f, x^{p^{d/l}} - x) = 1 for prime l | d.
  Poly x = {0, 1};
  Poly xp = poly_powmod(x, upow(p, d), f, p);
  Poly diff = xp;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (int l = 2; l <= d; ++l) {
    if (d % l != 0 || !is_prime_u64(l)) continue;
    Poly xe = poly_powmod(x, upow(p, d / l), f, p);
    Poly g = xe;
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    trim(g);
    Poly gc = poly_gcd(f, g, p);
    if (!(gc.size() == 1)) return false;
  }
  return true;
}

Fq::Fq(int p, int degree, std::vector<int> modulus)
    : p_(p), degree_(degree), modulus_(std::move(modulus)) {
  size_ = upow(p, degree);
  if (size_ <= 1024) {
    mul_table_.resize(size_ * size_);
    for (std::uint64_t a = 0; a < size_; ++a)
      for (std::uint64_t b = a; b < size_; ++b) {
        elem m = mul_generic(static_cast<elem>(a), static_cast<elem>(b));
        mul_table_[a * size_ + b] = m;
        mul_table_[b * size_ + a] = m;
      }
  }
  if (size_ <= (1u << 21)) {
    trace_table_.resize(size_);
    for (std::uint64_t a = 0; a < size_; ++a) trace_table_[a] = trace_generic(static_cast<elem>(a));
  }
  if (size_ <= (1u << 16)) {
    inv_table_.assign(size_, 0);
    for (std::uint64_t a = 1; a < size_; ++a) {
      if (inv_table_[a]) continue;
      elem ia = pow(static_cast<elem>(a), static_cast<std::int64_t>(size_) - 2);
      inv_table_[a] = ia;
      inv_table_[ia] = static_cast<elem>(a);
    }
  }
}

std::vector<int> Fq::coords(elem a) const {
  std::vector<int> c(degree_);
  for (int i = 0; i < degree_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

Fq::elem Fq::from_coords(const std::vector<int>& c) const {
  std::uint64_t a = 0;
  for (int i = degree_ - 1; i >= 0; --i) {
    int v = i < static_cast<int>(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
    a = a * p_ + v;
  }
  return static_cast<elem>(a);
}

Fq::elem Fq::add(elem a, elem b) const {
  elem r = 0;
  std::uint64_t pw = 1;
  for (int i = 0; i < degree_; ++i) {
    int da = static_cast<int>(a % p_), db = static_cast<int>(b % p_);
    r += static_cast<elem>(((da + db) % p_) * pw);
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

Fq::elem Fq::sub(elem a, elem b) const {
  elem r = 0;
  std::uint64_t pw = 1;
  for (int i = 0; i < degree_; ++i) {
    int da = static_cast<int>(a % p_), db = static_cast<int>(b % p_);
    r += static_cast<elem>(((da - db + p_) % p_) * pw);
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

Fq::elem Fq::neg(elem a) const { return sub(0, a); }

Fq::elem Fq::mul_generic(elem a, elem b) const {
  Poly pa = coords(a), pb = coords(b);
  Poly pc = poly_mulmod(pa, pb, modulus_, p_);
  return from_coords(pc);
}

Fq::elem Fq::mul(elem a, elem b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::uint64_t>(a) * size_ + b];
  return mul_generic(a, b);
}

Fq::elem Fq::pow(elem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fq::elem Fq::inv(elem a) const {
  if (a == 0) throw HypError(Err::Reducible, "division by zero in field");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, static_cast<std::int64_t>(size_) - 2);
}

int Fq::trace_generic(elem a) const {
  elem acc = a, fr = a;
  for (int i = 1; i < degree_; ++i) {
    fr = pow(fr, p_);
    acc = add(acc, fr);
  }
  // trace lands in the prime field: constant coordinate only
  return static_cast<int>(acc % p_);
}

int Fq::trace_to_prime(elem a) const {
  if (!trace_table_.empty()) return trace_table_[a];
  return trace_generic(a);
}

std::uint64_t Fq::multiplicative_order(elem a) const {
  if (a == 0) throw HypError(Err::Reducible, "order of zero");
  std::uint64_t n = 1;
  elem x = a;
  while (x != one()) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

void set_field_size_cap(std::uint64_t cap) { g_field_cap = cap; }
std::uint64_t field_size_cap() { return g_field_cap; }

namespace {

std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Fq>>& registry() {
  static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Fq>> r;
  return r;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::vector<int> least_irreducible(int p, int degree) {
  if (degree == 1) return {0, 1};  // x
  std::uint64_t count = upow(p, degree);
  // n encodes the non-leading coefficients with c_{degree-1} most significant,
  // so increasing n walks the tuples (c_{d-1},...,c_0) in lexicographic order.
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<int> f(degree + 1, 0);
    f[degree] = 1;
    std::uint64_t m = n;
    for (int i = 0; i < degree; ++i) {
      f[i] = static_cast<int>(m % p);
      m /= p;
    }
    if (poly_is_irreducible(p, f)) return f;
  }
  throw HypError(Err::Reducible, "no irreducible polynomial found");
}

}  // namespace

const Fq* field_make(int p, int degree, std::optional<std::vector<int>> polynomial) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw HypError(Err::NotPrime, "characteristic must be prime: " + std::to_string(p));
  if (degree < 1) throw HypError(Err::Reducible, "degree must be positive");
  std::uint64_t size = 1;
  for (int i = 0; i < degree; ++i) {
    size *= static_cast<std::uint64_t>(p);
    if (size > field_size_cap())
      throw HypError(Err::CapExceeded, "field size exceeds cap");
  }
  std::vector<int> f;
  if (polynomial) {
    f = *polynomial;
    for (auto& c : f) c = ((c % p) + p) % p;
    if (static_cast<int>(f.size()) != degree + 1 || f.back() != 1)
      throw HypError(Err::Reducible, "defining polynomial must be monic of the stated degree");
    if (!poly_is_irreducible(p, f))
      throw HypError(Err::Reducible, "supplied polynomial is reducible");
  } else {
    f = least_irreducible(p, degree);
  }
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto key = std::make_tuple(p, degree, f);
  auto it = registry().find(key);
  if (it == registry().end())
    it = registry().emplace(key, std::make_unique<Fq>(p, degree, f)).first;
  return it->second.get();
}

namespace {

struct EmbeddingData {
  std::vector<Fq::elem> root_powers;  // r^0 .. r^{s-1} in the big field
};

std::map<std::pair<const Fq*, const Fq*>, EmbeddingData>& embedding_cache() {
  static std::map<std::pair<const Fq*, const Fq*>, EmbeddingData> c;
  return c;
}

const EmbeddingData& get_embedding(const Fq* from, const Fq* to) {
  if (from->p() != to->p() || to->degree() % from->degree() != 0)
    throw HypError(Err::NotASubfield, "not a subfield");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto key = std::make_pair(from, to);
  auto it = embedding_cache().find(key);
  if (it != embedding_cache().end()) return it->second;

  // least root of from's defining polynomial in `to`, enumeration order
  const auto& f = from->modulus();
  Fq::elem root = 0;
  bool found = false;
  for (std::uint64_t cand = 0; cand < to->size(); ++cand) {
    Fq::elem v = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
      v = to->add(to->mul(v, static_cast<Fq::elem>(cand)), to->from_int(f[i]));
    if (v == 0) {
      root = static_cast<Fq::elem>(cand);
      found = true;
      break;
    }
  }
  if (!found) throw HypError(Err::NotASubfield, "no root of subfield polynomial found");
  EmbeddingData data;
  data.root_powers.resize(from->degree());
  Fq::elem pw = to->one();
  for (int i = 0; i < from->degree(); ++i) {
    data.root_powers[i] = pw;
    pw = to->mul(pw, root);
  }
  return embedding_cache().emplace(key, std::move(data)).first->second;
}

}  // namespace

Fq::elem embed(const Fq* from, const Fq* to, Fq::elem a) {
  if (from == to) return a;
  const auto& data = get_embedding(from, to);
  auto digits = from->coords(a);
  Fq::elem r = 0;
  for (int i = 0; i < from->degree(); ++i) {
    if (digits[i] == 0) continue;
    Fq::elem term = to->mul(data.root_powers[i], to->from_int(digits[i]));
    r = to->add(r, term);
  }
  return r;
}

FieldElement field_trace(FieldElement x, const Fq* target) {
  const Fq* big = x.field;
  if (big->p() != target->p() || big->degree() % target->degree() != 0)
    throw HypError(Err::NotASubfield, "target is not a subfield");
  int s = target->degree();
  int steps = big->degree() / s;
  std::uint64_t ps = 1;
  for (int i = 0; i < s; ++i) ps *= big->p();
  Fq::elem acc = x.idx, fr = x.idx;
  for (int i = 1; i < steps; ++i) {
    fr = big->pow(fr, static_cast<std::int64_t>(ps));
    acc = big->add(acc, fr);
  }
  if (target == big) return {target, acc};
  if (target->degree() == 1) return {target, target->from_int(static_cast<long>(acc % big->p()))};
  // invert the embedding: F_p elimination for the target coordinates
  const auto& data = get_embedding(target, big);
  int p = big->p();
  int d = big->degree();
  auto rhs_digits = big->coords(acc);
  std::vector<std::vector<int>> a(d, std::vector<int>(s + 1, 0));
  for (int j = 0; j < s; ++j) {
    auto col = big->coords(data.root_powers[j]);
    for (int i = 0; i < d; ++i) a[i][j] = col[i];
  }
  for (int i = 0; i < d; ++i) a[i][s] = rhs_digits[i];
  auto inv_mod_p = [p](int v) {
    int r = 1, e = p - 2, b = ((v % p) + p) % p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int row = 0;
  std::vector<int> pivot_of_col(s, -1);
  for (int c = 0; c < s && row < d; ++c) {
    int piv = row;
    while (piv < d && a[piv][c] % p == 0) ++piv;
    if (piv == d) continue;
    std::swap(a[piv], a[row]);
    int ip = inv_mod_p(a[row][c]);
    for (int j = 0; j <= s; ++j) a[row][j] = a[row][j] * ip % p;
    for (int i = 0; i < d; ++i) {
      if (i == row || a[i][c] % p == 0) continue;
      int f = a[i][c] % p;
      for (int j = 0; j <= s; ++j) a[i][j] = ((a[i][j] - f * a[row][j]) % p + p * p) % p;
    }
    pivot_of_col[c] = row;
    ++row;
  }
  std::vector<int> out(s, 0);
  for (int c = 0; c < s; ++c)
    if (pivot_of_col[c] >= 0) out[c] = a[pivot_of_col[c]][s] % p;
  return {target, target->from_coords(out)};
}

std::vector<FieldElement> field_enumerate(const Fq* f) {
  std::vector<FieldElement> out;
  out.reserve(f->size());
  for (std::uint64_t i = 0; i < f->size(); ++i) out.push_back({f, static_cast<Fq::elem>(i)});
  return out;
}

}  // namespace hyplab
