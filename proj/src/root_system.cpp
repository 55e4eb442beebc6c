#include "hyplab/root_system.hpp"

#include <algorithm>
#include <deque>

namespace hyplab {

namespace {

// Invert a square rational matrix.
QMat mat_inverse(const QMat& m) {
  std::size_t n = m.size();
  QMat a = m, inv(n, QVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw HypError(Err::UnsupportedType, "singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rat d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

QMat mat_transpose(const QMat& m) {
  std::size_t r = m.size(), c = m[0].size();
  QMat t(c, QVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t[j][i] = m[i][j];
  return t;
}

// Express v in the simple-root basis; returns false if not in the span.
bool in_root_coords(const RootSystemData& rs, const QVec& v, QVec& coeffs) {
  std::size_t k = rs.simple_roots.size();
  if (k == 0) {
    coeffs.clear();
    return vis_zero(v);
  }
  QMat a(rs.rank, QVec(k));
  for (std::size_t j = 0; j < k; ++j)
    for (int i = 0; i < rs.rank; ++i) a[i][j] = rs.simple_roots[j][i];
  QVec b(v.begin(), v.end());
  return solve_linear(a, b, coeffs);
}

void check_invariance(const RootSystemData& rs) {
  // the form must be preserved by every simple reflection
  for (std::size_t s = 0; s < rs.simple_roots.size(); ++s) {
    for (int i = 0; i < rs.rank; ++i) {
      for (int j = 0; j < rs.rank; ++j) {
        QVec ei(rs.rank, Rat(0)), ej(rs.rank, Rat(0));
        ei[i] = 1;
        ej[j] = 1;
        QVec ri = reflect(rs, ei, static_cast<int>(s));
        QVec rj = reflect(rs, ej, static_cast<int>(s));
        Rat lhs = pairing(rs, ri, rj);
        if (lhs != rs.pairing_gram[i][j])
          throw HypError(Err::UnsupportedType, "pairing is not W-invariant");
      }
    }
  }
}

void fill_positive_roots(RootSystemData& rs) {
  // all roots = Weyl closure of the simple roots; positive = nonnegative
  // coordinates in the simple-root basis
  std::set<QVec> all;
  std::deque<QVec> queue;
  for (const auto& a : rs.simple_roots) {
    all.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    QVec r = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
      QVec s = reflect(rs, r, static_cast<int>(i));
      if (all.insert(s).second) queue.push_back(s);
    }
  }
  for (const auto& r : all) {
    QVec c;
    if (!in_root_coords(rs, r, c)) throw HypError(Err::UnsupportedType, "root outside root lattice");
    bool nonneg = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x >= 0; });
    if (nonneg) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  rs.rho.assign(rs.rank, Rat(0));
  for (const auto& r : rs.positive_roots) rs.rho = vadd(rs.rho, vscale(Rat(1, 2), r));
}

}  // namespace

std::uint64_t RootSystemData::weyl_order() const {
  switch (type) {
    case CartanType::A: {
      std::uint64_t f = 1;
      for (int i = 2; i <= rank + 1; ++i) f *= i;
      return f;
    }
    case CartanType::C2:
      return 8;
    case CartanType::GLn: {
      std::uint64_t f = 1;
      for (int i = 2; i <= rank; ++i) f *= i;
      return f;
    }
    case CartanType::Torus:
      return 1;
  }
  return 1;
}

Rat coroot_pairing(const RootSystemData& rs, const Weight& w, int i) {
  switch (rs.type) {
    case CartanType::A:
    case CartanType::C2:
      return w[i];  // fundamental-weight coordinates
    case CartanType::GLn:
      return w[i] - w[i + 1];
    case CartanType::Torus:
      throw HypError(Err::UnsupportedType, "torus has no roots");
  }
  return 0;
}

Weight reflect(const RootSystemData& rs, const Weight& w, int i) {
  Rat c = coroot_pairing(rs, w, i);
  Weight r = w;
  for (int j = 0; j < rs.rank; ++j) r[j] -= c * rs.simple_roots[i][j];
  return r;
}

RootSystemData root_system(CartanType type, int rank) {
  RootSystemData rs;
  rs.type = type;
  rs.rank = rank;
  switch (type) {
    case CartanType::A: {
      if (rank < 1) throw HypError(Err::UnsupportedType, "A_r needs r >= 1");
      QMat cartan(rank, QVec(rank, Rat(0)));
      for (int i = 0; i < rank; ++i) {
        cartan[i][i] = 2;
        if (i > 0) cartan[i][i - 1] = -1;
        if (i + 1 < rank) cartan[i][i + 1] = -1;
      }
      for (int i = 0; i < rank; ++i) rs.simple_roots.push_back(cartan[i]);
      rs.pairing_gram = mat_inverse(cartan);  // symmetric, all d_i = 1
      break;
    }
    case CartanType::C2: {
      if (rank != 2) throw HypError(Err::UnsupportedType, "C2 has rank 2");
      // alpha_1 short, alpha_2 long; rows are the simple roots in
      // fundamental-weight coordinates
      QMat cartan = {{Rat(2), Rat(-1)}, {Rat(-2), Rat(2)}};
      rs.simple_roots = {cartan[0], cartan[1]};
      // G solves G * cartan^T = diag(d_i), d_i = (alpha_i,alpha_i)/2
      QMat inv_ct = mat_inverse(mat_transpose(cartan));
      QMat d = {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1)}};
      rs.pairing_gram.assign(2, QVec(2, Rat(0)));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) rs.pairing_gram[i][j] += d[i][k] * inv_ct[k][j];
      break;
    }
    case CartanType::GLn: {
      if (rank < 1) throw HypError(Err::UnsupportedType, "GL_n needs n >= 1");
      for (int i = 0; i + 1 < rank; ++i) {
        QVec a(rank, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple_roots.push_back(a);
      }
      rs.pairing_gram.assign(rank, QVec(rank, Rat(0)));
      for (int i = 0; i < rank; ++i) rs.pairing_gram[i][i] = 1;
      break;
    }
    case CartanType::Torus: {
      if (rank < 1) throw HypError(Err::UnsupportedType, "torus needs rank >= 1");
      rs.pairing_gram.assign(rank, QVec(rank, Rat(0)));
      for (int i = 0; i < rank; ++i) rs.pairing_gram[i][i] = 1;
      break;
    }
  }
  if (!rs.simple_roots.empty())
    fill_positive_roots(rs);
  else
    rs.rho.assign(rank, Rat(0));
  // fundamental weights in lattice coordinates
  if (type == CartanType::A || type == CartanType::C2 || type == CartanType::Torus) {
    for (int i = 0; i < rank; ++i) {
      QVec w(rank, Rat(0));
      w[i] = 1;
      rs.fundamental_weights.push_back(w);
    }
  } else {
    for (int i = 0; i + 1 < rank; ++i) {
      QVec w(rank, Rat(0));
      for (int j = 0; j <= i; ++j) w[j] = 1;
      rs.fundamental_weights.push_back(w);
    }
  }
  check_invariance(rs);
  return rs;
}

std::set<Weight> weyl_orbit(const RootSystemData& rs, const Weight& w) {
  std::set<Weight> orbit{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
      Weight nxt = reflect(rs, cur, static_cast<int>(i));
      if (orbit.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return orbit;
}

Rat pairing(const RootSystemData& rs, const QVec& x, const QVec& y) {
  Rat s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) s += x[i] * rs.pairing_gram[i][j] * y[j];
  }
  return s;
}

std::vector<QVec> chamber_halfspaces(const RootSystemData& rs) {
  std::vector<QVec> out;
  for (const auto& a : rs.simple_roots) {
    QVec n(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      n[i] = 0;
      for (int j = 0; j < rs.rank; ++j) n[i] += rs.pairing_gram[i][j] * a[j];
    }
    out.push_back(n);
  }
  return out;
}

bool is_dominant(const RootSystemData& rs, const Weight& w) {
  for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
    if (coroot_pairing(rs, w, static_cast<int>(i)) < 0) return false;
  return true;
}

Weight dominant_representative(const RootSystemData& rs, const Weight& w) {
  Weight cur = w;
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
      if (coroot_pairing(rs, cur, static_cast<int>(i)) < 0) {
        cur = reflect(rs, cur, static_cast<int>(i));
        moved = true;
      }
    }
    if (!moved) return cur;
  }
}

std::map<Weight, long> irreducible_weight_multiset(const RootSystemData& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda))
    throw HypError(Err::UnsupportedType, "highest weight must be dominant");
  std::map<Weight, long> mult;
  if (rs.simple_roots.empty()) {
    mult[lambda] = 1;
    return mult;
  }

  // candidate weights: lambda minus nonnegative combinations of simple roots
  // whose dominant representative mu+ still satisfies lambda - mu+ >= 0 in
  // the simple-root basis
  auto below = [&](const Weight& mu) {
    QVec c;
    if (!in_root_coords(rs, vsub(lambda, dominant_representative(rs, mu)), c)) return false;
    for (const auto& x : c) {
      if (x < 0 || denominator(x) != 1) return false;
    }
    return true;
  };

  std::set<Weight> candidates{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_roots) {
      Weight nxt = vsub(cur, a);
      if (candidates.count(nxt) || !below(nxt)) continue;
      candidates.insert(nxt);
      queue.push_back(nxt);
    }
  }

  // order by height of lambda - mu, ascending (so multiplicities above are known)
  std::vector<std::pair<Rat, Weight>> order;
  for (const auto& mu : candidates) {
    QVec c;
    in_root_coords(rs, vsub(lambda, mu), c);
    Rat h = 0;
    for (const auto& x : c) h += x;
    order.push_back({h, mu});
  }
  std::sort(order.begin(), order.end());

  Weight lr = vadd(lambda, rs.rho);
  Rat norm_l = pairing(rs, lr, lr);
  for (const auto& [h, mu] : order) {
    if (h == 0) {
      mult[mu] = 1;
      continue;
    }
    Rat acc = 0;
    for (const auto& alpha : rs.positive_roots) {
      for (long k = 1;; ++k) {
        Weight up = mu;
        for (int i = 0; i < rs.rank; ++i) up[i] += k * alpha[i];
        auto it = mult.find(up);
        if (it == mult.end()) break;
        acc += 2 * it->second * pairing(rs, up, alpha);
      }
    }
    Weight mr = vadd(mu, rs.rho);
    Rat denom = norm_l - pairing(rs, mr, mr);
    if (denom == 0) continue;  // not a weight of L(lambda)
    Rat m = acc / denom;
    if (m != 0) {
      if (denominator(m) != 1) throw HypError(Err::UnsupportedType, "freudenthal non-integer");
      mult[mu] = m.convert_to<long>();
    }
  }
  // drop multiplicity-zero candidates
  for (auto it = mult.begin(); it != mult.end();) {
    if (it->second == 0)
      it = mult.erase(it);
    else
      ++it;
  }
  return mult;
}

}  // namespace hyplab
