#include "hyplab/polytope.hpp"

#include <algorithm>
#include <set>

namespace hyplab {

namespace {

// scale (normal, offset) by a positive rational so all entries are coprime integers
void canonicalize(Halfspace& h) {
  Int lcm_den = 1;
  for (const auto& c : h.normal) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
  lcm_den = boost::multiprecision::lcm(lcm_den, denominator(h.offset));
  Int g = 0;
  auto scaled = [&](const Rat& c) { return numerator(c) * (lcm_den / denominator(c)); };
  for (const auto& c : h.normal) g = boost::multiprecision::gcd(g, scaled(c));
  g = boost::multiprecision::gcd(g, scaled(h.offset));
  if (g == 0) g = 1;
  Rat f(lcm_den, g);
  for (auto& c : h.normal) c *= f;
  h.offset *= f;
}

// orthonormal-free affine basis: returns indices-free direction basis of
// span{points[i] - points[0]} by row reduction
std::vector<QVec> affine_basis(const std::vector<QVec>& points) {
  std::vector<QVec> basis;
  if (points.empty()) return basis;
  std::size_t n = points[0].size();
  QMat rows;
  for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(vsub(points[i], points[0]));
  // row-reduce, keep nonzero rows
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) basis.push_back(rows[i]);
  return basis;
}

// coordinates of x - base in the span of basis (consistent by construction)
QVec affine_coords(const QVec& x, const QVec& base, const std::vector<QVec>& basis) {
  std::size_t n = x.size(), k = basis.size();
  QMat a(n, QVec(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = basis[j][i];
  QVec rhs = vsub(x, base), u;
  if (!solve_linear(a, rhs, u)) throw HypError(Err::DegenerateSimplex, "point outside affine hull");
  return u;
}

// nullspace basis of the matrix (rows are constraints)
std::vector<QVec> nullspace(QMat m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rat d = m[r][c];
    for (std::size_t j = 0; j < cols; ++j) m[r][j] /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<QVec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0) v[cc] = -m[pivot_of_col[cc]][c];
    basis.push_back(v);
  }
  return basis;
}

std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  return s;
}

bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - (k - i)) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool RationalPolytope::contains(const QVec& x) const {
  if (empty()) return false;
  for (const auto& h : halfspaces)
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

RationalPolytope hull(const std::vector<QVec>& points_in) {
  if (points_in.empty()) throw HypError(Err::DegenerateSimplex, "hull of empty point set");
  std::vector<QVec> points = points_in;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope p;
  p.ambient = static_cast<int>(points[0].size());
  const QVec& base = points[0];
  std::vector<QVec> basis = affine_basis(points);
  p.dim = static_cast<int>(basis.size());

  // affine-hull equations from the orthogonal complement of the basis
  {
    QMat rows;
    for (const auto& b : basis) rows.push_back(b);
    if (rows.empty()) rows.push_back(QVec(p.ambient, Rat(0)));
    for (const auto& nrm : nullspace(rows)) {
      Rat off = dot(nrm, base);
      Halfspace h1{nrm, off};
      canonicalize(h1);
      Halfspace h2{vscale(Rat(-1), nrm), -off};
      canonicalize(h2);
      p.halfspaces.push_back(h1);
      p.halfspaces.push_back(h2);
    }
  }

  if (p.dim == 0) {
    p.vertices = {base};
    std::sort(p.halfspaces.begin(), p.halfspaces.end());
    return p;
  }

  // reduced coordinates in the affine hull
  std::size_t k = basis.size();
  std::vector<QVec> red;
  red.reserve(points.size());
  for (const auto& pt : points) red.push_back(affine_coords(pt, base, basis));

  // facet enumeration: hyperplanes through k affinely independent reduced
  // points that support the whole set
  std::set<std::pair<QVec, Rat>> facet_set;
  auto idx = first_subset(k);
  do {
    QMat rows;
    for (auto i : idx) {
      QVec row = red[i];
      row.push_back(Rat(-1));
      rows.push_back(row);
    }
    auto ns = nullspace(rows);
    if (ns.size() != 1) continue;
    QVec a(ns[0].begin(), ns[0].end() - 1);
    Rat b = ns[0].back();
    bool has_above = false, has_below = false;
    for (const auto& u : red) {
      Rat v = dot(a, u) - b;
      if (v > 0) has_above = true;
      if (v < 0) has_below = true;
      if (has_above && has_below) break;
    }
    if (has_above && has_below) continue;
    if (has_above) {
      a = vscale(Rat(-1), a);
      b = -b;
    }
    Halfspace hr{a, b};
    canonicalize(hr);
    facet_set.insert({hr.normal, hr.offset});
  } while (next_subset(idx, red.size()));

  // vertices: points whose tight facet normals span the reduced space
  std::vector<std::pair<QVec, Rat>> facets(facet_set.begin(), facet_set.end());
  std::vector<QVec> vertex_red;
  for (std::size_t i = 0; i < red.size(); ++i) {
    QMat tight;
    for (const auto& [a, b] : facets)
      if (dot(a, red[i]) == b) tight.push_back(a);
    if (tight.size() >= k && rank_of(tight) == k) vertex_red.push_back(red[i]);
  }
  for (const auto& u : vertex_red) {
    QVec x = base;
    for (std::size_t j = 0; j < k; ++j) x = vadd(x, vscale(u[j], basis[j]));
    p.vertices.push_back(x);
  }
  std::sort(p.vertices.begin(), p.vertices.end());

  // lift facet inequalities to ambient coordinates: solve m . basis_j = a_j
  for (const auto& [a, b] : facets) {
    QMat sys(k, QVec(p.ambient));
    for (std::size_t j = 0; j < k; ++j)
      for (int i = 0; i < p.ambient; ++i) sys[j][i] = basis[j][i];
    QVec m;
    if (!solve_linear(sys, a, m)) throw HypError(Err::DegenerateSimplex, "facet lift failed");
    Halfspace h{m, dot(m, base) + b};
    canonicalize(h);
    p.halfspaces.push_back(h);
  }
  std::sort(p.halfspaces.begin(), p.halfspaces.end());
  p.halfspaces.erase(std::unique(p.halfspaces.begin(), p.halfspaces.end()), p.halfspaces.end());

  // classify facets (not tight on every vertex)
  for (std::size_t hi = 0; hi < p.halfspaces.size(); ++hi) {
    const auto& h = p.halfspaces[hi];
    bool all_tight = true;
    for (const auto& v : p.vertices)
      if (dot(h.normal, v) != h.offset) {
        all_tight = false;
        break;
      }
    if (!all_tight) p.facet_indices.push_back(static_cast<int>(hi));
  }
  return p;
}

std::vector<Face> faces(const RationalPolytope& p) {
  std::vector<Face> out;
  if (p.empty()) return out;
  QVec origin(p.ambient, Rat(0));
  bool origin_in_p = p.contains(origin);

  std::size_t nf = p.facet_indices.size();
  std::set<std::vector<int>> seen;
  for (std::uint64_t mask = 0; mask < (1ull << nf); ++mask) {
    std::vector<int> vs;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
      bool tight_all = true;
      for (std::size_t fi = 0; fi < nf; ++fi) {
        if (!(mask >> fi & 1)) continue;
        const auto& h = p.halfspaces[p.facet_indices[fi]];
        if (dot(h.normal, p.vertices[vi]) != h.offset) {
          tight_all = false;
          break;
        }
      }
      if (tight_all) vs.push_back(static_cast<int>(vi));
    }
    if (vs.empty() || !seen.insert(vs).second) continue;

    Face f;
    f.parent = &p;
    f.vertex_indices = vs;
    std::vector<QVec> pts;
    for (int vi : vs) pts.push_back(p.vertices[vi]);
    f.dim = static_cast<int>(affine_basis(pts).size());
    // maximal tight set over the whole face
    for (std::size_t fi = 0; fi < nf; ++fi) {
      const auto& h = p.halfspaces[p.facet_indices[fi]];
      bool tight = true;
      for (int vi : vs)
        if (dot(h.normal, p.vertices[vi]) != h.offset) {
          tight = false;
          break;
        }
      if (tight) f.tight_halfspace_indices.push_back(p.facet_indices[fi]);
    }
    // origin lies on the face iff it lies in p and satisfies the tight
    // constraints with equality
    f.contains_origin = origin_in_p;
    if (f.contains_origin) {
      for (int hi : f.tight_halfspace_indices)
        if (p.halfspaces[hi].offset != 0) {
          f.contains_origin = false;
          break;
        }
      // a face without facet constraints is the whole polytope
      if (f.contains_origin && f.tight_halfspace_indices.empty() && f.dim < p.dim)
        f.contains_origin = false;  // unreachable for bounded polytopes
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return out;
}

RationalPolytope homogenize(const RationalPolytope& p) {
  QVec origin(p.ambient, Rat(0));
  if (!p.contains(origin))
    throw HypError(Err::OriginNotContained, "polytope does not contain the origin");
  std::vector<QVec> pts;
  QVec zero(p.ambient + 1, Rat(0));
  pts.push_back(zero);
  for (const auto& v : p.vertices) {
    QVec w = v;
    w.push_back(Rat(1));
    pts.push_back(w);
  }
  return hull(pts);
}

RationalPolytope intersect_chamber(const RationalPolytope& p, const std::vector<QVec>& chamber_ge) {
  if (chamber_ge.empty() || p.empty()) return p;
  std::vector<Halfspace> cons = p.halfspaces;
  for (const auto& n : chamber_ge) {
    Halfspace h{vscale(Rat(-1), n), Rat(0)};
    canonicalize(h);
    cons.push_back(h);
  }
  std::size_t n = static_cast<std::size_t>(p.ambient);
  std::set<QVec> cand;
  if (cons.size() >= n) {
    auto idx = first_subset(n);
    do {
      QMat a;
      QVec b;
      for (auto i : idx) {
        a.push_back(cons[i].normal);
        b.push_back(cons[i].offset);
      }
      if (rank_of(a) != n) continue;
      QVec x;
      if (!solve_linear(a, b, x)) continue;
      bool feas = true;
      for (const auto& h : cons)
        if (dot(h.normal, x) > h.offset) {
          feas = false;
          break;
        }
      if (feas) cand.insert(x);
    } while (next_subset(idx, cons.size()));
  }
  if (cand.empty()) {
    RationalPolytope e;
    e.ambient = p.ambient;
    return e;
  }
  return hull(std::vector<QVec>(cand.begin(), cand.end()));
}

namespace {

void triangulate_face(const RationalPolytope& p, const std::vector<Face>& all,
                      std::size_t face_id, std::map<std::size_t, std::vector<std::vector<int>>>& memo) {
  if (memo.count(face_id)) return;
  const Face& f = all[face_id];
  std::vector<std::vector<int>> out;
  if (f.dim == 0) {
    out.push_back({f.vertex_indices[0]});
    memo[face_id] = out;
    return;
  }
  int apex = f.vertex_indices.front();
  for (std::size_t gi = 0; gi < all.size(); ++gi) {
    const Face& g = all[gi];
    if (g.dim != f.dim - 1) continue;
    if (!std::includes(f.vertex_indices.begin(), f.vertex_indices.end(), g.vertex_indices.begin(),
                       g.vertex_indices.end()))
      continue;
    if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), apex)) continue;
    triangulate_face(p, all, gi, memo);
    for (const auto& s : memo[gi]) {
      std::vector<int> simplex = s;
      simplex.push_back(apex);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(simplex);
    }
  }
  std::sort(out.begin(), out.end());
  memo[face_id] = out;
}

}  // namespace

std::vector<std::vector<int>> triangulate(const RationalPolytope& p) {
  if (p.empty()) return {};
  auto all = faces(p);
  // top face is the last by dimension order
  std::size_t top = all.size() - 1;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].dim == p.dim && all[i].vertex_indices.size() == p.vertices.size()) top = i;
  std::map<std::size_t, std::vector<std::vector<int>>> memo;
  triangulate_face(p, all, top, memo);
  return memo[top];
}

Rat simplex_volume(const std::vector<QVec>& vertices) {
  std::size_t n = vertices.size() - 1;
  QMat m;
  for (std::size_t i = 1; i <= n; ++i) m.push_back(vsub(vertices[i], vertices[0]));
  Rat d = det(m);
  if (d < 0) d = -d;
  return d / Rat(factorial(static_cast<unsigned>(n)), 1);
}

MPoly mpoly_const(int nvars, const Rat& c) {
  MPoly p;
  p.nvars = nvars;
  if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
  return p;
}

MPoly mpoly_linear(const QVec& coeffs) {
  MPoly p;
  p.nvars = static_cast<int>(coeffs.size());
  for (int i = 0; i < p.nvars; ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<int> e(p.nvars, 0);
    e[i] = 1;
    p.terms[e] = coeffs[i];
  }
  return p;
}

MPoly mpoly_add(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms) {
    auto it = r.terms.find(e);
    if (it == r.terms.end())
      r.terms[e] = c;
    else {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.nvars = a.nvars;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      r.terms[e] += ca * cb;
    }
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = it->second == 0 ? r.terms.erase(it) : std::next(it);
  return r;
}

MPoly mpoly_scale(const MPoly& a, const Rat& c) {
  MPoly r;
  r.nvars = a.nvars;
  if (c == 0) return r;
  for (const auto& [e, v] : a.terms) r.terms[e] = v * c;
  return r;
}

Rat mpoly_eval(const MPoly& a, const QVec& x) {
  Rat s = 0;
  for (const auto& [e, c] : a.terms) {
    Rat t = c;
    for (int i = 0; i < a.nvars; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Rat integrate_monomial_simplex(const std::vector<int>& exponents, const std::vector<QVec>& simplex) {
  MPoly one = mpoly_const(static_cast<int>(exponents.size()), Rat(1));
  MPoly p = one;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    std::vector<int> e(exponents.size(), 0);
    e[j] = 1;
    MPoly xj;
    xj.nvars = static_cast<int>(exponents.size());
    xj.terms[e] = 1;
    for (int k = 0; k < exponents[j]; ++k) p = mpoly_mul(p, xj);
  }
  return integrate_mpoly_simplex(p, simplex);
}

Rat integrate_mpoly_simplex(const MPoly& poly, const std::vector<QVec>& simplex) {
  std::size_t n = simplex.size() - 1;
  if (simplex[0].size() != n)
    throw HypError(Err::DegenerateSimplex, "simplex must be full-dimensional");
  // affine pullback to the standard simplex
  QMat jac;
  for (std::size_t i = 1; i <= n; ++i) jac.push_back(vsub(simplex[i], simplex[0]));
  Rat jdet = det(jac);
  if (jdet < 0) jdet = -jdet;
  if (jdet == 0) throw HypError(Err::DegenerateSimplex, "degenerate simplex");

  // x_j(u) = v0_j + sum_i u_i (v_i - v0)_j
  std::vector<MPoly> coord(n);
  for (std::size_t j = 0; j < n; ++j) {
    QVec lin(n);
    for (std::size_t i = 0; i < n; ++i) lin[i] = jac[i][j];
    coord[j] = mpoly_add(mpoly_const(static_cast<int>(n), simplex[0][j]), mpoly_linear(lin));
  }
  Rat total = 0;
  for (const auto& [e, c] : poly.terms) {
    MPoly term = mpoly_const(static_cast<int>(n), Rat(1));
    for (std::size_t j = 0; j < n; ++j)
      for (int k = 0; k < e[j]; ++k) term = mpoly_mul(term, coord[j]);
    // integrate monomials u^b over the standard simplex
    for (const auto& [b, cb] : term.terms) {
      Int num = 1;
      int total_deg = 0;
      for (std::size_t i = 0; i < n; ++i) {
        num *= factorial(b[i]);
        total_deg += b[i];
      }
      Int den = factorial(static_cast<unsigned>(n) + total_deg);
      total += c * cb * Rat(num, den);
    }
  }
  return total * jdet;
}

MPoly weyl_integrand(const RootSystemData& rs) {
  MPoly p = mpoly_const(rs.rank, Rat(1));
  for (const auto& alpha : rs.positive_roots) {
    QVec lin(rs.rank, Rat(0));
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) lin[i] += rs.pairing_gram[i][j] * alpha[j];
    MPoly la = mpoly_linear(lin);
    Rat ra = pairing(rs, rs.rho, alpha);
    p = mpoly_mul(p, mpoly_mul(la, la));
    p = mpoly_scale(p, Rat(1) / (ra * ra));
  }
  return p;
}

BoundComputation rank_bound(const RootSystemData& rs, const RationalPolytope& delta_inf, unsigned d) {
  BoundComputation out;
  out.integrand = weyl_integrand(rs);
  out.clipped = intersect_chamber(delta_inf, chamber_halfspaces(rs));
  if (out.clipped.empty() || out.clipped.dim < rs.rank) {
    out.lower_dimensional = true;
    out.bound = 0;
    return out;
  }
  out.simplices = triangulate(out.clipped);
  Rat total = 0;
  for (const auto& s : out.simplices) {
    std::vector<QVec> verts;
    for (int vi : s) verts.push_back(out.clipped.vertices[vi]);
    Rat v = integrate_mpoly_simplex(out.integrand, verts);
    out.simplex_integrals.push_back(v);
    total += v;
  }
  out.bound = Rat(factorial(d), 1) * total;
  return out;
}

}  // namespace hyplab
