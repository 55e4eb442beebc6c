#ifndef HYPLAB_POLYTOPE_HPP
#define HYPLAB_POLYTOPE_HPP

#include <map>
#include <vector>

#include "hyplab/numbers.hpp"
#include "hyplab/root_system.hpp"

namespace hyplab {

// normal . x <= offset, scaled so the entries are coprime integers
struct Halfspace {
  QVec normal;
  Rat offset;

  bool operator==(const Halfspace&) const = default;
  bool operator<(const Halfspace& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

// Bounded rational polytope carrying both representations. For polytopes of
// lower dimension than the ambient space the halfspace list contains the
// affine-hull equations as pairs of opposite inequalities.
struct RationalPolytope {
  int ambient = 0;
  int dim = -1;  // affine dimension; -1 means empty
  std::vector<QVec> vertices;
  std::vector<Halfspace> halfspaces;
  // indices into halfspaces of the proper (facet) inequalities, i.e. those not
  // tight on the whole polytope
  std::vector<int> facet_indices;

  bool empty() const { return dim < 0; }
  bool contains(const QVec& x) const;
};

struct Face {
  const RationalPolytope* parent = nullptr;
  std::vector<int> vertex_indices;           // sorted
  std::vector<int> tight_halfspace_indices;  // facets tight on the whole face
  int dim = -1;
  bool contains_origin = false;
};

RationalPolytope hull(const std::vector<QVec>& points);

// All faces of all dimensions, vertices through the polytope itself,
// deterministically ordered by (dim, vertex_indices).
std::vector<Face> faces(const RationalPolytope& p);

// Cone-with-lid {(x,t) : x in t*P, 0 <= t <= 1}; requires the origin in P.
RationalPolytope homogenize(const RationalPolytope& p);

// Exact intersection with halfspaces {n . x >= 0}; an empty list returns p.
RationalPolytope intersect_chamber(const RationalPolytope& p, const std::vector<QVec>& chamber_ge);

// Triangulation by recursive fans over the face lattice; each simplex is a
// list of dim+1 vertex indices into p.vertices.
std::vector<std::vector<int>> triangulate(const RationalPolytope& p);

// Exact volume of a full-dimensional simplex given by ambient vertices.
Rat simplex_volume(const std::vector<QVec>& vertices);

// Exact integral of x^exponents over the simplex, full-dimensional in the
// ambient space.
Rat integrate_monomial_simplex(const std::vector<int>& exponents, const std::vector<QVec>& simplex);

// Sparse multivariate polynomial with rational coefficients.
struct MPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;
};

MPoly mpoly_const(int nvars, const Rat& c);
MPoly mpoly_linear(const QVec& coeffs);  // sum coeffs[i] * x_i
MPoly mpoly_add(const MPoly& a, const MPoly& b);
MPoly mpoly_mul(const MPoly& a, const MPoly& b);
MPoly mpoly_scale(const MPoly& a, const Rat& c);
Rat mpoly_eval(const MPoly& a, const QVec& x);
Rat integrate_mpoly_simplex(const MPoly& poly, const std::vector<QVec>& simplex);

// d! * integral over delta_inf intersect the dominant chamber of
// prod_{alpha>0} (lambda,alpha)^2/(rho,alpha)^2, in lattice coordinates.
struct BoundComputation {
  Rat bound = 0;
  bool lower_dimensional = false;  // measure-zero intersection, bound 0
  RationalPolytope clipped;
  MPoly integrand;
  std::vector<std::vector<int>> simplices;
  std::vector<Rat> simplex_integrals;
};

BoundComputation rank_bound(const RootSystemData& rs, const RationalPolytope& delta_inf, unsigned d);

MPoly weyl_integrand(const RootSystemData& rs);

}  // namespace hyplab

#endif
