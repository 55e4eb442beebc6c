#ifndef HYPLAB_ROOT_SYSTEM_HPP
#define HYPLAB_ROOT_SYSTEM_HPP

#include <map>
#include <set>
#include <vector>

#include "hyplab/numbers.hpp"

namespace hyplab {

// Supported lattice/root data:
//   A(r)    - simple type A_r, weights in fundamental-weight coordinates
//   C2      - simple type C_2 (Sp4), fundamental-weight coordinates
//   GLn     - reductive GL_n datum: character lattice Z^n, roots e_i - e_j
//   Torus   - rank-n torus, no roots, character-lattice coordinates
// In every case the lattice is Z^rank in its coordinates, so Lebesgue measure
// in these coordinates has covolume 1.
enum class CartanType { A, C2, GLn, Torus };

struct RootSystemData {
  CartanType type = CartanType::Torus;
  int rank = 0;
  std::vector<QVec> simple_roots;
  std::vector<QVec> positive_roots;
  std::vector<QVec> fundamental_weights;
  QVec rho;
  QMat pairing_gram;  // W-invariant form, long roots of squared length 2

  std::uint64_t weyl_order() const;
};

using Weight = QVec;

RootSystemData root_system(CartanType type, int rank);

// <lambda, alpha_i^vee> for the i-th simple root.
Rat coroot_pairing(const RootSystemData& rs, const Weight& w, int i);

Weight reflect(const RootSystemData& rs, const Weight& w, int i);

std::set<Weight> weyl_orbit(const RootSystemData& rs, const Weight& w);

Rat pairing(const RootSystemData& rs, const QVec& x, const QVec& y);

// Dominant chamber {x : normal . x >= 0 for each returned normal}; empty for
// the torus (whole space).
std::vector<QVec> chamber_halfspaces(const RootSystemData& rs);

bool is_dominant(const RootSystemData& rs, const Weight& w);
Weight dominant_representative(const RootSystemData& rs, const Weight& w);

// Weight multiset of the irreducible highest-weight module L(lambda), by
// Freudenthal's recursion. lambda must be dominant integral.
std::map<Weight, long> irreducible_weight_multiset(const RootSystemData& rs, const Weight& lambda);

}  // namespace hyplab

#endif
