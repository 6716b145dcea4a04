// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lmsb/rational.hpp"

namespace lmsb {

using IVec = std::vector<int>;
using IMatrix = std::vector<std::vector<Integer>>;

// Convex lattice polytope given by its vertices. Full-dimensional 2D
// polytopes keep their vertices in counter-clockwise order.
class LatticePolytope {
 public:
  struct Facet {
    IVec normal;  // primitive inner normal
    int offset;   // <normal, x> >= offset on the polytope
  };

  LatticePolytope() = default;
  // Convex hull of arbitrary points (ambient dimension <= 2).
  static LatticePolytope from_points(std::vector<IVec> pts);

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<IVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  bool contains(const IVec& x) const;
  bool interior(const IVec& x) const;
  bool is_vertex(const IVec& x) const;
  LatticePolytope dilate(int k) const;

 private:
  int ambient_ = 0, dim_ = -1;
  std::vector<IVec> vertices_;
  std::vector<Facet> facets_;
};

// Lattice points with the origin first (when present), the rest in
// lexicographic order.
std::vector<IVec> integral_points(const LatticePolytope& p);
// Throws origin_not_interior unless 0 is an interior point.
bool is_reflexive(const LatticePolytope& p);
LatticePolytope dual_polytope(const LatticePolytope& p);
Integer normalized_volume(const LatticePolytope& p);

// GL(2,Z) normal form of the vertex cycle (equal iff lattice equivalent).
IMatrix gl2z_normal_form(const LatticePolytope& p);
// The 16 reflexive polygons up to GL(2,Z).
std::vector<LatticePolytope> reflexive_polygons();

struct RelationLattice {
  int npoints = 0;
  std::vector<IVec> basis;
};

// Z-basis of {l : sum l_m = 0, sum l_m m = 0} for the given point order,
// in Hermite normal form.
RelationLattice lattice_of_relations(const std::vector<IVec>& points);
RelationLattice lattice_of_relations(const LatticePolytope& p);
// True iff `basis` is a Z-basis of the relation lattice of `points`.
bool is_relation_basis(const std::vector<IVec>& points, const std::vector<IVec>& basis);

// Integer lattice helpers.
IMatrix hermite_normal_form(IMatrix rows);   // row-style, zero rows dropped
IMatrix integer_kernel(const IMatrix& a);   // rows form a Z-basis of ker a

struct LaurentPolynomial {
  std::map<IVec, Rational> terms;
  LatticePolytope newton_polytope() const;
};

}  // namespace lmsb
