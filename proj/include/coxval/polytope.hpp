#ifndef COXVAL_POLYTOPE_HPP
#define COXVAL_POLYTOPE_HPP

#include <vector>

#include "coxval/lp.hpp"
#include "coxval/root_system.hpp"

namespace coxval {

// Inequalities ⟨a,x⟩ ≤ b plus equalities, the common currency between the
// polytope and cone sides.
struct HRep {
  std::vector<LinIneq> ineqs;
  std::vector<LinEq> eqs;

  bool contains(const QVector& x) const;
  void append(const HRep& other);
};

// A face of a polytope: the vertices it consists of (indices into the parent),
// a functional whose maximum over the parent is attained exactly there, and
// its affine dimension.
struct Face {
  std::vector<int> vertex_subset;  // sorted indices
  QVector supporting_functional;
  int dim = 0;
};

// Bounded polytope in vertex representation. Construction deduplicates points
// and strips non-vertices, so arbitrary point clouds are acceptable input;
// what remains is the canonical sorted vertex list.
class VPolytope {
 public:
  explicit VPolytope(std::vector<QVector> points);

  const std::vector<QVector>& vertices() const { return vertices_; }
  Eigen::Index ambient() const { return vertices_[0].size(); }
  int dim() const { return dim_; }

  bool contains(const QVector& x) const;
  QVector barycenter() const;

  // Complete face list (vertices through the polytope itself, no empty face),
  // sorted by (dim, vertex indices). Guarded against oversized inputs.
  std::vector<Face> faces() const;
  std::vector<Face> facets() const;  // dim()-1 faces only (empty for a point)

  // Facet inequalities plus affine-hull equalities.
  HRep hrep() const;

  bool operator==(const VPolytope& o) const;

 private:
  std::vector<QVector> vertices_;
  int dim_ = 0;
};

// Primitive sign-normalized directions of the 1-dimensional faces.
std::vector<QVector> edge_directions(const VPolytope& p);

// True iff every edge direction is parallel to a root.
bool is_extended_deformation(const VPolytope& p, const RootSystem& rs);

// All vertices of {x : hrep}, assuming the set is bounded and the rows are
// exact: every vertex is the unique solution of some subset of tight rows.
std::vector<QVector> hrep_vertices(const HRep& h, Eigen::Index ambient);

}  // namespace coxval

#endif
