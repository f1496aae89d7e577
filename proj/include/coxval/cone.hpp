#ifndef COXVAL_CONE_HPP
#define COXVAL_CONE_HPP

#include <optional>
#include <vector>

#include "coxval/polytope.hpp"

namespace coxval {

// An affine cone apex + Cone(rays) + span(lineality), stored canonically:
//  - lineality_basis: reduced row-echelon basis of the lineality space,
//    rows scaled primitive;
//  - rays: extreme rays modulo lineality (projected off the lineality span,
//    primitive, sorted, irredundant);
//  - apex: reduced modulo the lineality span.
// Two affine cones are equal as point sets iff their canonical fields match.
class AffineCone {
 public:
  AffineCone(QVector apex, std::vector<QVector> generators, std::vector<QVector> lineality);

  static AffineCone full_space(Eigen::Index ambient);
  static AffineCone single_point(QVector apex);

  const QVector& apex() const { return apex_; }
  const std::vector<QVector>& rays() const { return rays_; }
  const std::vector<QVector>& lineality_basis() const { return lineality_; }
  Eigen::Index ambient() const { return apex_.size(); }
  int dim() const { return dim_; }
  int lineality_dim() const { return static_cast<int>(lineality_.size()); }

  bool contains(const QVector& x) const;
  AffineCone translated(const QVector& t) const;

  // Apply an exact linear map (group action) to the whole cone.
  AffineCone transformed(const QMatrix& m) const;

  // Facet inequalities and affine-hull equalities.
  HRep hrep() const;

  // A functional in the relative interior of the polar {y : ⟨y,c−apex⟩ ≤ 0},
  // the separating direction used by tight containment.
  QVector polar_relint() const;

  // Faces of the cone: each is spanned by a subset of the rays (every face
  // contains apex + lineality). Returned as (ray index subsets), sorted,
  // including the empty subset (the lineality flat) and the full cone.
  std::vector<std::vector<int>> face_ray_subsets() const;

  bool operator==(const AffineCone& o) const;
  bool operator<(const AffineCone& o) const;  // lexicographic on canonical form

 private:
  QVector apex_;
  std::vector<QVector> rays_;
  std::vector<QVector> lineality_;
  int dim_ = 0;
};

// Tangent cone of P at its face F, anchored at the lexicographically least
// vertex of F: generators v' − v0 over all vertices v' of P.
AffineCone tangent_cone(const VPolytope& p, const Face& f);

// Def of tight containment: P ⊆ C and P meets the lineality flat of C.
bool tightly_contains(const AffineCone& c, const VPolytope& p);

// Same test with an affine cone in place of the polytope. P ⊆ C reduces to
// apex membership plus recession-cone containment.
bool tightly_contains(const AffineCone& c, const AffineCone& p);

// The unique translate class C+v tightly containing P, if one exists: pick y
// in the relative interior of the polar, anchor at the y-maximal face of P,
// test. The returned apex is in canonical (mod lineality) form.
std::optional<QVector> tight_translate(const AffineCone& cone_at_origin, const VPolytope& p);

}  // namespace coxval

#endif
