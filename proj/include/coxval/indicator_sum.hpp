#ifndef COXVAL_INDICATOR_SUM_HPP
#define COXVAL_INDICATOR_SUM_HPP

#include <variant>
#include <vector>

#include "coxval/cone.hpp"

namespace coxval {

using PolyBody = std::variant<VPolytope, AffineCone>;

// A finite integer combination Σ aᵢ·1_{Bᵢ} of polytope and cone indicators.
struct SignedPolyhedralSum {
  struct Term {
    Int coeff;
    PolyBody body;
  };
  std::vector<Term> terms;

  void add(Int coeff, PolyBody body) { terms.push_back({std::move(coeff), std::move(body)}); }
};

bool body_contains(const PolyBody& b, const QVector& x);
Eigen::Index body_ambient(const PolyBody& b);

// One term (−1)^{dim F} · (affine tangent cone at F) per face F of q.
SignedPolyhedralSum brianchon_gram(const VPolytope& q);

Int indicator_eval(const SignedPolyhedralSum& s, const QVector& x);

// Decides Σ aᵢ·1_{Bᵢ} ≡ 0 exactly.
//  - All bodies bounded: evaluate on a finite witness set (relative-interior
//    vertex averages of every nonempty intersection over term subsets, the
//    barycenters of all faces of those intersections, and one point outside
//    the bounding box).
//  - Cones present: every body is cut out by hyperplanes from one shared pool,
//    so enumerate the sign-vector cells of that arrangement (with LP pruning)
//    and evaluate on a relative-interior witness of every nonempty cell.
// A pool or term count too large for either scheme raises capacity_error.
bool verify_indicator_relation(const SignedPolyhedralSum& s);

}  // namespace coxval

#endif
