#ifndef COXVAL_COXETER_MATROID_HPP
#define COXVAL_COXETER_MATROID_HPP

#include <vector>

#include "coxval/cone.hpp"
#include "coxval/parabolic_quotient.hpp"
#include "coxval/polytope.hpp"

namespace coxval {

enum class RecognitionMode { bruhat, polytope, both };

// Does this subset of W/W_I (coset indices into q) form a Coxeter matroid?
//  - bruhat: every twist w leaves a unique minimal basis;
//  - polytope: every edge of Conv(delta_B) is parallel to a root;
//  - both: runs the two criteria and insists they agree; a disagreement would
//    contradict the theorem equating them, so it raises consistency_error.
bool is_coxeter_matroid(const ParabolicQuotient& q, const std::vector<int>& bases,
                        RecognitionMode mode);

// A set of bases that passed recognition. The unchecked factory skips
// validation so that the routines which are supposed to reject non-matroids
// can be exercised on them.
class CoxeterMatroid {
 public:
  CoxeterMatroid(const ParabolicQuotient& q, std::vector<int> bases,
                 RecognitionMode mode = RecognitionMode::both);
  static CoxeterMatroid unchecked(const ParabolicQuotient& q, std::vector<int> bases);

  const ParabolicQuotient& quotient() const { return *q_; }
  const std::vector<int>& bases() const { return bases_; }
  int size() const { return static_cast<int>(bases_.size()); }

  // Structural equality: same group data, same parabolic subset, same bases.
  bool operator==(const CoxeterMatroid& o) const;

 private:
  CoxeterMatroid(const ParabolicQuotient* q, std::vector<int> bases);
  const ParabolicQuotient* q_;
  std::vector<int> bases_;
};

// The unique basis below every other basis in the w-twisted Bruhat order.
// Throws domain_error when minimality is not unique or not total, which can
// only happen on unchecked non-matroids.
int min_w(const CoxeterMatroid& m, int w);

// Independent geometric route to the same basis: the delta point maximizing
// <w·rho, ·> over the bases, rho the sum of all fundamental weights. A tie
// means the functional failed to be generic and is a hard error.
int min_w_geometric(const CoxeterMatroid& m, int w);

// Conv(delta_B : B bases). Every delta point is a vertex (they lie on a
// sphere), enforced by a consistency check.
VPolytope base_polytope(const CoxeterMatroid& m);

// The Coxeter Schubert matroid: the upper Bruhat interval {B' : base <= B'}.
CoxeterMatroid schubert(const ParabolicQuotient& q, int base);

// w·M.
CoxeterMatroid translate(const CoxeterMatroid& m, int w);

// Lexicographically least basis-index set in the W-orbit {w·M}; constant on
// orbits and idempotent, so it decides isomorphism.
CoxeterMatroid canonical_form(const CoxeterMatroid& m);
bool isomorphic(const CoxeterMatroid& a, const CoxeterMatroid& b);

// Cone(-alpha_j : j in [n]) + span(alpha_i : i in I) at apex 0. Its
// W-translates are the Coxeter root cones: delta_{B'} lies in w·root_cone +
// delta_B exactly when B <=^w B', so these cones drive every tight
// containment sweep.
AffineCone root_cone(const RootSystem& rs, const std::vector<int>& I);

struct StabilityWitness {
  int base = 0;                       // coset whose translate fails
  std::vector<QVector> bad_vertices;  // intersection vertices outside the delta set
  std::vector<QVector> bad_edges;     // edge directions not parallel to any root
};

struct StabilityReport {
  bool stable = true;
  std::vector<StabilityWitness> witnesses;
};

// Is (Phi, I) intersection-stable: does cutting the full orbit polytope with
// every translate root_cone + delta_B yield a base polytope again?
StabilityReport check_intersection_stability(const ParabolicQuotient& q);

}  // namespace coxval

#endif
