#ifndef COXVAL_LP_HPP
#define COXVAL_LP_HPP

#include <optional>
#include <vector>

#include "coxval/rational.hpp"

namespace coxval {

// ⟨a, x⟩ ≤ b
struct LinIneq {
  QVector a;
  Rational b;
};

// ⟨a, x⟩ = b
struct LinEq {
  QVector a;
  Rational b;
};

struct LpOptimum {
  Rational value;
  QVector x;
};

// Exact feasibility via phase-one simplex with Bland's rule. Returns a
// witness satisfying every constraint (equalities exactly), or nullopt.
std::optional<QVector> lp_feasible(Eigen::Index dim, const std::vector<LinIneq>& ineqs,
                                   const std::vector<LinEq>& eqs);

// Maximize ⟨c, x⟩ over the same constraint form. The feasible region must be
// bounded in the direction c (callers cap auxiliary objectives explicitly);
// an unbounded ray raises domain_error. nullopt means infeasible.
std::optional<LpOptimum> lp_maximize(Eigen::Index dim, const QVector& c,
                                     const std::vector<LinIneq>& ineqs,
                                     const std::vector<LinEq>& eqs);

// Strict feasibility: every row of `strict` must hold with ⟨a,x⟩ < b. Reduced
// to one weak LP by a shared slack t maximized subject to t ≤ 1; feasible with
// positive optimum iff a strict witness exists.
std::optional<QVector> lp_strict_feasible(Eigen::Index dim, const std::vector<LinIneq>& weak,
                                          const std::vector<LinIneq>& strict,
                                          const std::vector<LinEq>& eqs);

// A point in the relative interior of {x : ineqs, eqs}: equalities exact,
// every non-implicit inequality strict. Detects implicit equalities by slack
// maximization, so degenerate H-descriptions are handled. nullopt if empty.
std::optional<QVector> lp_relative_interior(Eigen::Index dim, const std::vector<LinIneq>& ineqs,
                                            const std::vector<LinEq>& eqs);

}  // namespace coxval

#endif
