#ifndef COXVAL_LINALG_HPP
#define COXVAL_LINALG_HPP

#include <optional>
#include <vector>

#include "coxval/rational.hpp"

namespace coxval {

// Exact reduced row echelon form with zero rows dropped. Pivots are 1 and are
// the only nonzero entries in their columns, so the result is the canonical
// basis of the row space: equal row spaces give equal matrices.
QMatrix rref(const QMatrix& a);

Eigen::Index rank(const QMatrix& a);

// Canonical basis of {x : a x = 0}, one vector per free column of rref(a).
std::vector<QVector> kernel_basis(const QMatrix& a);

struct LinearSolution {
  QVector particular;            // one solution of a x = b
  std::vector<QVector> kernel;   // basis of the solution space's directions
};

// Exact solve; nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const QMatrix& a, const QVector& b);

QMatrix rows_to_matrix(const std::vector<QVector>& rows, Eigen::Index dim);

// Orthogonal projection of x onto the row space of `span_rows` (standard
// inner product). Rows need not be independent.
QVector project_onto_span(const QMatrix& span_rows, const QVector& x);

// x minus its projection, i.e. the component orthogonal to the span.
QVector project_off_span(const QMatrix& span_rows, const QVector& x);

// Canonical basis (rref rows) of the orthogonal complement of the row space.
std::vector<QVector> orthogonal_complement(const QMatrix& span_rows, Eigen::Index dim);

// Dimension of the affine hull of a point set; -1 for the empty set.
int affine_dim(const std::vector<QVector>& points);

// Is x in the affine hull of `points`?
bool in_affine_hull(const std::vector<QVector>& points, const QVector& x);

}  // namespace coxval

#endif
