#include "coxval/linalg.hpp"

namespace coxval {

namespace {

// Gauss-Jordan on a working copy; returns pivot columns. The matrix ends in
// reduced echelon form with its zero rows swept to the bottom.
std::vector<Eigen::Index> gauss_jordan(QMatrix& m) {
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

QMatrix rref(const QMatrix& a) {
  QMatrix m = a;
  auto pivots = gauss_jordan(m);
  return m.topRows(static_cast<Eigen::Index>(pivots.size()));
}

Eigen::Index rank(const QMatrix& a) {
  QMatrix m = a;
  return static_cast<Eigen::Index>(gauss_jordan(m).size());
}

std::vector<QVector> kernel_basis(const QMatrix& a) {
  QMatrix m = a;
  auto pivots = gauss_jordan(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v = QVector::Zero(a.cols());
    v(free) = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -m(static_cast<Eigen::Index>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.size()) throw input_error("solve_linear: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto pivots = gauss_jordan(aug);
  // A pivot in the augmented column means 0 = 1 somewhere: inconsistent.
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  LinearSolution sol;
  sol.particular = QVector::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    sol.particular(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v = QVector::Zero(a.cols());
    v(free) = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v(pivots[r]) = -aug(static_cast<Eigen::Index>(r), free);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

QMatrix rows_to_matrix(const std::vector<QVector>& rows, Eigen::Index dim) {
  QMatrix m(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw consistency_error("rows_to_matrix: mixed dimensions");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

QVector project_onto_span(const QMatrix& span_rows, const QVector& x) {
  QMatrix basis = rref(span_rows);  // independent rows
  if (basis.rows() == 0) return QVector::Zero(x.size());
  // Solve the normal equations (B Bᵀ) λ = B x, projection = Bᵀ λ.
  QMatrix gram = basis * basis.transpose();
  QVector rhs = basis * x;
  auto sol = solve_linear(gram, rhs);
  if (!sol) throw consistency_error("project_onto_span: singular Gram matrix");
  return basis.transpose() * sol->particular;
}

QVector project_off_span(const QMatrix& span_rows, const QVector& x) {
  return x - project_onto_span(span_rows, x);
}

std::vector<QVector> orthogonal_complement(const QMatrix& span_rows, Eigen::Index dim) {
  if (span_rows.rows() == 0) {
    QMatrix id = QMatrix::Identity(dim, dim);
    std::vector<QVector> all;
    for (Eigen::Index i = 0; i < dim; ++i) all.push_back(id.col(i));
    return all;
  }
  // Complement vectors are the kernel of the span matrix; rref of a spanning
  // set of the kernel makes the output canonical.
  auto ker = kernel_basis(span_rows);
  QMatrix canon = rref(rows_to_matrix(ker, dim));
  std::vector<QVector> out;
  for (Eigen::Index i = 0; i < canon.rows(); ++i) out.push_back(canon.row(i).transpose());
  return out;
}

int affine_dim(const std::vector<QVector>& points) {
  if (points.empty()) return -1;
  QMatrix diffs(static_cast<Eigen::Index>(points.size()) - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.row(static_cast<Eigen::Index>(i - 1)) = (points[i] - points[0]).transpose();
  return static_cast<int>(rank(diffs));
}

bool in_affine_hull(const std::vector<QVector>& points, const QVector& x) {
  if (points.empty()) return false;
  QMatrix diffs(static_cast<Eigen::Index>(points.size()) - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.row(static_cast<Eigen::Index>(i - 1)) = (points[i] - points[0]).transpose();
  // x - p0 must lie in the span of the difference vectors.
  QMatrix m = diffs;
  Eigen::Index base_rank = rank(m);
  QMatrix ext(m.rows() + 1, m.cols());
  ext.topRows(m.rows()) = m;
  ext.row(m.rows()) = (x - points[0]).transpose();
  return rank(ext) == base_rank;
}

}  // namespace coxval
