#include "coxval/lp.hpp"

#include <algorithm>

#include "coxval/errors.hpp"

namespace coxval {
namespace {

// Dense rational simplex on the standard-form tableau
//
//   A y = b,  y ≥ 0,  maximize ⟨c, y⟩
//
// with free variables split as x = u − v ahead of time. The tableau keeps the
// reduced-cost row as its last row (entries z_j − c_j, objective value in the
// rhs corner). Bland's smallest-index rule everywhere, so termination is
// guaranteed and results are deterministic.
class Simplex {
 public:
  Simplex(Eigen::Index dim, const std::vector<LinIneq>& ineqs, const std::vector<LinEq>& eqs)
      : dim_(dim), rows_(static_cast<Eigen::Index>(ineqs.size() + eqs.size())) {
    const Eigen::Index m = rows_;
    const Eigen::Index n_slack = static_cast<Eigen::Index>(ineqs.size());
    n_struct_ = 2 * dim_ + n_slack;

    QMatrix body = QMatrix::Zero(m, n_struct_);
    QVector rhs = QVector::Zero(m);
    Eigen::Index r = 0;
    for (const auto& iq : ineqs) {
      if (iq.a.size() != dim_) throw input_error("lp: constraint dimension mismatch");
      for (Eigen::Index k = 0; k < dim_; ++k) {
        body(r, k) = iq.a(k);
        body(r, dim_ + k) = -iq.a(k);
      }
      body(r, 2 * dim_ + r) = Rational(1);
      rhs(r) = iq.b;
      ++r;
    }
    for (const auto& eq : eqs) {
      if (eq.a.size() != dim_) throw input_error("lp: constraint dimension mismatch");
      for (Eigen::Index k = 0; k < dim_; ++k) {
        body(r, k) = eq.a(k);
        body(r, dim_ + k) = -eq.a(k);
      }
      rhs(r) = eq.b;
      ++r;
    }

    // Normalize rhs ≥ 0 so the artificial basis is feasible.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (rhs(i).sign() < 0) {
        body.row(i) = -body.row(i);
        rhs(i) = -rhs(i);
      }
    }

    // Rows whose slack survived the normalization with coefficient +1 can use
    // it as the initial basic variable; the rest get artificials.
    basis_.assign(static_cast<std::size_t>(m), -1);
    std::vector<Eigen::Index> needs_artificial;
    for (Eigen::Index i = 0; i < m; ++i) {
      const Eigen::Index s = 2 * dim_ + i;
      if (i < n_slack && body(i, s) == Rational(1)) {
        basis_[static_cast<std::size_t>(i)] = s;
      } else {
        needs_artificial.push_back(i);
      }
    }
    n_total_ = n_struct_ + static_cast<Eigen::Index>(needs_artificial.size());

    tab_ = QMatrix::Zero(m + 1, n_total_ + 1);
    tab_.block(0, 0, m, n_struct_) = body;
    tab_.col(n_total_).head(m) = rhs;
    Eigen::Index next = n_struct_;
    for (Eigen::Index i : needs_artificial) {
      tab_(i, next) = Rational(1);
      basis_[static_cast<std::size_t>(i)] = next;
      ++next;
    }
  }

  // Phase one: maximize −Σ artificials. Returns true when the optimum is zero.
  bool phase_one() {
    const Eigen::Index m = rows_;
    // Objective row holds z_j − c_j for c = −1 on artificials, 0 elsewhere;
    // with the artificial-and-slack starting basis that is
    // −Σ_{artificial rows r} T(r,j) − c_j.
    for (Eigen::Index j = 0; j <= n_total_; ++j) {
      Rational acc(0);
      for (Eigen::Index i = 0; i < m; ++i) {
        if (basis_[static_cast<std::size_t>(i)] >= n_struct_) acc += tab_(i, j);
      }
      if (j < n_total_ && j >= n_struct_)
        tab_(m, j) = Rational(1) - acc;
      else
        tab_(m, j) = -acc;  // corner: current value −Σ artificials, driven to 0
    }
    optimize(n_total_);
    if (tab_(m, n_total_).sign() != 0) return false;

    // Drive remaining (zero-valued) artificials out of the basis. A row with
    // no structural pivot candidate is a redundant constraint; blank it.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_struct_) continue;
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < n_struct_; ++j) {
        if (tab_(i, j).sign() != 0) {
          enter = j;
          break;
        }
      }
      if (enter >= 0) {
        pivot(i, enter);
      } else {
        tab_.row(i).setZero();
      }
    }
    return true;
  }

  // Phase two on the structural objective c (length n_struct_), artificials
  // barred from entering. Returns false when unbounded.
  bool phase_two(const QVector& c) {
    const Eigen::Index m = rows_;
    for (Eigen::Index j = 0; j <= n_total_; ++j) {
      Rational acc(0);
      for (Eigen::Index i = 0; i < m; ++i) {
        const Eigen::Index bi = basis_[static_cast<std::size_t>(i)];
        if (bi >= 0 && bi < n_struct_ && c(bi).sign() != 0) acc += c(bi) * tab_(i, j);
      }
      tab_(m, j) = acc;
      if (j < n_struct_) tab_(m, j) -= c(j);
    }
    return optimize(n_struct_);
  }

  Rational objective_value() const { return tab_(rows_, n_total_); }

  // Structural solution y (length n_struct_); x = y.head(dim) − y.segment(dim, dim).
  QVector structural() const {
    QVector y = QVector::Zero(n_struct_);
    for (Eigen::Index i = 0; i < rows_; ++i) {
      const Eigen::Index bi = basis_[static_cast<std::size_t>(i)];
      if (bi >= 0 && bi < n_struct_) y(bi) = tab_(i, n_total_);
    }
    return y;
  }

  QVector extract_x() const {
    const QVector y = structural();
    QVector x(dim_);
    for (Eigen::Index k = 0; k < dim_; ++k) x(k) = y(k) - y(dim_ + k);
    return x;
  }

 private:
  void pivot(Eigen::Index row, Eigen::Index col) {
    tab_.row(row) /= tab_(row, col);
    for (Eigen::Index i = 0; i <= rows_; ++i) {
      if (i == row || tab_(i, col).sign() == 0) continue;
      const Rational f = tab_(i, col);
      tab_.row(i) -= f * tab_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Run to optimality over columns [0, col_limit). False iff unbounded.
  bool optimize(Eigen::Index col_limit) {
    const Eigen::Index m = rows_;
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < col_limit; ++j) {
        if (tab_(m, j).sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      Eigen::Index leave = -1;
      Rational best;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (tab_(i, enter).sign() <= 0) continue;
        const Rational ratio = tab_(i, n_total_) / tab_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] <
                                  basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Eigen::Index dim_;
  Eigen::Index rows_;
  Eigen::Index n_struct_ = 0;
  Eigen::Index n_total_ = 0;
  QMatrix tab_;
  std::vector<Eigen::Index> basis_;
};

bool satisfies(const QVector& x, const std::vector<LinIneq>& ineqs, const std::vector<LinEq>& eqs) {
  for (const auto& iq : ineqs)
    if (iq.a.dot(x) > iq.b) return false;
  for (const auto& eq : eqs)
    if (eq.a.dot(x) != eq.b) return false;
  return true;
}

}  // namespace

std::optional<QVector> lp_feasible(Eigen::Index dim, const std::vector<LinIneq>& ineqs,
                                   const std::vector<LinEq>& eqs) {
  if (ineqs.empty() && eqs.empty()) return QVector::Zero(dim);
  Simplex s(dim, ineqs, eqs);
  if (!s.phase_one()) return std::nullopt;
  QVector x = s.extract_x();
  if (!satisfies(x, ineqs, eqs)) throw consistency_error("lp_feasible: witness fails constraints");
  return x;
}

std::optional<LpOptimum> lp_maximize(Eigen::Index dim, const QVector& c,
                                     const std::vector<LinIneq>& ineqs,
                                     const std::vector<LinEq>& eqs) {
  if (c.size() != dim) throw input_error("lp_maximize: objective dimension mismatch");
  Simplex s(dim, ineqs, eqs);
  if (!s.phase_one()) return std::nullopt;
  QVector cs = QVector::Zero(2 * dim + static_cast<Eigen::Index>(ineqs.size()));
  for (Eigen::Index k = 0; k < dim; ++k) {
    cs(k) = c(k);
    cs(dim + k) = -c(k);
  }
  if (!s.phase_two(cs)) throw domain_error("lp_maximize: objective unbounded");
  QVector x = s.extract_x();
  if (!satisfies(x, ineqs, eqs)) throw consistency_error("lp_maximize: witness fails constraints");
  LpOptimum opt;
  opt.value = c.dot(x);
  opt.x = std::move(x);
  return opt;
}

std::optional<QVector> lp_strict_feasible(Eigen::Index dim, const std::vector<LinIneq>& weak,
                                          const std::vector<LinIneq>& strict,
                                          const std::vector<LinEq>& eqs) {
  // Append a slack t shared by all strict rows: a·x + t ≤ b, maximize t ≤ 1.
  const Eigen::Index d1 = dim + 1;
  std::vector<LinIneq> ext;
  ext.reserve(weak.size() + strict.size() + 1);
  for (const auto& iq : weak) {
    LinIneq e;
    e.a = QVector::Zero(d1);
    e.a.head(dim) = iq.a;
    e.b = iq.b;
    ext.push_back(std::move(e));
  }
  for (const auto& iq : strict) {
    LinIneq e;
    e.a = QVector::Zero(d1);
    e.a.head(dim) = iq.a;
    e.a(dim) = Rational(1);
    e.b = iq.b;
    ext.push_back(std::move(e));
  }
  {
    LinIneq cap;
    cap.a = QVector::Zero(d1);
    cap.a(dim) = Rational(1);
    cap.b = Rational(1);
    ext.push_back(std::move(cap));
  }
  std::vector<LinEq> exteq;
  exteq.reserve(eqs.size());
  for (const auto& eq : eqs) {
    LinEq e;
    e.a = QVector::Zero(d1);
    e.a.head(dim) = eq.a;
    e.b = eq.b;
    exteq.push_back(std::move(e));
  }
  QVector obj = QVector::Zero(d1);
  obj(dim) = Rational(1);
  auto opt = lp_maximize(d1, obj, ext, exteq);
  if (!opt || opt->value.sign() <= 0) return std::nullopt;
  return QVector(opt->x.head(dim));
}

std::optional<QVector> lp_relative_interior(Eigen::Index dim, const std::vector<LinIneq>& ineqs,
                                            const std::vector<LinEq>& eqs) {
  if (!lp_feasible(dim, ineqs, eqs)) return std::nullopt;
  if (auto x = lp_strict_feasible(dim, {}, ineqs, eqs)) return x;

  // Some inequalities hold with equality everywhere on the feasible set.
  // Identify them one at a time (maximize that row's slack alone) and promote
  // to equalities; the rest then admit a common strict witness.
  std::vector<LinEq> eq2 = eqs;
  std::vector<LinIneq> open;
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    std::vector<LinIneq> weak = ineqs;
    std::vector<LinIneq> one{ineqs[i]};
    weak.erase(weak.begin() + static_cast<std::ptrdiff_t>(i));
    if (lp_strict_feasible(dim, weak, one, eqs)) {
      open.push_back(ineqs[i]);
    } else {
      LinEq e;
      e.a = ineqs[i].a;
      e.b = ineqs[i].b;
      eq2.push_back(std::move(e));
    }
  }
  auto x = lp_strict_feasible(dim, {}, open, eq2);
  if (!x) throw consistency_error("lp_relative_interior: no strict witness after promotion");
  return x;
}

}  // namespace coxval
