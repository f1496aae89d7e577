#include "coxval/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coxval/errors.hpp"
#include "coxval/linalg.hpp"

namespace coxval {

bool HRep::contains(const QVector& x) const {
  for (const auto& iq : ineqs)
    if (iq.a.dot(x) > iq.b) return false;
  for (const auto& eq : eqs)
    if (eq.a.dot(x) != eq.b) return false;
  return true;
}

void HRep::append(const HRep& other) {
  ineqs.insert(ineqs.end(), other.ineqs.begin(), other.ineqs.end());
  eqs.insert(eqs.end(), other.eqs.begin(), other.eqs.end());
}

namespace {

// x ∈ conv(points)? One feasibility LP over the convex weights.
bool in_hull(const std::vector<QVector>& points, const QVector& x) {
  if (points.empty()) return false;
  const Eigen::Index k = static_cast<Eigen::Index>(points.size());
  std::vector<LinIneq> nonneg;
  std::vector<LinEq> eqs;
  for (Eigen::Index i = 0; i < k; ++i) {
    QVector row = QVector::Zero(k);
    row(i) = Rational(-1);
    nonneg.push_back({row, Rational(0)});
  }
  for (Eigen::Index c = 0; c < x.size(); ++c) {
    QVector row(k);
    for (Eigen::Index i = 0; i < k; ++i) row(i) = points[static_cast<std::size_t>(i)](c);
    eqs.push_back({row, x(c)});
  }
  eqs.push_back({QVector::Ones(k), Rational(1)});
  return lp_feasible(k, nonneg, eqs).has_value();
}

}  // namespace

VPolytope::VPolytope(std::vector<QVector> points) {
  if (points.empty()) throw input_error("polytope needs at least one point");
  for (const auto& p : points)
    if (p.size() != points[0].size()) throw input_error("polytope points of mixed dimension");

  std::set<QVector, QVectorLess> dedup(points.begin(), points.end());
  std::vector<QVector> pts(dedup.begin(), dedup.end());

  // Strip points inside the hull of the rest; removal never changes the hull.
  for (std::size_t i = 0; i < pts.size();) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (in_hull(others, pts[i]))
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  vertices_ = std::move(pts);
  dim_ = affine_dim(vertices_);
}

bool VPolytope::contains(const QVector& x) const {
  if (x.size() != ambient()) throw input_error("point dimension mismatch");
  return in_hull(vertices_, x);
}

QVector VPolytope::barycenter() const {
  QVector acc = QVector::Zero(ambient());
  for (const auto& v : vertices_) acc += v;
  return acc / Rational(static_cast<long long>(vertices_.size()));
}

std::vector<Face> VPolytope::faces() const {
  const int nv = static_cast<int>(vertices_.size());
  if (nv > 60 || dim_ > 5) throw capacity_error("face enumeration supports <=60 vertices, dim<=5");

  // Candidate vertex subsets: affine closures of up to dim+1 vertices. Every
  // face is affinely closed and spanned by at most dim+1 of its vertices, so
  // the sweep is complete; an LP then keeps exactly the separable subsets.
  std::set<std::vector<int>> candidates;
  {
    std::vector<int> all(vertices_.size());
    for (int i = 0; i < nv; ++i) all[static_cast<std::size_t>(i)] = i;
    candidates.insert(all);
  }
  std::vector<int> chosen;
  auto closure_of_chosen = [&]() {
    std::vector<QVector> span;
    for (int i : chosen) span.push_back(vertices_[static_cast<std::size_t>(i)]);
    std::vector<int> cl;
    for (int j = 0; j < nv; ++j) {
      if (in_affine_hull(span, vertices_[static_cast<std::size_t>(j)])) cl.push_back(j);
    }
    candidates.insert(std::move(cl));
  };
  auto sweep = [&](auto&& self, int next) -> void {
    if (!chosen.empty()) closure_of_chosen();
    if (static_cast<int>(chosen.size()) == dim_ + 1) return;
    for (int j = next; j < nv; ++j) {
      std::vector<QVector> span;
      for (int i : chosen) span.push_back(vertices_[static_cast<std::size_t>(i)]);
      // Only affinely independent extensions: dependent ones add no closure.
      if (!span.empty() && in_affine_hull(span, vertices_[static_cast<std::size_t>(j)])) continue;
      chosen.push_back(j);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  sweep(sweep, 0);

  // Separability LP over (y, c): ⟨y,v⟩ = c on the subset, ≤ c−1 off it.
  const Eigen::Index d = ambient();
  std::vector<Face> out;
  for (const auto& cand : candidates) {
    std::vector<LinEq> eqs;
    std::vector<LinIneq> ineqs;
    std::vector<bool> inside(static_cast<std::size_t>(nv), false);
    for (int i : cand) inside[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < nv; ++i) {
      QVector row(d + 1);
      row.head(d) = vertices_[static_cast<std::size_t>(i)];
      row(d) = Rational(-1);
      if (inside[static_cast<std::size_t>(i)])
        eqs.push_back({row, Rational(0)});
      else
        ineqs.push_back({row, Rational(-1)});
    }
    auto w = lp_feasible(d + 1, ineqs, eqs);
    if (!w) continue;
    Face f;
    f.vertex_subset = cand;
    f.supporting_functional = w->head(d);
    std::vector<QVector> pts;
    for (int i : cand) pts.push_back(vertices_[static_cast<std::size_t>(i)]);
    f.dim = affine_dim(pts);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_subset < b.vertex_subset;
  });
  return out;
}

std::vector<Face> VPolytope::facets() const {
  const int nv = static_cast<int>(vertices_.size());
  if (nv > 60 || dim_ > 5) throw capacity_error("facet enumeration supports <=60 vertices, dim<=5");
  if (dim_ == 0) return {};

  std::vector<QVector> dirs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) dirs.push_back(vertices_[i] - vertices_[0]);
  const std::vector<QVector> perp = orthogonal_complement(rows_to_matrix(dirs, ambient()), ambient());

  // A facet hyperplane is spanned by dim affinely independent vertices and
  // has every vertex on one closed side. Its normal is the line orthogonal
  // to the spanned directions inside the polytope's own direction space, so
  // no LP is needed; a sign sweep over the vertices does the rest.
  std::set<std::vector<int>> seen;
  std::vector<Face> out;
  std::vector<int> chosen;
  auto leaf = [&]() {
    const QVector& p0 = vertices_[static_cast<std::size_t>(chosen[0])];
    std::vector<QVector> rows;
    for (std::size_t t = 1; t < chosen.size(); ++t)
      rows.push_back(vertices_[static_cast<std::size_t>(chosen[t])] - p0);
    for (const auto& e : perp) rows.push_back(e);
    const auto normals = orthogonal_complement(rows_to_matrix(rows, ambient()), ambient());
    if (normals.size() != 1) throw consistency_error("facet normal space is not a line");
    QVector n = primitive_ray(normals[0]);
    bool any_above = false, any_below = false;
    std::vector<int> zeros;
    for (int j = 0; j < nv; ++j) {
      const Rational s = n.dot(vertices_[static_cast<std::size_t>(j)] - p0);
      if (s > 0) any_above = true;
      if (s < 0) any_below = true;
      if (s == 0) zeros.push_back(j);
    }
    if (any_above && any_below) return;
    if (any_above) n = -n;
    if (!seen.insert(zeros).second) return;
    Face f;
    f.vertex_subset = std::move(zeros);
    f.supporting_functional = std::move(n);
    f.dim = dim_ - 1;
    out.push_back(std::move(f));
  };
  auto sweep = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == dim_) {
      leaf();
      return;
    }
    for (int j = next; j < nv; ++j) {
      std::vector<QVector> span;
      for (int i : chosen) span.push_back(vertices_[static_cast<std::size_t>(i)]);
      if (!span.empty() && in_affine_hull(span, vertices_[static_cast<std::size_t>(j)])) continue;
      chosen.push_back(j);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  sweep(sweep, 0);

  std::sort(out.begin(), out.end(),
            [](const Face& a, const Face& b) { return a.vertex_subset < b.vertex_subset; });
  return out;
}

HRep VPolytope::hrep() const {
  HRep h;
  std::vector<QVector> dirs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) dirs.push_back(vertices_[i] - vertices_[0]);
  for (const auto& e : orthogonal_complement(rows_to_matrix(dirs, ambient()), ambient()))
    h.eqs.push_back({e, e.dot(vertices_[0])});
  for (const auto& f : facets()) {
    const QVector& y = f.supporting_functional;
    h.ineqs.push_back({y, y.dot(vertices_[static_cast<std::size_t>(f.vertex_subset[0])])});
  }
  return h;
}

bool VPolytope::operator==(const VPolytope& o) const {
  if (vertices_.size() != o.vertices_.size()) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (compare(vertices_[i], o.vertices_[i]) != 0) return false;
  return true;
}

std::vector<QVector> edge_directions(const VPolytope& p) {
  const auto& v = p.vertices();
  const int nv = static_cast<int>(v.size());
  if (nv < 2) return {};
  const HRep h = p.hrep();

  // The minimal face containing two vertices is cut out by the inequalities
  // tight at both of them; the pair is an edge exactly when that face is a
  // line, i.e. the tight rows plus the equations have corank one.
  std::vector<std::vector<bool>> tight(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i)
    for (const auto& iq : h.ineqs)
      tight[static_cast<std::size_t>(i)].push_back(iq.a.dot(v[static_cast<std::size_t>(i)]) == iq.b);

  std::set<QVector, QVectorLess> dirs;
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      const QVector dir = primitive_direction(v[static_cast<std::size_t>(j)] - v[static_cast<std::size_t>(i)]);
      if (dirs.count(dir)) continue;
      std::vector<QVector> rows;
      for (const auto& eq : h.eqs) rows.push_back(eq.a);
      for (std::size_t r = 0; r < h.ineqs.size(); ++r)
        if (tight[static_cast<std::size_t>(i)][r] && tight[static_cast<std::size_t>(j)][r])
          rows.push_back(h.ineqs[r].a);
      if (rank(rows_to_matrix(rows, p.ambient())) == p.ambient() - 1) dirs.insert(dir);
    }
  }
  return {dirs.begin(), dirs.end()};
}

bool is_extended_deformation(const VPolytope& p, const RootSystem& rs) {
  if (p.ambient() != rs.ambient) throw input_error("polytope/root-system dimension mismatch");
  std::set<QVector, QVectorLess> root_dirs;
  for (const auto& a : rs.positive) root_dirs.insert(primitive_direction(a));
  for (const auto& d : edge_directions(p))
    if (root_dirs.count(d) == 0) return false;
  return true;
}

std::vector<QVector> hrep_vertices(const HRep& h, Eigen::Index ambient) {
  std::vector<QVector> eqrows;
  for (const auto& e : h.eqs) eqrows.push_back(e.a);
  const Eigen::Index base_rank = eqrows.empty() ? 0 : rank(rows_to_matrix(eqrows, ambient));
  const int need = static_cast<int>(ambient - base_rank);
  const int m = static_cast<int>(h.ineqs.size());
  if (need > 0 && m == 0) return {};
  if (need > ambient || need < 0) throw consistency_error("hrep rank bookkeeping");

  std::set<QVector, QVectorLess> found;
  std::vector<int> idx;
  auto solve_current = [&]() {
    QMatrix a(static_cast<Eigen::Index>(h.eqs.size() + idx.size()), ambient);
    QVector b(a.rows());
    Eigen::Index r = 0;
    for (const auto& e : h.eqs) {
      a.row(r) = e.a.transpose();
      b(r) = e.b;
      ++r;
    }
    for (int k : idx) {
      a.row(r) = h.ineqs[static_cast<std::size_t>(k)].a.transpose();
      b(r) = h.ineqs[static_cast<std::size_t>(k)].b;
      ++r;
    }
    auto sol = solve_linear(a, b);
    if (sol && sol->kernel.empty() && h.contains(sol->particular)) found.insert(sol->particular);
  };
  auto rec = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      solve_current();
      return;
    }
    for (int k = next; k <= m - remaining; ++k) {
      idx.push_back(k);
      self(self, k + 1, remaining - 1);
      idx.pop_back();
    }
  };
  rec(rec, 0, need);
  return {found.begin(), found.end()};
}

}  // namespace coxval
