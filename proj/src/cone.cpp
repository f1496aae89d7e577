#include "coxval/cone.hpp"

#include <algorithm>
#include <set>

#include "coxval/errors.hpp"
#include "coxval/linalg.hpp"

namespace coxval {

namespace {

// x ∈ Cone(rays) + span(lines)? Feasibility over (λ ≥ 0, μ free).
bool conic_member(const std::vector<QVector>& rays, const std::vector<QVector>& lines,
                  const QVector& x) {
  const Eigen::Index k = static_cast<Eigen::Index>(rays.size());
  const Eigen::Index l = static_cast<Eigen::Index>(lines.size());
  if (k + l == 0) return x.isZero();
  std::vector<LinIneq> nonneg;
  for (Eigen::Index i = 0; i < k; ++i) {
    QVector row = QVector::Zero(k + l);
    row(i) = Rational(-1);
    nonneg.push_back({row, Rational(0)});
  }
  std::vector<LinEq> eqs;
  for (Eigen::Index c = 0; c < x.size(); ++c) {
    QVector row(k + l);
    for (Eigen::Index i = 0; i < k; ++i) row(i) = rays[static_cast<std::size_t>(i)](c);
    for (Eigen::Index j = 0; j < l; ++j) row(k + j) = lines[static_cast<std::size_t>(j)](c);
    eqs.push_back({row, x(c)});
  }
  return lp_feasible(k + l, nonneg, eqs).has_value();
}

std::vector<QVector> matrix_rows(const QMatrix& m) {
  std::vector<QVector> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(m.row(i).transpose());
  return out;
}

}  // namespace

AffineCone::AffineCone(QVector apex, std::vector<QVector> generators,
                       std::vector<QVector> lineality) {
  const Eigen::Index d = apex.size();
  for (const auto& g : generators)
    if (g.size() != d) throw input_error("cone generator dimension mismatch");
  for (const auto& l : lineality)
    if (l.size() != d) throw input_error("cone lineality dimension mismatch");

  // Full lineality space: the declared lines plus every generator whose
  // negation stays inside the cone.
  std::vector<QVector> lines = lineality;
  for (const auto& g : generators) {
    if (g.isZero()) continue;
    if (conic_member(generators, lineality, QVector(-g))) lines.push_back(g);
  }
  QMatrix lin_canon = rref(rows_to_matrix(lines, d));
  lineality_.clear();
  for (const auto& row : matrix_rows(lin_canon)) lineality_.push_back(primitive_ray(row));
  const QMatrix lin_basis = rows_to_matrix(lineality_, d);

  // Rays: generators reduced mod lineality, primitive, deduplicated, then
  // stripped down to the extreme ones.
  std::set<QVector, QVectorLess> rayset;
  for (const auto& g : generators) {
    QVector r = project_off_span(lin_basis, g);
    if (!r.isZero()) rayset.insert(primitive_ray(r));
  }
  rays_.assign(rayset.begin(), rayset.end());
  for (std::size_t i = 0; i < rays_.size();) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < rays_.size(); ++j)
      if (j != i) others.push_back(rays_[j]);
    if (conic_member(others, lineality_, rays_[i]))
      rays_.erase(rays_.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }

  apex_ = project_off_span(lin_basis, apex);

  std::vector<QVector> span = rays_;
  span.insert(span.end(), lineality_.begin(), lineality_.end());
  dim_ = static_cast<int>(span.empty() ? 0 : rank(rows_to_matrix(span, d)));
}

AffineCone AffineCone::full_space(Eigen::Index ambient) {
  std::vector<QVector> lines;
  for (Eigen::Index i = 0; i < ambient; ++i) {
    QVector e = QVector::Zero(ambient);
    e(i) = Rational(1);
    lines.push_back(std::move(e));
  }
  return AffineCone(QVector::Zero(ambient), {}, std::move(lines));
}

AffineCone AffineCone::single_point(QVector apex) { return AffineCone(std::move(apex), {}, {}); }

bool AffineCone::contains(const QVector& x) const {
  if (x.size() != ambient()) throw input_error("point dimension mismatch");
  return conic_member(rays_, lineality_, x - apex_);
}

AffineCone AffineCone::translated(const QVector& t) const {
  return AffineCone(apex_ + t, rays_, lineality_);
}

AffineCone AffineCone::transformed(const QMatrix& m) const {
  std::vector<QVector> rays, lines;
  for (const auto& r : rays_) rays.push_back(m * r);
  for (const auto& l : lineality_) lines.push_back(m * l);
  return AffineCone(m * apex_, std::move(rays), std::move(lines));
}

HRep AffineCone::hrep() const {
  const Eigen::Index d = ambient();
  HRep h;
  std::vector<QVector> span = rays_;
  span.insert(span.end(), lineality_.begin(), lineality_.end());
  for (const auto& e : orthogonal_complement(rows_to_matrix(span, d), d))
    h.eqs.push_back({e, e.dot(apex_)});

  // Facet normals of the pointed part: for each (p−1)-subset of rays, the
  // direction inside the cone's span, orthogonal to the subset and to the
  // lineality, oriented against the remaining rays. Every facet holds p−1
  // independent rays, so the sweep is complete; extra supporting rows are
  // redundant but harmless.
  const int p = dim_ - lineality_dim();
  if (p == 0) return h;
  const int k = static_cast<int>(rays_.size());
  std::vector<QVector> fixed_rows = orthogonal_complement(rows_to_matrix(span, d), d);
  fixed_rows.insert(fixed_rows.end(), lineality_.begin(), lineality_.end());
  std::set<QVector, QVectorLess> normals;
  std::vector<int> idx;
  auto try_subset = [&]() {
    std::vector<QVector> rows = fixed_rows;
    for (int i : idx) rows.push_back(rays_[static_cast<std::size_t>(i)]);
    auto ker = kernel_basis(rows_to_matrix(rows, d));
    if (ker.size() != 1) return;
    QVector n = primitive_ray(ker[0]);
    int pos = 0, neg = 0;
    for (const auto& r : rays_) {
      const int s = n.dot(r).sign();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos > 0 && neg > 0) return;
    if (pos > 0) n = -n;
    normals.insert(n);
  };
  auto rec = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      try_subset();
      return;
    }
    for (int i = next; i <= k - remaining; ++i) {
      idx.push_back(i);
      self(self, i + 1, remaining - 1);
      idx.pop_back();
    }
  };
  rec(rec, 0, p - 1);
  for (const auto& n : normals) h.ineqs.push_back({n, n.dot(apex_)});
  return h;
}

QVector AffineCone::polar_relint() const {
  const Eigen::Index d = ambient();
  std::vector<LinIneq> ineqs;
  std::vector<LinEq> eqs;
  for (const auto& r : rays_) ineqs.push_back({r, Rational(0)});
  for (const auto& l : lineality_) eqs.push_back({l, Rational(0)});
  auto y = lp_relative_interior(d, ineqs, eqs);
  if (!y) throw consistency_error("polar cone has no relative interior point");
  return *y;
}

std::vector<std::vector<int>> AffineCone::face_ray_subsets() const {
  const int k = static_cast<int>(rays_.size());
  if (k > 16) throw capacity_error("cone face enumeration supports <=16 rays");
  const Eigen::Index d = ambient();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    // Supporting functional: zero on the subset and the lineality, ≤ −1 on
    // the other rays.
    std::vector<LinEq> eqs;
    std::vector<LinIneq> ineqs;
    std::vector<int> subset;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i))
        subset.push_back(i);
      else
        ineqs.push_back({rays_[static_cast<std::size_t>(i)], Rational(-1)});
    }
    for (int i : subset) eqs.push_back({rays_[static_cast<std::size_t>(i)], Rational(0)});
    for (const auto& l : lineality_) eqs.push_back({l, Rational(0)});
    if (lp_feasible(d, ineqs, eqs)) out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool AffineCone::operator==(const AffineCone& o) const {
  return !(*this < o) && !(o < *this);
}

bool AffineCone::operator<(const AffineCone& o) const {
  if (int c = compare(apex_, o.apex_); c != 0) return c < 0;
  if (rays_.size() != o.rays_.size()) return rays_.size() < o.rays_.size();
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (int c = compare(rays_[i], o.rays_[i]); c != 0) return c < 0;
  if (lineality_.size() != o.lineality_.size()) return lineality_.size() < o.lineality_.size();
  for (std::size_t i = 0; i < lineality_.size(); ++i)
    if (int c = compare(lineality_[i], o.lineality_[i]); c != 0) return c < 0;
  return false;
}

AffineCone tangent_cone(const VPolytope& p, const Face& f) {
  const auto& verts = p.vertices();
  const QVector& v0 = verts[static_cast<std::size_t>(f.vertex_subset.front())];
  std::vector<QVector> gens;
  for (const auto& v : verts) gens.push_back(v - v0);
  std::vector<QVector> lines;
  for (int i : f.vertex_subset) {
    QVector dir = verts[static_cast<std::size_t>(i)] - v0;
    if (!dir.isZero()) lines.push_back(std::move(dir));
  }
  return AffineCone(v0, std::move(gens), std::move(lines));
}

bool tightly_contains(const AffineCone& c, const VPolytope& p) {
  if (c.ambient() != p.ambient()) throw input_error("cone/polytope dimension mismatch");
  for (const auto& v : p.vertices())
    if (!c.contains(v)) return false;

  // P must meet the lineality flat apex + span(lineality): a convex
  // combination of vertices equal to apex + lineality combination.
  const auto& verts = p.vertices();
  const auto& lines = c.lineality_basis();
  const Eigen::Index k = static_cast<Eigen::Index>(verts.size());
  const Eigen::Index l = static_cast<Eigen::Index>(lines.size());
  std::vector<LinIneq> nonneg;
  for (Eigen::Index i = 0; i < k; ++i) {
    QVector row = QVector::Zero(k + l);
    row(i) = Rational(-1);
    nonneg.push_back({row, Rational(0)});
  }
  std::vector<LinEq> eqs;
  for (Eigen::Index coord = 0; coord < c.ambient(); ++coord) {
    QVector row = QVector::Zero(k + l);
    for (Eigen::Index i = 0; i < k; ++i) row(i) = verts[static_cast<std::size_t>(i)](coord);
    for (Eigen::Index j = 0; j < l; ++j) row(k + j) = -lines[static_cast<std::size_t>(j)](coord);
    eqs.push_back({row, c.apex()(coord)});
  }
  {
    QVector row = QVector::Zero(k + l);
    row.head(k) = QVector::Ones(k);
    eqs.push_back({row, Rational(1)});
  }
  return lp_feasible(k + l, nonneg, eqs).has_value();
}

bool tightly_contains(const AffineCone& c, const AffineCone& p) {
  if (c.ambient() != p.ambient()) throw input_error("cone/cone dimension mismatch");
  if (!c.contains(p.apex())) return false;
  // Recession directions of P must be recession directions of C.
  for (const auto& r : p.rays())
    if (!c.contains(c.apex() + r)) return false;
  for (const auto& l : p.lineality_basis())
    if (!c.contains(c.apex() + l) || !c.contains(c.apex() - l)) return false;

  // P must meet the lineality flat apex + span(lineality) of C.
  const Eigen::Index d = c.ambient();
  const HRep h = p.hrep();
  std::vector<LinEq> eqs = h.eqs;
  const QMatrix lin = rows_to_matrix(c.lineality_basis(), d);
  for (const auto& e : orthogonal_complement(lin, d)) eqs.push_back({e, e.dot(c.apex())});
  return lp_feasible(d, h.ineqs, eqs).has_value();
}

std::optional<QVector> tight_translate(const AffineCone& cone_at_origin, const VPolytope& p) {
  if (cone_at_origin.ambient() != p.ambient())
    throw input_error("cone/polytope dimension mismatch");
  if (!cone_at_origin.apex().isZero())
    throw input_error("tight_translate expects a cone class anchored at the origin");

  // y separates: on any tight translate C+v, ⟨y,·⟩ is maximized exactly on
  // the lineality flat through v. So anchoring at a y-maximal vertex of P is
  // the only candidate worth testing.
  const QVector y = cone_at_origin.polar_relint();
  const auto& verts = p.vertices();
  std::size_t best = 0;
  Rational best_val = y.dot(verts[0]);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    const Rational val = y.dot(verts[i]);
    if (val > best_val) {
      best = i;
      best_val = val;
    }
  }
  AffineCone candidate = cone_at_origin.translated(verts[best]);
  if (!tightly_contains(candidate, p)) return std::nullopt;
  return candidate.apex();
}

}  // namespace coxval
