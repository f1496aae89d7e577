#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <vector>

#include "coxval/cone.hpp"
#include "coxval/errors.hpp"
#include "coxval/indicator_sum.hpp"
#include "coxval/linalg.hpp"
#include "coxval/polytope.hpp"
#include "coxval/weyl_group.hpp"
#include "doctest.h"

using namespace coxval;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

QVector v2(const Rational& a, const Rational& b) {
  QVector v(2);
  v << a, b;
  return v;
}

QVector v3(const Rational& a, const Rational& b, const Rational& c) {
  QVector v(3);
  v << a, b, c;
  return v;
}

VPolytope mk(std::vector<QVector> pts) { return VPolytope(std::move(pts)); }

// w ∈ span(basis)?
bool span_member(const std::vector<QVector>& basis, const QVector& w) {
  if (w.isZero()) return true;
  if (basis.empty()) return false;
  QMatrix a = rows_to_matrix(basis, w.size()).transpose();
  return solve_linear(a, w).has_value();
}

// The dual characterization of tight containment for deformation pairs: pick
// y in the relative interior of the polar of C, let H = {⟨y,x⟩ = ⟨y,apex⟩};
// then C tightly contains P iff P ⊆ H⁻ and ∅ ⊊ P∩H ⊆ apex + lineality.
bool halfspace_oracle(const AffineCone& c, const VPolytope& p) {
  const QVector y = c.polar_relint();
  const Rational level = y.dot(c.apex());
  Rational mx = y.dot(p.vertices()[0]);
  for (const auto& v : p.vertices()) mx = std::max(mx, y.dot(v));
  if (mx != level) return false;  // P ⊄ H⁻ or P∩H = ∅
  for (const auto& v : p.vertices())
    if (y.dot(v) == level && !span_member(c.lineality_basis(), v - c.apex())) return false;
  return true;
}

const QVector e1 = v2(q(1), q(0));
const QVector e2 = v2(q(0), q(1));
const QVector zero2 = v2(q(0), q(0));

}  // namespace

TEST_CASE("polytope construction deduplicates and strips non-vertices") {
  VPolytope p({zero2, e1, v2(q(1, 2), q(0)), zero2, v2(q(1, 4), q(0))});
  REQUIRE(p.vertices().size() == 2);
  CHECK(p.vertices()[0] == zero2);
  CHECK(p.vertices()[1] == e1);
  CHECK(p.dim() == 1);
  CHECK(p.ambient() == 2);

  VPolytope square({zero2, e1, e2, e1 + e2, v2(q(1, 2), q(1, 2)), e1});
  CHECK(square.vertices().size() == 4);
  CHECK(square.dim() == 2);

  CHECK(VPolytope({zero2}).dim() == 0);
  CHECK_THROWS_AS(VPolytope({}), input_error);
  CHECK_THROWS_AS(VPolytope({zero2, v3(q(0), q(0), q(0))}), input_error);

  // Same point set, different presentation order.
  VPolytope a({e1, zero2, e2});
  VPolytope b({e2, e2, e1, v2(q(1, 3), q(1, 3)), zero2});
  CHECK(a == b);
}

TEST_CASE("polytope membership") {
  VPolytope tri({zero2, e1, e2});
  CHECK(tri.contains(v2(q(1, 3), q(1, 3))));
  CHECK(tri.contains(v2(q(1, 2), q(1, 2))));  // boundary
  CHECK(tri.contains(zero2));
  CHECK_FALSE(tri.contains(v2(q(2, 3), q(2, 3))));
  CHECK_FALSE(tri.contains(v2(q(-1, 100), q(0))));
  CHECK(tri.barycenter() == v2(q(1, 3), q(1, 3)));
  CHECK_THROWS_AS(tri.contains(v3(q(0), q(0), q(0))), input_error);
}

TEST_CASE("face counts: point, segment, square, triangle, 3-cube") {
  CHECK(VPolytope({zero2}).faces().size() == 1);

  QVector p0(1), p1(1);
  p0 << q(0);
  p1 << q(1);
  CHECK(VPolytope({p0, p1}).faces().size() == 3);  // 3^1

  VPolytope square({zero2, e1, e2, e1 + e2});
  CHECK(square.faces().size() == 9);  // 3^2
  CHECK(square.facets().size() == 4);

  VPolytope tri({zero2, e1, e2});
  auto tf = tri.faces();
  REQUIRE(tf.size() == 7);
  int by_dim[3] = {0, 0, 0};
  for (const auto& f : tf) by_dim[f.dim]++;
  CHECK(by_dim[0] == 3);
  CHECK(by_dim[1] == 3);
  CHECK(by_dim[2] == 1);

  std::vector<QVector> cube;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) cube.push_back(v3(q(x), q(y), q(z)));
  CHECK(VPolytope(cube).faces().size() == 27);  // 3^3
}

TEST_CASE("supporting functionals are maximized exactly on their faces") {
  VPolytope square({zero2, e1, e2, e1 + e2});
  for (const auto& f : square.faces()) {
    const QVector& y = f.supporting_functional;
    Rational mx = y.dot(square.vertices()[0]);
    for (const auto& v : square.vertices()) mx = std::max(mx, y.dot(v));
    std::vector<int> argmax;
    for (int i = 0; i < static_cast<int>(square.vertices().size()); ++i)
      if (y.dot(square.vertices()[static_cast<std::size_t>(i)]) == mx) argmax.push_back(i);
    CHECK(argmax == f.vertex_subset);
  }
}

TEST_CASE("face enumeration capacity guard") {
  std::vector<QVector> simplex7;
  simplex7.push_back(QVector::Zero(7));
  for (Eigen::Index i = 0; i < 7; ++i) {
    QVector e = QVector::Zero(7);
    e(i) = q(1);
    simplex7.push_back(e);
  }
  VPolytope p(simplex7);
  CHECK(p.dim() == 7);
  CHECK_THROWS_AS(p.faces(), capacity_error);
}

TEST_CASE("hrep round-trips through hrep_vertices") {
  auto roundtrip = [](const VPolytope& p) {
    auto verts = hrep_vertices(p.hrep(), p.ambient());
    REQUIRE(verts.size() == p.vertices().size());
    for (std::size_t i = 0; i < verts.size(); ++i) CHECK(verts[i] == p.vertices()[i]);
  };
  roundtrip(VPolytope({zero2, e1, e2}));
  roundtrip(VPolytope({zero2, e1, e2, e1 + e2}));
  roundtrip(VPolytope({v2(q(-1), q(2)), v2(q(3), q(2)), v2(q(1), q(5))}));
  // Lower-dimensional bodies: the affine hull contributes equality rows.
  roundtrip(VPolytope({v3(q(0), q(0), q(1)), v3(q(1), q(1), q(1))}));
  roundtrip(VPolytope({v3(q(1), q(0), q(0)), v3(q(0), q(1), q(0)), v3(q(0), q(0), q(1))}));

  VPolytope tri({zero2, e1, e2});
  HRep h = tri.hrep();
  CHECK(h.eqs.empty());
  CHECK(h.ineqs.size() == 3);
  for (int nx = -4; nx <= 4; ++nx)
    for (int ny = -4; ny <= 4; ++ny) {
      QVector x = v2(q(nx, 2), q(ny, 2));
      CHECK(h.contains(x) == tri.contains(x));
    }
}

TEST_CASE("affine cone canonical form") {
  AffineCone quadrant(zero2, {e1, e2}, {});
  CHECK(quadrant.rays().size() == 2);
  CHECK(quadrant.lineality_dim() == 0);
  CHECK(quadrant.dim() == 2);
  CHECK(quadrant.rays()[0] == e2);  // sorted
  CHECK(quadrant.rays()[1] == e1);

  // A generator pair {g, -g} is recognized as a line.
  AffineCone half(zero2, {e1, -e1, e2}, {});
  CHECK(half == AffineCone(zero2, {e2}, {e1}));
  REQUIRE(half.lineality_dim() == 1);
  CHECK(half.lineality_basis()[0] == e1);
  REQUIRE(half.rays().size() == 1);
  CHECK(half.rays()[0] == e2);

  // Non-extreme generators are stripped, scaling is normalized.
  CHECK(AffineCone(zero2, {e1, e1 + e2, e2}, {}) == quadrant);
  CHECK(AffineCone(zero2, {v2(q(2), q(0)), v2(q(0), q(3))}, {}) == quadrant);

  // The apex is reduced modulo the lineality span.
  AffineCone h1(v2(q(3), q(5)), {e2}, {e1});
  CHECK(h1.apex() == v2(q(0), q(5)));
  CHECK(h1 == AffineCone(v2(q(7), q(5)), {v2(q(0), q(3))}, {v2(q(2), q(0))}));

  CHECK(AffineCone(zero2, {e1, -e1, e2, -e2}, {}) == AffineCone::full_space(2));
  CHECK(AffineCone::full_space(2).dim() == 2);
  CHECK(AffineCone::full_space(2).lineality_dim() == 2);
  CHECK(AffineCone::single_point(v2(q(1), q(2))).dim() == 0);

  CHECK_THROWS_AS(AffineCone(zero2, {v3(q(1), q(0), q(0))}, {}), input_error);
}

TEST_CASE("affine cone membership, translation, transformation") {
  AffineCone quadrant(zero2, {e1, e2}, {});
  CHECK(quadrant.contains(v2(q(1), q(2))));
  CHECK(quadrant.contains(zero2));
  CHECK_FALSE(quadrant.contains(v2(q(-1), q(0))));
  CHECK_THROWS_AS(quadrant.contains(v3(q(0), q(0), q(0))), input_error);

  AffineCone moved = quadrant.translated(v2(q(1), q(1)));
  CHECK(moved.apex() == v2(q(1), q(1)));
  CHECK(moved.contains(v2(q(1), q(1))));
  CHECK_FALSE(moved.contains(zero2));

  QMatrix rot(2, 2);
  rot << q(0), q(-1), q(1), q(0);
  AffineCone rotated = quadrant.transformed(rot);
  CHECK(rotated == AffineCone(zero2, {e2, -e1}, {}));

  AffineCone point = AffineCone::single_point(v2(q(1), q(2)));
  CHECK(point.contains(v2(q(1), q(2))));
  CHECK_FALSE(point.contains(zero2));
  CHECK(AffineCone::full_space(2).contains(v2(q(-5), q(7))));
}

TEST_CASE("affine cone hrep agrees with generator membership") {
  AffineCone c(v2(q(1), q(1)), {e1, v2(q(1), q(2))}, {});
  HRep h = c.hrep();
  CHECK(h.eqs.empty());
  CHECK(h.ineqs.size() == 2);
  for (int nx = -6; nx <= 6; ++nx)
    for (int ny = -6; ny <= 6; ++ny) {
      QVector x = v2(q(nx, 2), q(ny, 2));
      CHECK(h.contains(x) == c.contains(x));
    }

  // A ray in the plane needs one equality and one inequality.
  AffineCone ray(zero2, {e1}, {});
  HRep rh = ray.hrep();
  CHECK(rh.eqs.size() == 1);
  CHECK(rh.ineqs.size() == 1);
  CHECK(rh.contains(v2(q(3), q(0))));
  CHECK_FALSE(rh.contains(v2(q(-1, 2), q(0))));
  CHECK_FALSE(rh.contains(v2(q(1), q(1, 3))));

  CHECK(AffineCone::full_space(2).hrep().ineqs.empty());
  CHECK(AffineCone::full_space(2).hrep().eqs.empty());

  HRep ph = AffineCone::single_point(v2(q(2), q(-1))).hrep();
  CHECK(ph.eqs.size() == 2);
  CHECK(ph.contains(v2(q(2), q(-1))));
  CHECK_FALSE(ph.contains(zero2));
}

TEST_CASE("polar relative interior point") {
  AffineCone quadrant(zero2, {e1, e2}, {});
  QVector y = quadrant.polar_relint();
  CHECK(y.dot(e1) < q(0));
  CHECK(y.dot(e2) < q(0));

  AffineCone half(zero2, {e2}, {e1});
  QVector yh = half.polar_relint();
  CHECK(yh.dot(e2) < q(0));
  CHECK(yh.dot(e1) == q(0));

  CHECK(AffineCone::full_space(2).polar_relint() == zero2);
}

TEST_CASE("cone faces as ray subsets") {
  AffineCone quadrant(zero2, {e1, e2}, {});
  auto qf = quadrant.face_ray_subsets();
  REQUIRE(qf.size() == 4);
  CHECK(qf[0].empty());
  CHECK(qf[3] == std::vector<int>{0, 1});

  AffineCone half(zero2, {e2}, {e1});
  CHECK(half.face_ray_subsets().size() == 2);

  std::vector<QVector> sq = {v3(q(1), q(0), q(1)), v3(q(0), q(1), q(1)), v3(q(-1), q(0), q(1)),
                             v3(q(0), q(-1), q(1))};
  AffineCone pyramid(v3(q(0), q(0), q(0)), sq, {});
  REQUIRE(pyramid.rays().size() == 4);
  auto pf = pyramid.face_ray_subsets();
  CHECK(pf.size() == 10);  // apex, 4 rays, 4 facets, the cone itself
  for (const auto& f : pf) CHECK(f.size() != 3);
  std::size_t pairs = 0;
  for (const auto& f : pf)
    if (f.size() == 2) ++pairs;
  CHECK(pairs == 4);  // only adjacent ray pairs span faces
}

TEST_CASE("tangent cones of a segment, a square, a triangle") {
  QVector p0(1), p1(1);
  p0 << q(0);
  p1 << q(1);
  VPolytope seg({p0, p1});
  auto sf = seg.faces();
  REQUIRE(sf.size() == 3);
  AffineCone at0 = tangent_cone(seg, sf[0]);
  CHECK(at0.rays().size() == 1);
  CHECK(at0.lineality_dim() == 0);
  CHECK(at0.rays()[0](0) == q(1));

  VPolytope square({zero2, e1, e2, e1 + e2});
  AffineCone whole = tangent_cone(square, square.faces().back());
  CHECK(whole == AffineCone::full_space(2));

  VPolytope tri({zero2, e1, e2});
  // Vertices sort as (0,0), (0,1), (1,0); the edge Conv(0, e1) is {0, 2}.
  Face bottom;
  bool found = false;
  for (const auto& f : tri.faces())
    if (f.vertex_subset == std::vector<int>{0, 2}) {
      bottom = f;
      found = true;
    }
  REQUIRE(found);
  AffineCone c = tangent_cone(tri, bottom);
  CHECK(c == AffineCone(zero2, {e2}, {e1}));  // halfplane y >= 0, lineality span{e1}
  CHECK(c.apex() == zero2);
}

TEST_CASE("tight containment") {
  AffineCone c(zero2, {e1, e1 + e2}, {});
  CHECK(tightly_contains(c, VPolytope({zero2})));
  CHECK_FALSE(tightly_contains(c, VPolytope({zero2, e2})));
  CHECK(tightly_contains(c, VPolytope({zero2, e1})));
  CHECK_FALSE(tightly_contains(c, VPolytope({e1, v2(q(2), q(1))})));  // inside, misses apex

  // Any cone tightly contains the one-point polytope at its apex.
  for (const AffineCone& k :
       {c, AffineCone::full_space(2), AffineCone(v2(q(3), q(4)), {e2}, {e1}),
        AffineCone::single_point(v2(q(-1), q(5)))}) {
    CHECK(tightly_contains(k, VPolytope({k.apex()})));
  }

  // Contained but not meeting the lineality flat.
  AffineCone half(zero2, {e2}, {e1});
  CHECK(tightly_contains(half, VPolytope({zero2, e1})));
  CHECK_FALSE(tightly_contains(half, VPolytope({e2, e1 + e2})));
  CHECK(tightly_contains(half, VPolytope({v2(q(-5), q(0)), e2})));

  CHECK_THROWS_AS(tightly_contains(c, VPolytope({v3(q(0), q(0), q(0))})), input_error);
}

TEST_CASE("tight containment matches the half-space characterization on deformations") {
  VPolytope tri({zero2, e1, e2});
  std::vector<VPolytope> deformations = {
      tri,
      VPolytope({v2(q(3), q(-2)), v2(q(4), q(-2)), v2(q(3), q(-1))}),
      VPolytope({v2(q(1), q(1)), v2(q(3, 2), q(1)), v2(q(1), q(3, 2))}),
      VPolytope({v2(q(1), q(0)), v2(q(2), q(0))}),   // edge-parallel segment
      VPolytope({v2(q(0), q(2)), v2(q(0), q(3))}),   // edge-parallel segment
      VPolytope({v2(q(1, 4), q(1, 4))}),             // point
  };
  int checked = 0;
  for (const auto& f : tri.faces()) {
    AffineCone cls = tangent_cone(tri, f);
    cls = cls.translated(-cls.apex());
    for (const auto& p : deformations) {
      std::vector<QVector> anchors = p.vertices();
      anchors.push_back(p.barycenter());
      anchors.push_back(v2(q(-1), q(2)));
      anchors.push_back(v2(q(1), q(-2)));
      for (const auto& v : anchors) {
        AffineCone c = cls.translated(v);
        CHECK(tightly_contains(c, p) == halfspace_oracle(c, p));
        ++checked;
      }
    }
  }
  CHECK(checked == 7 * 32);  // 7 faces, anchors = vertices (3+3+3+2+2+1) + 3 extra each
}

TEST_CASE("tight translate") {
  // Full space: everything is tightly contained in the single translate class.
  auto full = tight_translate(AffineCone::full_space(2), VPolytope({zero2, e1, e2}));
  REQUIRE(full.has_value());
  CHECK(full->isZero());

  AffineCone quadrant(zero2, {e1, e2}, {});
  auto t = tight_translate(quadrant, VPolytope({v2(q(1), q(1)), v2(q(2), q(1))}));
  REQUIRE(t.has_value());
  CHECK(*t == v2(q(1), q(1)));

  // A ray cannot absorb a transverse segment at any anchor.
  AffineCone ray(zero2, {e1}, {});
  VPolytope seg({zero2, e2});
  CHECK_FALSE(tight_translate(ray, seg).has_value());
  for (const QVector& v : {zero2, e2, v2(q(0), q(1, 2))})
    CHECK_FALSE(tightly_contains(ray.translated(v), seg));

  // Halfplane classes anchor on the matching edge of the triangle.
  VPolytope tri({zero2, e1, e2});
  auto up = tight_translate(AffineCone(zero2, {e2}, {e1}), tri);
  REQUIRE(up.has_value());
  CHECK(*up == zero2);
  auto down = tight_translate(AffineCone(zero2, {-e2}, {e1}), tri);
  REQUIRE(down.has_value());
  CHECK(*down == v2(q(0), q(1)));

  CHECK_THROWS_AS(tight_translate(quadrant.translated(e1), tri), input_error);
}

TEST_CASE("tight translate is unique: sampled off-class anchors fail") {
  AffineCone quadrant(zero2, {e1, e2}, {});
  VPolytope p({v2(q(1), q(1)), v2(q(2), q(1))});
  auto t = tight_translate(quadrant, p);
  REQUIRE(t.has_value());
  CHECK(tightly_contains(quadrant.translated(*t), p));
  for (const QVector& off :
       {e1, e2, QVector(-e1), QVector(-e2), v2(q(1), q(2)), v2(q(-1, 2), q(0))})
    CHECK_FALSE(tightly_contains(quadrant.translated(*t + off), p));

  // With lineality, anchors differing by a lineality vector stay tight.
  AffineCone half(zero2, {e2}, {e1});
  VPolytope tri({zero2, e1, e2});
  auto h = tight_translate(half, tri);
  REQUIRE(h.has_value());
  CHECK(tightly_contains(half.translated(*h + e1), tri));
  CHECK_FALSE(tightly_contains(half.translated(*h + e2), tri));
}

TEST_CASE("tight containment is equivariant under the group action") {
  WeylGroup w(build_root_system(RootType::B, 2));
  AffineCone quadrant(zero2, {e1, e2}, {});
  AffineCone half(zero2, {e2}, {e1});
  std::vector<std::pair<AffineCone, VPolytope>> pairs = {
      {quadrant.translated(v2(q(1), q(1))), VPolytope({v2(q(1), q(1)), v2(q(2), q(1))})},
      {quadrant, VPolytope({zero2, e2})},
      {half, VPolytope({zero2, e1, e2})},
      {half.translated(e2), VPolytope({zero2, e1, e2})},
  };
  for (int gi = 0; gi < w.size(); ++gi) {
    const QMatrix& m = w.element(gi).matrix;
    for (const auto& [c, p] : pairs) {
      std::vector<QVector> moved;
      for (const auto& v : p.vertices()) moved.push_back(m * v);
      CHECK(tightly_contains(c.transformed(m), VPolytope(moved)) == tightly_contains(c, p));
    }
  }
}

TEST_CASE("edge directions and root parallelism") {
  CHECK(edge_directions(VPolytope({v2(q(2), q(3))})).empty());
  CHECK(is_extended_deformation(VPolytope({v2(q(2), q(3))}), build_root_system(RootType::B, 2)));

  // In sum-zero coordinates, the segment from delta to s1(delta) runs along
  // the first simple root.
  RootSystem a2 = build_root_system(RootType::A, 2);
  QVector delta = a2.weights[0] + a2.weights[1];
  QVector s1delta = a2.simple_refl[0] * delta;
  auto dirs = edge_directions(VPolytope({delta, s1delta}));
  REQUIRE(dirs.size() == 1);
  CHECK(dirs[0] == primitive_direction(a2.simple[0]));
  CHECK(is_extended_deformation(VPolytope({delta, s1delta}), a2));

  RootSystem b2 = build_root_system(RootType::B, 2);
  CHECK(is_extended_deformation(VPolytope({zero2, e1, e2, e1 + e2}), b2));
  CHECK(is_extended_deformation(VPolytope({e1, e2, -e1, -e2}), b2));
  // (1,2) is not parallel to any root of B2.
  CHECK_FALSE(is_extended_deformation(VPolytope({zero2, v2(q(1), q(2))}), b2));
  CHECK_FALSE(is_extended_deformation(VPolytope({zero2, e1, v2(q(1), q(2))}), b2));

  CHECK_THROWS_AS(is_extended_deformation(VPolytope({zero2}), a2), input_error);
}

TEST_CASE("brianchon-gram of a point and a segment") {
  QVector pt(1);
  pt << q(2);
  SignedPolyhedralSum s = brianchon_gram(VPolytope({pt}));
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].coeff == 1);
  CHECK(std::get<AffineCone>(s.terms[0].body) == AffineCone::single_point(pt));
  QVector off(1);
  off << q(3);
  CHECK(indicator_eval(s, pt) == 1);
  CHECK(indicator_eval(s, off) == 0);

  QVector p0(1), p1(1);
  p0 << q(0);
  p1 << q(1);
  SignedPolyhedralSum seg = brianchon_gram(VPolytope({p0, p1}));
  REQUIRE(seg.terms.size() == 3);  // 2 rays - 1 line
  int rays = 0, lines = 0;
  for (const auto& t : seg.terms) {
    const auto& c = std::get<AffineCone>(t.body);
    if (c.lineality_dim() == 1) {
      CHECK(t.coeff == -1);
      ++lines;
    } else {
      CHECK(t.coeff == 1);
      CHECK(c.rays().size() == 1);
      ++rays;
    }
  }
  CHECK(rays == 2);
  CHECK(lines == 1);
  auto at = [&](const Rational& x) {
    QVector v(1);
    v << x;
    return indicator_eval(seg, v);
  };
  CHECK(at(q(-1, 2)) == 0);
  CHECK(at(q(0)) == 1);
  CHECK(at(q(1, 2)) == 1);
  CHECK(at(q(1)) == 1);
  CHECK(at(q(2)) == 0);
}

TEST_CASE("brianchon-gram of the triangle") {
  VPolytope tri({zero2, e1, e2});
  SignedPolyhedralSum s = brianchon_gram(tri);
  REQUIRE(s.terms.size() == 7);  // 3 vertex cones - 3 edge halfplanes + 1 plane
  int by_dim[3] = {0, 0, 0};
  for (const auto& t : s.terms) {
    const auto& c = std::get<AffineCone>(t.body);
    by_dim[c.lineality_dim()]++;
    CHECK(t.coeff == (c.lineality_dim() % 2 == 0 ? 1 : -1));
  }
  CHECK(by_dim[0] == 3);
  CHECK(by_dim[1] == 3);
  CHECK(by_dim[2] == 1);

  CHECK(indicator_eval(s, tri.barycenter()) == 1);
  CHECK(indicator_eval(s, zero2) == 1);
  CHECK(indicator_eval(s, v2(q(1, 2), q(0))) == 1);
  CHECK(indicator_eval(s, v2(q(1), q(1))) == 0);
  CHECK(indicator_eval(s, v2(q(-1), q(-1))) == 0);
  CHECK(indicator_eval(s, v2(q(2), q(-1))) == 0);
}

TEST_CASE("indicator sum evaluation basics") {
  VPolytope tri({zero2, e1, e2});
  SignedPolyhedralSum cancel;
  cancel.add(1, tri);
  cancel.add(-1, tri);
  for (const QVector& x : {zero2, tri.barycenter(), v2(q(5), q(5))})
    CHECK(indicator_eval(cancel, x) == 0);

  SignedPolyhedralSum pt;
  pt.add(1, VPolytope({e1}));
  CHECK(indicator_eval(pt, e1) == 1);
  CHECK(indicator_eval(pt, e2) == 0);
}

TEST_CASE("indicator relation on bounded sums") {
  VPolytope tri({zero2, e1, e2});
  SignedPolyhedralSum cancel;
  cancel.add(1, tri);
  cancel.add(-1, tri);
  CHECK(verify_indicator_relation(cancel));

  // Two segments along a line: union plus intersection.
  SignedPolyhedralSum cross;
  cross.add(1, VPolytope({zero2, e2}));
  cross.add(1, VPolytope({zero2, -e2}));
  cross.add(-1, VPolytope({e2, -e2}));
  cross.add(-1, VPolytope({zero2}));
  CHECK(verify_indicator_relation(cross));

  SignedPolyhedralSum bad;
  bad.add(1, VPolytope({zero2}));
  bad.add(-1, VPolytope({e1}));
  CHECK_FALSE(verify_indicator_relation(bad));

  CHECK(verify_indicator_relation(SignedPolyhedralSum{}));

  // Splitting the square along a diagonal: valid only with the seam term.
  VPolytope square({zero2, e1, e2, e1 + e2});
  VPolytope lower({zero2, e1, e2});
  VPolytope upper({e1, e2, e1 + e2});
  VPolytope seam({e1, e2});
  SignedPolyhedralSum split;
  split.add(1, lower);
  split.add(1, upper);
  split.add(-1, square);
  split.add(-1, seam);
  CHECK(verify_indicator_relation(split));
  SignedPolyhedralSum missing;
  missing.add(1, lower);
  missing.add(1, upper);
  missing.add(-1, square);
  CHECK_FALSE(verify_indicator_relation(missing));

  SignedPolyhedralSum mixed_dim;
  mixed_dim.add(1, VPolytope({zero2}));
  QVector p0(1);
  p0 << q(0);
  mixed_dim.add(-1, VPolytope({p0}));
  CHECK_THROWS_AS(verify_indicator_relation(mixed_dim), input_error);
}

TEST_CASE("indicator relation on cone-bearing sums") {
  // Quadrant split along the diagonal ray.
  AffineCone quadrant(zero2, {e1, e2}, {});
  AffineCone lower(zero2, {e1, e1 + e2}, {});
  AffineCone upper(zero2, {e2, e1 + e2}, {});
  AffineCone diag(zero2, {e1 + e2}, {});
  SignedPolyhedralSum split;
  split.add(1, lower);
  split.add(1, upper);
  split.add(-1, quadrant);
  split.add(-1, diag);
  CHECK(verify_indicator_relation(split));
  SignedPolyhedralSum missing;
  missing.add(1, lower);
  missing.add(1, upper);
  missing.add(-1, quadrant);
  CHECK_FALSE(verify_indicator_relation(missing));

  // A cone term against a polytope term.
  SignedPolyhedralSum off;
  off.add(1, AffineCone::single_point(zero2));
  off.add(-1, VPolytope({zero2}));
  CHECK(verify_indicator_relation(off));
}

TEST_CASE("brianchon-gram sums verify as indicator relations") {
  auto check_bg = [](const VPolytope& p) {
    SignedPolyhedralSum s = brianchon_gram(p);
    s.add(-1, p);
    CHECK(verify_indicator_relation(s));
  };
  QVector p0(1), p1(1);
  p0 << q(0);
  p1 << q(1);
  check_bg(VPolytope({p0}));
  check_bg(VPolytope({p0, p1}));
  check_bg(VPolytope({zero2, e1, e2}));
  check_bg(VPolytope({zero2, e1, e2, e1 + e2}));
}

TEST_CASE("brianchon-gram of the A2 weight polytope") {
  RootSystem a2 = build_root_system(RootType::A, 2);
  WeylGroup w(a2);
  QVector delta = a2.weights[0] + a2.weights[1];
  std::vector<QVector> orbit;
  for (int i = 0; i < w.size(); ++i) orbit.push_back(w.element(i).matrix * delta);
  VPolytope hexagon(orbit);
  REQUIRE(hexagon.vertices().size() == 6);
  CHECK(hexagon.dim() == 2);

  SignedPolyhedralSum s = brianchon_gram(hexagon);
  CHECK(s.terms.size() == 13);  // 6 + 6 + 1 faces
  CHECK(indicator_eval(s, hexagon.barycenter()) == 1);
  CHECK(indicator_eval(s, delta) == 1);
  CHECK(indicator_eval(s, delta + a2.simple[0]) == 0);
  s.add(-1, hexagon);
  CHECK(verify_indicator_relation(s));
}

TEST_CASE("indicator relation capacity guards") {
  SignedPolyhedralSum many;
  for (int i = 0; i <= 20; ++i) many.add(1, VPolytope({zero2}));
  CHECK_THROWS_AS(verify_indicator_relation(many), capacity_error);

  SignedPolyhedralSum wide;
  for (int i = 0; i < 17; ++i) wide.add(1, AffineCone::single_point(v2(q(i), q(0))));
  CHECK_THROWS_AS(verify_indicator_relation(wide), capacity_error);
}
