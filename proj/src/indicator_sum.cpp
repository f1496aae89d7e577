#include "coxval/indicator_sum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "coxval/errors.hpp"

namespace coxval {

bool body_contains(const PolyBody& b, const QVector& x) {
  return std::visit([&](const auto& body) { return body.contains(x); }, b);
}

Eigen::Index body_ambient(const PolyBody& b) {
  return std::visit([](const auto& body) { return body.ambient(); }, b);
}

SignedPolyhedralSum brianchon_gram(const VPolytope& q) {
  SignedPolyhedralSum s;
  for (const auto& f : q.faces()) {
    s.add(Int(f.dim % 2 == 0 ? 1 : -1), tangent_cone(q, f));
  }
  return s;
}

Int indicator_eval(const SignedPolyhedralSum& s, const QVector& x) {
  Int acc = 0;
  for (const auto& t : s.terms)
    if (body_contains(t.body, x)) acc += t.coeff;
  return acc;
}

namespace {

HRep body_hrep(const PolyBody& b) {
  return std::visit([](const auto& body) { return body.hrep(); }, b);
}

Int eval_via_hreps(const SignedPolyhedralSum& s, const std::vector<HRep>& hreps,
                   const QVector& x) {
  Int acc = 0;
  for (std::size_t i = 0; i < s.terms.size(); ++i)
    if (hreps[i].contains(x)) acc += s.terms[i].coeff;
  return acc;
}

std::string vertex_signature(const std::vector<QVector>& verts) {
  std::string sig;
  for (const auto& v : verts) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      sig += v(i).str();
      sig += ',';
    }
    sig += ';';
  }
  return sig;
}

// Bounded scheme: witness points are the barycenters of all faces of every
// nonempty intersection over term subsets, plus one point beyond the bounding
// box. Empty intersections prune monotonically over subset masks.
bool verify_bounded(const SignedPolyhedralSum& s, const std::vector<HRep>& hreps,
                    Eigen::Index d) {
  const int k = static_cast<int>(s.terms.size());
  if (k > 20) throw capacity_error("indicator relation supports <=20 bounded terms");

  std::set<QVector, QVectorLess> witnesses;
  std::vector<bool> empty(std::size_t{1} << k, false);
  std::set<std::string> seen;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    bool pruned = false;
    for (int b = 0; b < k && !pruned; ++b)
      if ((mask & (1u << b)) && empty[mask & ~(1u << b)]) pruned = true;
    if (pruned) {
      empty[mask] = true;
      continue;
    }
    HRep pooled;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) pooled.append(hreps[static_cast<std::size_t>(b)]);
    auto verts = hrep_vertices(pooled, d);
    if (verts.empty()) {
      empty[mask] = true;
      continue;
    }
    if (!seen.insert(vertex_signature(verts)).second) continue;
    VPolytope xt(std::move(verts));
    for (const auto& f : xt.faces()) {
      QVector acc = QVector::Zero(d);
      for (int i : f.vertex_subset) acc += xt.vertices()[static_cast<std::size_t>(i)];
      witnesses.insert(acc / Rational(static_cast<long long>(f.vertex_subset.size())));
    }
  }

  Rational big(0);
  for (const auto& t : s.terms) {
    const auto& p = std::get<VPolytope>(t.body);
    for (const auto& v : p.vertices())
      for (Eigen::Index i = 0; i < d; ++i) big = std::max(big, abs(v(i)));
  }
  witnesses.insert(QVector::Constant(d, big + Rational(1)));

  for (const auto& w : witnesses)
    if (eval_via_hreps(s, hreps, w) != 0) return false;
  return true;
}

// Cone-bearing scheme: every body is an intersection of hyperplanes from one
// pool, so the sum is constant on the relative interior of each sign-vector
// cell of the pool's arrangement. Enumerate the nonempty cells depth-first
// with LP pruning and test a relative-interior witness of each.
bool verify_arrangement(const SignedPolyhedralSum& s, const std::vector<HRep>& hreps,
                        Eigen::Index d) {
  std::set<QVector, QVectorLess> pool_set;
  auto add_hyperplane = [&](const QVector& a, const Rational& b) {
    if (a.isZero()) return;  // trivial row, no cell boundary
    QVector h(d + 1);
    h.head(d) = a;
    h(d) = b;
    pool_set.insert(primitive_direction(h));
  };
  for (const auto& h : hreps) {
    for (const auto& iq : h.ineqs) add_hyperplane(iq.a, iq.b);
    for (const auto& eq : h.eqs) add_hyperplane(eq.a, eq.b);
  }
  std::vector<QVector> pool(pool_set.begin(), pool_set.end());
  const int m = static_cast<int>(pool.size());
  if (m > 16)
    throw capacity_error("indicator relation with unbounded terms needs a shared hyperplane "
                         "pool of <=16 hyperplanes");

  long lp_budget = 500000;
  std::vector<LinEq> eqs;
  std::vector<LinIneq> strict;
  auto rec = [&](auto&& self, int h) -> bool {
    if (--lp_budget < 0) throw capacity_error("indicator relation cell budget exhausted");
    auto w = lp_strict_feasible(d, {}, strict, eqs);
    if (!w) return true;  // empty cell (and empty subtree)
    if (h == m) return eval_via_hreps(s, hreps, *w) == 0;
    const QVector a = pool[static_cast<std::size_t>(h)].head(d);
    const Rational b = pool[static_cast<std::size_t>(h)](d);
    bool ok = true;
    eqs.push_back({a, b});
    ok = ok && self(self, h + 1);
    eqs.pop_back();
    strict.push_back({a, b});
    ok = ok && self(self, h + 1);
    strict.pop_back();
    strict.push_back({-a, -b});
    ok = ok && self(self, h + 1);
    strict.pop_back();
    return ok;
  };
  return rec(rec, 0);
}

}  // namespace

bool verify_indicator_relation(const SignedPolyhedralSum& s) {
  if (s.terms.empty()) return true;
  const Eigen::Index d = body_ambient(s.terms[0].body);
  for (const auto& t : s.terms)
    if (body_ambient(t.body) != d) throw input_error("indicator terms of mixed dimension");

  std::vector<HRep> hreps;
  hreps.reserve(s.terms.size());
  bool bounded = true;
  for (const auto& t : s.terms) {
    hreps.push_back(body_hrep(t.body));
    if (!std::holds_alternative<VPolytope>(t.body)) bounded = false;
  }
  return bounded ? verify_bounded(s, hreps, d) : verify_arrangement(s, hreps, d);
}

}  // namespace coxval
