#include "coxval/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>

#include "coxval/indicator_sum.hpp"
#include "coxval/linalg.hpp"

namespace coxval {

FormalSum<int> g_invariant(const CoxeterMatroid& m) {
  const ParabolicQuotient& q = m.quotient();
  const WeylGroup& g = q.group();
  FormalSum<int> out;
  for (int w = 0; w < g.size(); ++w) out.add(Rational(1), q.act(g.inverse(w), min_w(m, w)));
  return out;
}

FormalSum<int> g_invariant_via_tc(const CoxeterMatroid& m) {
  const ParabolicQuotient& q = m.quotient();
  const WeylGroup& g = q.group();
  const AffineCone chamber = root_cone(g.roots(), {});
  const VPolytope bp = base_polytope(m);
  FormalSum<int> out;
  for (int w = 0; w < g.size(); ++w) {
    const AffineCone moved = chamber.transformed(g.matrix(w));
    int hits = 0;
    for (int b = 0; b < q.size(); ++b) {
      if (tightly_contains(moved.translated(q.delta(q.act(w, b))), bp)) {
        out.add(Rational(1), b);
        ++hits;
      }
    }
    // Each moved chamber admits exactly one tight anchor on a base polytope.
    if (hits != 1) throw domain_error("tight containment sweep found no unique anchor");
  }
  return out;
}

std::vector<AffineCone> coxeter_fan_cones(const WeylGroup& g) {
  const RootSystem& rs = g.roots();
  const int n = rs.rank;
  std::set<AffineCone> fan;
  int expected = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> I;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) I.push_back(i);
    // The stabilizer of the I-cone is the standard parabolic W_I, so the
    // minimal coset representatives of W/W_I hit each translate exactly once.
    const AffineCone base = root_cone(rs, I);
    const ParabolicQuotient q(g, I);
    expected += q.size();
    for (int b = 0; b < q.size(); ++b) fan.insert(base.transformed(g.matrix(q.min_rep(b))));
  }
  if (static_cast<int>(fan.size()) != expected)
    throw consistency_error("root fan translates collided across cosets");
  return {fan.begin(), fan.end()};
}

FormalSum<AffineCone> f_invariant(const VPolytope& p, const WeylGroup& g) {
  if (p.ambient() != g.roots().ambient) throw input_error("polytope/root system dimension mismatch");
  if (!is_extended_deformation(p, g.roots()))
    throw domain_error("the polytope has an edge not parallel to any root");
  FormalSum<AffineCone> out;
  for (const auto& d : coxeter_fan_cones(g))
    if (const auto v = tight_translate(d, p)) out.add(Rational(1), d.translated(*v));
  return out;
}

FormalSum<AffineCone> f_invariant(const AffineCone& p, const WeylGroup& g) {
  if (p.ambient() != g.roots().ambient) throw input_error("cone/root system dimension mismatch");
  const std::vector<AffineCone> fan = coxeter_fan_cones(g);
  const AffineCone shape(QVector::Zero(p.ambient()), p.rays(), p.lineality_basis());
  if (std::find(fan.begin(), fan.end(), shape) == fan.end())
    throw domain_error("the cone is not a translate of a root fan cone");
  FormalSum<AffineCone> out;
  for (const auto& d : fan) {
    // A tight translate of d must anchor in the apex class of p: any point of
    // p on the lineality flat of the translate splits as apex + recession
    // vector, and a face of a cone absorbs both summands of a member sum.
    const AffineCone candidate(p.apex(), d.rays(), d.lineality_basis());
    if (tightly_contains(candidate, p)) out.add(Rational(1), candidate);
  }
  return out;
}

namespace {

// Canonical W-orbit label of a fan cone translate: move it onto a standard
// I-cone every way the orbit allows and keep the lexicographically least
// (I, apex) pair. The apex is already reduced mod span{α_i : i ∈ I}, which is
// exactly the lineality space of the I-cone.
FormalSum<OrbitLabel> group_by_orbit(const FormalSum<AffineCone>& f, const WeylGroup& g) {
  const RootSystem& rs = g.roots();
  const int n = rs.rank;
  std::map<AffineCone, std::vector<int>> shape_to_subset;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> I;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) I.push_back(i);
    shape_to_subset.emplace(root_cone(rs, I), I);
  }
  FormalSum<OrbitLabel> out;
  for (const auto& [cone, coeff] : f.terms()) {
    std::optional<OrbitLabel> best;
    for (int w = 0; w < g.size(); ++w) {
      const AffineCone moved = cone.transformed(g.matrix(w));
      const AffineCone moved_shape(QVector::Zero(moved.ambient()), moved.rays(),
                                   moved.lineality_basis());
      const auto it = shape_to_subset.find(moved_shape);
      if (it == shape_to_subset.end()) continue;
      OrbitLabel cand{it->second, moved.apex()};
      if (!best || cand < *best) best = std::move(cand);
    }
    if (!best) throw consistency_error("a support cone lies outside every root fan orbit");
    out.add(coeff, *best);
  }
  return out;
}

}  // namespace

FormalSum<OrbitLabel> g_plus_invariant(const VPolytope& p, const WeylGroup& g) {
  return group_by_orbit(f_invariant(p, g), g);
}

FormalSum<OrbitLabel> g_plus_invariant(const AffineCone& p, const WeylGroup& g) {
  return group_by_orbit(f_invariant(p, g), g);
}

UniPolynomial interlace_polynomial(const CoxeterMatroid& m, InterlaceMode mode) {
  const ParabolicQuotient& q = m.quotient();
  const WeylGroup& g = q.group();
  const RootSystem& rs = g.roots();
  const int n = rs.rank;
  std::vector<int> delta_I;
  for (int i = 1; i < n; ++i) delta_I.push_back(i);
  if (rs.type != RootType::B || q.parabolic_set() != delta_I)
    throw input_error("interlace polynomials need delta-matroids: type B with I = {1,...,n-1}");

  // Cosets are the 2^n sign patterns of delta; encode the +1/2 coordinates
  // as a subset mask.
  const auto mask_of = [n](const QVector& d) {
    unsigned mask = 0;
    for (int i = 0; i < n; ++i)
      if (d(i).sign() > 0) mask |= 1u << i;
    return mask;
  };

  if (mode == InterlaceMode::definition) {
    std::vector<unsigned> base_masks;
    for (const int b : m.bases()) base_masks.push_back(mask_of(q.delta(b)));
    UniPolynomial out;
    for (unsigned a = 0; a < (1u << n); ++a) {
      int nearest = n + 1;
      for (const unsigned bm : base_masks)
        nearest = std::min(nearest, static_cast<int>(std::popcount(a ^ bm)));
      out.add(nearest, 1);
    }
    return out;
  }

  if (n > 3) throw capacity_error("the group sweep for interlace polynomials supports n <= 3");
  Int factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  std::map<int, Rational> acc;
  const FormalSum<int> gi = g_invariant(m);
  for (const auto& [b, c] : gi.terms()) {
    Rational e(Int(n), Int(2));
    for (int i = 0; i < n; ++i) e -= q.delta(b)(i);
    if (!e.is_integer()) throw consistency_error("interlace exponent is not an integer");
    const int exponent = static_cast<int>(e.as_integer().convert_to<long long>());
    if (exponent < 0) throw consistency_error("interlace exponent is negative");
    acc[exponent] += c / Rational(factorial);
  }
  UniPolynomial out;
  for (const auto& [exponent, c] : acc) {
    if (!c.is_integer()) throw consistency_error("interlace coefficient is not an integer");
    out.add(exponent, c.as_integer());
  }
  return out;
}

QMatrix schubert_matrix(const ParabolicQuotient& q) {
  if (q.size() > 24) throw capacity_error("Schubert matrices support quotients of <=24 cosets");
  const int nq = q.size();
  QMatrix c = QMatrix::Zero(nq, nq);
  for (int b = 0; b < nq; ++b) {
    const FormalSum<int> row = g_invariant(schubert(q, b));
    for (const auto& [bp, v] : row.terms()) {
      if (!q.leq(bp, b)) throw consistency_error("a Schubert row escaped its Bruhat lower set");
      c(b, bp) = v;
    }
    if (c(b, b).sign() <= 0) throw consistency_error("Schubert matrix diagonal is not positive");
  }
  return c;
}

FormalSum<int> schubert_decompose(const CoxeterMatroid& m) {
  const ParabolicQuotient& q = m.quotient();
  const QMatrix c = schubert_matrix(q);
  const FormalSum<int> gm = g_invariant(m);
  const int nq = q.size();

  // λᵀ·c = g_M, with c lower triangular in the coset index order (a linear
  // extension of Bruhat order), solved from the top coset down.
  std::vector<Rational> lambda(static_cast<std::size_t>(nq));
  for (int b = nq - 1; b >= 0; --b) {
    Rational acc = gm.coeff(b);
    for (int bp = b + 1; bp < nq; ++bp) acc -= lambda[static_cast<std::size_t>(bp)] * c(bp, b);
    lambda[static_cast<std::size_t>(b)] = acc / c(b, b);
  }

  FormalSum<int> reconstructed;
  for (int b = 0; b < nq; ++b)
    for (int bp = 0; bp <= b; ++bp)
      reconstructed.add(lambda[static_cast<std::size_t>(b)] * c(b, bp), bp);
  if (!(reconstructed == gm))
    throw consistency_error("Schubert decomposition left a nonzero residual");

  FormalSum<int> out;
  for (int b = 0; b < nq; ++b) out.add(lambda[static_cast<std::size_t>(b)], b);
  return out;
}

ValuationCheck verify_valuation_relation(
    const std::vector<std::pair<Rational, CoxeterMatroid>>& terms, ValuationInvariant invariant) {
  if (terms.empty()) throw input_error("a valuation relation needs at least one term");
  const ParabolicQuotient& q0 = terms.front().second.quotient();
  const RootSystem& rs0 = q0.group().roots();
  for (const auto& [c, m] : terms) {
    const ParabolicQuotient& q = m.quotient();
    const RootSystem& rs = q.group().roots();
    if (rs.type != rs0.type || rs.rank != rs0.rank || q.parabolic_set() != q0.parabolic_set())
      throw input_error("valuation relation terms must share one parabolic quotient");
  }

  Int scale = 1;
  for (const auto& [c, m] : terms) scale = boost::multiprecision::lcm(scale, c.den());
  SignedPolyhedralSum indicator;
  for (const auto& [c, m] : terms) {
    const Rational scaled = c * Rational(scale);
    if (!scaled.is_zero()) indicator.add(scaled.as_integer(), base_polytope(m));
  }

  ValuationCheck out;
  out.is_relation = verify_indicator_relation(indicator);
  if (!out.is_relation) return out;

  switch (invariant) {
    case ValuationInvariant::g: {
      FormalSum<int> acc;
      for (const auto& [c, m] : terms) acc = acc + g_invariant(m) * c;
      out.invariant_zero = acc.is_zero();
      break;
    }
    case ValuationInvariant::interlace: {
      FormalSum<int> acc;  // exponent-labeled
      for (const auto& [c, m] : terms) {
        const UniPolynomial p = interlace_polynomial(m, InterlaceMode::definition);
        for (const auto& [exponent, v] : p.terms()) acc.add(c * Rational(v), exponent);
      }
      out.invariant_zero = acc.is_zero();
      break;
    }
    case ValuationInvariant::f: {
      FormalSum<AffineCone> acc;
      for (const auto& [c, m] : terms)
        acc = acc + f_invariant(base_polytope(m), m.quotient().group()) * c;
      out.invariant_zero = acc.is_zero();
      break;
    }
  }
  return out;
}

}  // namespace coxval
