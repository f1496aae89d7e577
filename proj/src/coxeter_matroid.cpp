#include "coxval/coxeter_matroid.hpp"

#include <algorithm>
#include <set>

#include "coxval/errors.hpp"

namespace coxval {

namespace {

std::vector<int> normalize_bases(const ParabolicQuotient& q, std::vector<int> bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (bases.empty()) throw input_error("a matroid needs at least one basis");
  if (bases.front() < 0 || bases.back() >= q.size())
    throw input_error("basis index out of range for the quotient");
  return bases;
}

// Bases of S minimal in the w-twisted order: nothing else in S lies below.
std::vector<int> twisted_minimals(const ParabolicQuotient& q, const std::vector<int>& s, int w) {
  std::vector<int> out;
  for (int b : s) {
    bool minimal = true;
    for (int other : s) {
      if (other != b && q.leq(other, b, w)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(b);
  }
  return out;
}

}  // namespace

bool is_coxeter_matroid(const ParabolicQuotient& q, const std::vector<int>& bases,
                        RecognitionMode mode) {
  const std::vector<int> s = normalize_bases(q, bases);

  bool bruhat_ok = true;
  if (mode != RecognitionMode::polytope) {
    for (int w = 0; w < q.group().size() && bruhat_ok; ++w)
      bruhat_ok = twisted_minimals(q, s, w).size() == 1;
  }

  bool polytope_ok = true;
  if (mode != RecognitionMode::bruhat) {
    std::vector<QVector> pts;
    for (int b : s) pts.push_back(q.delta(b));
    polytope_ok = is_extended_deformation(VPolytope(std::move(pts)), q.group().roots());
  }

  switch (mode) {
    case RecognitionMode::bruhat:
      return bruhat_ok;
    case RecognitionMode::polytope:
      return polytope_ok;
    case RecognitionMode::both:
      if (bruhat_ok != polytope_ok)
        throw consistency_error("Bruhat and polytope matroid criteria disagree");
      return bruhat_ok;
  }
  throw input_error("unknown recognition mode");
}

CoxeterMatroid::CoxeterMatroid(const ParabolicQuotient* q, std::vector<int> bases)
    : q_(q), bases_(std::move(bases)) {}

CoxeterMatroid::CoxeterMatroid(const ParabolicQuotient& q, std::vector<int> bases,
                               RecognitionMode mode)
    : CoxeterMatroid(&q, normalize_bases(q, std::move(bases))) {
  if (!is_coxeter_matroid(*q_, bases_, mode))
    throw domain_error("the given bases do not form a Coxeter matroid");
}

CoxeterMatroid CoxeterMatroid::unchecked(const ParabolicQuotient& q, std::vector<int> bases) {
  return CoxeterMatroid(&q, normalize_bases(q, std::move(bases)));
}

bool CoxeterMatroid::operator==(const CoxeterMatroid& o) const {
  return q_->group().roots().type == o.q_->group().roots().type &&
         q_->group().roots().rank == o.q_->group().roots().rank &&
         q_->parabolic_set() == o.q_->parabolic_set() && bases_ == o.bases_;
}

int min_w(const CoxeterMatroid& m, int w) {
  const ParabolicQuotient& q = m.quotient();
  const auto mins = twisted_minimals(q, m.bases(), w);
  if (mins.size() != 1)
    throw domain_error("no unique Bruhat-minimal basis: not a Coxeter matroid");
  for (int b : m.bases())
    if (b != mins[0] && !q.leq(mins[0], b, w))
      throw domain_error("minimal basis is not a minimum: not a Coxeter matroid");
  return mins[0];
}

int min_w_geometric(const CoxeterMatroid& m, int w) {
  const ParabolicQuotient& q = m.quotient();
  const RootSystem& rs = q.group().roots();
  QVector rho = QVector::Zero(rs.ambient);
  for (const auto& weight : rs.weights) rho += weight;
  const QVector y = q.group().act(w, rho);

  int best = m.bases()[0];
  Rational best_val = y.dot(q.delta(best));
  bool tie = false;
  for (std::size_t i = 1; i < m.bases().size(); ++i) {
    const int b = m.bases()[i];
    const Rational val = y.dot(q.delta(b));
    if (val > best_val) {
      best = b;
      best_val = val;
      tie = false;
    } else if (val == best_val) {
      tie = true;
    }
  }
  if (tie) throw domain_error("generic functional tied at two delta points");
  return best;
}

VPolytope base_polytope(const CoxeterMatroid& m) {
  std::vector<QVector> pts;
  for (int b : m.bases()) pts.push_back(m.quotient().delta(b));
  VPolytope p(std::move(pts));
  if (p.vertices().size() != m.bases().size())
    throw consistency_error("a delta point failed to be a vertex of the base polytope");
  return p;
}

CoxeterMatroid schubert(const ParabolicQuotient& q, int base) {
  if (base < 0 || base >= q.size()) throw input_error("coset index out of range");
  std::vector<int> up;
  for (int b = 0; b < q.size(); ++b)
    if (q.leq(base, b)) up.push_back(b);
  return CoxeterMatroid(q, std::move(up), RecognitionMode::both);
}

CoxeterMatroid translate(const CoxeterMatroid& m, int w) {
  std::vector<int> moved;
  for (int b : m.bases()) moved.push_back(m.quotient().act(w, b));
  std::sort(moved.begin(), moved.end());
  return CoxeterMatroid::unchecked(m.quotient(), std::move(moved));
}

CoxeterMatroid canonical_form(const CoxeterMatroid& m) {
  std::vector<int> best = m.bases();
  for (int w = 0; w < m.quotient().group().size(); ++w) {
    std::vector<int> moved;
    for (int b : m.bases()) moved.push_back(m.quotient().act(w, b));
    std::sort(moved.begin(), moved.end());
    if (moved < best) best = std::move(moved);
  }
  return CoxeterMatroid::unchecked(m.quotient(), std::move(best));
}

bool isomorphic(const CoxeterMatroid& a, const CoxeterMatroid& b) {
  const RootSystem& ra = a.quotient().group().roots();
  const RootSystem& rb = b.quotient().group().roots();
  if (ra.type != rb.type || ra.rank != rb.rank ||
      a.quotient().parabolic_set() != b.quotient().parabolic_set())
    throw input_error("isomorphism requires matroids of the same type");
  return canonical_form(a).bases() == canonical_form(b).bases();
}

AffineCone root_cone(const RootSystem& rs, const std::vector<int>& I) {
  check_parabolic_subset(rs, I);
  std::vector<QVector> gens;
  for (const auto& a : rs.simple) gens.push_back(-a);
  std::vector<QVector> lines;
  for (int i : I) lines.push_back(rs.simple[static_cast<std::size_t>(i - 1)]);
  return AffineCone(QVector::Zero(rs.ambient), std::move(gens), std::move(lines));
}

StabilityReport check_intersection_stability(const ParabolicQuotient& q) {
  if (q.size() > 24) throw capacity_error("intersection stability supports quotients of <=24 cosets");
  const RootSystem& rs = q.group().roots();

  std::set<QVector, QVectorLess> delta_set;
  std::vector<QVector> pts;
  for (int b = 0; b < q.size(); ++b) {
    delta_set.insert(q.delta(b));
    pts.push_back(q.delta(b));
  }
  const VPolytope orbit_polytope(pts);
  const HRep orbit_hrep = orbit_polytope.hrep();

  std::set<QVector, QVectorLess> root_dirs;
  for (const auto& r : rs.positive) root_dirs.insert(primitive_direction(r));

  const AffineCone cone = root_cone(rs, {});
  StabilityReport report;
  for (int b = 0; b < q.size(); ++b) {
    HRep rows = orbit_hrep;
    rows.append(cone.translated(q.delta(b)).hrep());
    auto verts = hrep_vertices(rows, rs.ambient);

    StabilityWitness wit;
    wit.base = b;
    for (const auto& v : verts)
      if (!delta_set.count(v)) wit.bad_vertices.push_back(v);
    for (const auto& dir : edge_directions(VPolytope(verts)))
      if (!root_dirs.count(dir)) wit.bad_edges.push_back(dir);
    if (!wit.bad_vertices.empty() || !wit.bad_edges.empty()) {
      report.stable = false;
      report.witnesses.push_back(std::move(wit));
    }
  }
  return report;
}

}  // namespace coxval
