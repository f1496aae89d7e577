#include "coxval/root_system.hpp"

#include <algorithm>

#include "coxval/errors.hpp"
#include "coxval/linalg.hpp"

namespace coxval {

RootType root_type_from_string(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  throw input_error("unknown root system type: \"" + s + "\"");
}

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
  }
  throw consistency_error("unreachable root type");
}

bool RootSystem::is_root(const QVector& v) const {
  return positive_set.count(v) > 0 || positive_set.count(QVector(-v)) > 0;
}

QMatrix RootSystem::reflection(const QVector& root) const {
  const Rational nn = root.dot(root);
  if (nn.is_zero()) throw consistency_error("reflection in the zero vector");
  QMatrix m = QMatrix::Identity(ambient, ambient);
  m -= (Rational(2) / nn) * (root * root.transpose());
  return m;
}

QVector RootSystem::coroot(const QVector& root) const {
  return (Rational(2) / root.dot(root)) * root;
}

QVector RootSystem::weight_sum_complement(const std::vector<int>& I) const {
  check_parabolic_subset(*this, I);
  QVector acc = QVector::Zero(ambient);
  for (int i = 1; i <= rank; ++i) {
    if (!std::binary_search(I.begin(), I.end(), i)) acc += weights[static_cast<std::size_t>(i - 1)];
  }
  return acc;
}

void check_parabolic_subset(const RootSystem& rs, const std::vector<int>& I) {
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 1 || I[k] > rs.rank) throw input_error("parabolic index out of range");
    if (k > 0 && I[k] <= I[k - 1]) throw input_error("parabolic subset must be sorted and unique");
  }
}

RootSystem build_root_system(RootType type, int rank) {
  const bool ok = (type == RootType::A && rank >= 1 && rank <= 5) ||
                  ((type == RootType::B || type == RootType::C) && rank >= 2 && rank <= 4) ||
                  (type == RootType::D && rank >= 3 && rank <= 4);
  if (!ok)
    throw input_error("unsupported root system " + to_string(type) + std::to_string(rank) +
                      " (A:1-5, B/C:2-4, D:3-4)");

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.ambient = (type == RootType::A) ? rank + 1 : rank;
  rs.gram = QMatrix::Identity(rs.ambient, rs.ambient);

  auto unit = [&](Eigen::Index i) {
    QVector e = QVector::Zero(rs.ambient);
    e(i) = Rational(1);
    return e;
  };
  for (int i = 1; i < rank; ++i) rs.simple.push_back(unit(i - 1) - unit(i));
  switch (type) {
    case RootType::A: rs.simple.push_back(unit(rank - 1) - unit(rank)); break;
    case RootType::B: rs.simple.push_back(unit(rank - 1)); break;
    case RootType::C: rs.simple.push_back(Rational(2) * unit(rank - 1)); break;
    case RootType::D: rs.simple.push_back(unit(rank - 2) + unit(rank - 1)); break;
  }

  for (const auto& a : rs.simple) rs.simple_refl.push_back(rs.reflection(a));

  // All roots: orbit closure of the simple roots under the simple reflections.
  std::set<QVector, QVectorLess> all(rs.simple.begin(), rs.simple.end());
  std::vector<QVector> frontier(rs.simple);
  while (!frontier.empty()) {
    std::vector<QVector> next;
    for (const auto& r : frontier) {
      for (const auto& s : rs.simple_refl) {
        QVector img = s * r;
        if (all.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }

  // A root is positive iff its expansion over the simple roots is nonnegative.
  QMatrix basis(static_cast<Eigen::Index>(rs.simple.size()), rs.ambient);
  for (std::size_t i = 0; i < rs.simple.size(); ++i) basis.row(static_cast<Eigen::Index>(i)) = rs.simple[i].transpose();
  for (const auto& r : all) {
    auto sol = solve_linear(basis.transpose(), r);
    if (!sol || !sol->kernel.empty())
      throw consistency_error("root outside the simple-root span");
    const bool pos = [&] {
      for (Eigen::Index k = 0; k < sol->particular.size(); ++k)
        if (sol->particular(k).sign() < 0) return false;
      return true;
    }();
    if (pos) rs.positive.push_back(r);
  }
  std::sort(rs.positive.begin(), rs.positive.end(), QVectorLess{});
  rs.positive_set.insert(rs.positive.begin(), rs.positive.end());
  if (2 * rs.positive.size() != all.size())
    throw consistency_error("positive roots do not halve the root set");

  const std::size_t expected = [&]() -> std::size_t {
    const auto n = static_cast<std::size_t>(rank);
    switch (type) {
      case RootType::A: return n * (n + 1) / 2;
      case RootType::B:
      case RootType::C: return n * n;
      case RootType::D: return n * (n - 1);
    }
    return 0;
  }();
  if (rs.positive.size() != expected) throw consistency_error("positive root count mismatch");

  // Weights from ⟨ϖ_i, α_j∨⟩ = δ_ij; type A additionally pinned to the
  // sum-zero hyperplane so the system has a unique solution.
  const bool typeA = (type == RootType::A);
  QMatrix sys(rank + (typeA ? 1 : 0), rs.ambient);
  for (int j = 0; j < rank; ++j) sys.row(j) = rs.coroot(rs.simple[static_cast<std::size_t>(j)]).transpose();
  if (typeA) sys.row(rank) = QVector::Ones(rs.ambient).transpose();
  for (int i = 0; i < rank; ++i) {
    QVector rhs = QVector::Zero(sys.rows());
    rhs(i) = Rational(1);
    auto sol = solve_linear(sys, rhs);
    if (!sol || !sol->kernel.empty()) throw consistency_error("weight system not uniquely solvable");
    rs.weights.push_back(sol->particular);
  }

  if (typeA) rs.invariant_complement.push_back(QVector::Ones(rs.ambient));

  // Each simple reflection must permute R⁺ ∖ {α_i}.
  for (std::size_t i = 0; i < rs.simple.size(); ++i) {
    for (const auto& r : rs.positive) {
      QVector img = rs.simple_refl[i] * r;
      if (compare(r, rs.simple[i]) == 0) {
        if (compare(img, QVector(-r)) != 0) throw consistency_error("s_i must negate alpha_i");
      } else if (!rs.is_positive_root(img)) {
        throw consistency_error("simple reflection left R+ minus alpha_i");
      }
    }
  }
  return rs;
}

}  // namespace coxval
