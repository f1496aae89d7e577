#ifndef COXVAL_ROOT_SYSTEM_HPP
#define COXVAL_ROOT_SYSTEM_HPP

#include <set>
#include <string>
#include <vector>

#include "coxval/rational.hpp"

namespace coxval {

enum class RootType { A, B, C, D };

RootType root_type_from_string(const std::string& s);
std::string to_string(RootType t);

// A finite crystallographic root system in its standard coordinates:
//   A_n: ambient R^{n+1} restricted to the sum-zero hyperplane, α_i = e_i − e_{i+1}
//   B_n: ambient R^n, α_i = e_i − e_{i+1}, α_n = e_n
//   C_n: ambient R^n, α_i = e_i − e_{i+1}, α_n = 2e_n
//   D_n: ambient R^n, α_i = e_i − e_{i+1}, α_n = e_{n−1} + e_n
// The inner product is the standard dot product throughout.
//
// Supported ranks keep |W| ≤ 1152: A 1–5, B/C 2–4, D 3–4.
struct RootSystem {
  RootType type;
  int rank;
  Eigen::Index ambient;

  std::vector<QVector> simple;        // α_1..α_n
  std::vector<QVector> positive;      // R⁺, sorted lexicographically
  std::vector<QVector> weights;       // ϖ_1..ϖ_n
  std::vector<QMatrix> simple_refl;   // s_1..s_n acting on the ambient space
  QMatrix gram;                       // identity in these coordinates

  bool is_positive_root(const QVector& v) const { return positive_set.count(v) > 0; }
  bool is_root(const QVector& v) const;

  // Reflection matrix in an arbitrary root.
  QMatrix reflection(const QVector& root) const;

  // α∨ = 2α/⟨α,α⟩
  QVector coroot(const QVector& root) const;

  // Fundamental weight sum Σ_{i ∉ I} ϖ_i for a sorted 1-based subset I of [n].
  // With I = ∅ this is ρ written in minuscule-free form, the ϖ_{[n]} point.
  QVector weight_sum_complement(const std::vector<int>& I) const;

  // For type A the whole configuration lives inside the sum-zero hyperplane;
  // these rows span the ambient directions the group never moves (empty for
  // B/C/D). LP-based tests add them as implicit equality constraints.
  std::vector<QVector> invariant_complement;

  std::set<QVector, QVectorLess> positive_set;
};

RootSystem build_root_system(RootType type, int rank);

// Validates a 1-based subset of [n]: sorted, unique, in range.
void check_parabolic_subset(const RootSystem& rs, const std::vector<int>& I);

}  // namespace coxval

#endif
