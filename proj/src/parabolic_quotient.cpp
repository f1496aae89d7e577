#include "coxval/parabolic_quotient.hpp"

#include "coxval/errors.hpp"

namespace coxval {

ParabolicQuotient::ParabolicQuotient(const WeylGroup& group, std::vector<int> I)
    : group_(group), I_(std::move(I)) {
  check_parabolic_subset(group_.roots(), I_);
  weight_point_ = group_.roots().weight_sum_complement(I_);

  // Minimal coset representatives: w with w·α_i ∈ R⁺ for every i ∈ I. Walking
  // elements in index order keeps the cosets (length, word)-sorted.
  for (int w = 0; w < group_.size(); ++w) {
    bool minimal = true;
    for (int i : I_) {
      if (!group_.right_ascent(w, i)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    Coset c;
    c.min_rep = w;
    c.delta = group_.act(w, weight_point_);
    const int idx = static_cast<int>(cosets_.size());
    if (!by_delta_.emplace(c.delta, idx).second)
      throw consistency_error("two minimal representatives share a delta point");
    cosets_.push_back(std::move(c));
  }
  if (group_.size() % size() != 0)
    throw consistency_error("coset count does not divide the group order");
}

int ParabolicQuotient::coset_of(int w) const {
  return coset_of_delta(group_.act(w, weight_point_));
}

int ParabolicQuotient::coset_of_delta(const QVector& d) const {
  auto it = by_delta_.find(d);
  if (it == by_delta_.end()) throw consistency_error("point is not a delta of this quotient");
  return it->second;
}

int ParabolicQuotient::act(int w, int b) const {
  return coset_of_delta(group_.act(w, delta(b)));
}

bool ParabolicQuotient::leq(int b1, int b2) const {
  return group_.bruhat_leq(min_rep(b1), min_rep(b2));
}

bool ParabolicQuotient::leq(int b1, int b2, int twist) const {
  const int wi = group_.inverse(twist);
  return group_.bruhat_leq(min_rep(act(wi, b1)), min_rep(act(wi, b2)));
}

}  // namespace coxval
