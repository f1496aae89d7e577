#ifndef COXVAL_PARABOLIC_QUOTIENT_HPP
#define COXVAL_PARABOLIC_QUOTIENT_HPP

#include <map>
#include <vector>

#include "coxval/weyl_group.hpp"

namespace coxval {

// One coset B ∈ W/W_I, named by its minimal-length representative. The point
// delta = min_rep · Σ_{i∉I} ϖ_i separates cosets, so it doubles as a lookup key.
struct Coset {
  int min_rep;     // element index in the parent group
  QVector delta;
};

// The quotient W/W_I with its Bruhat order and the W-action. Cosets are
// indexed 0..size()-1 sorted by (min-rep length, min-rep word lex); index 0 is
// the coset of the identity.
class ParabolicQuotient {
 public:
  ParabolicQuotient(const WeylGroup& group, std::vector<int> I);

  const WeylGroup& group() const { return group_; }
  const std::vector<int>& parabolic_set() const { return I_; }
  int size() const { return static_cast<int>(cosets_.size()); }

  const Coset& coset(int b) const { return cosets_[static_cast<std::size_t>(b)]; }
  int min_rep(int b) const { return cosets_[static_cast<std::size_t>(b)].min_rep; }
  const QVector& delta(int b) const { return cosets_[static_cast<std::size_t>(b)].delta; }

  // Coset containing a given group element.
  int coset_of(int w) const;

  // Coset with the given delta point; throws consistency_error if none.
  int coset_of_delta(const QVector& d) const;

  // w·B, computed through the delta point.
  int act(int w, int b) const;

  // Bruhat order on the quotient via minimal representatives; the twisted
  // form compares the w⁻¹-translates.
  bool leq(int b1, int b2) const;
  bool leq(int b1, int b2, int twist) const;

 private:
  const WeylGroup& group_;
  std::vector<int> I_;
  std::vector<Coset> cosets_;
  std::map<QVector, int, QVectorLess> by_delta_;
  QVector weight_point_;  // Σ_{i∉I} ϖ_i
};

}  // namespace coxval

#endif
