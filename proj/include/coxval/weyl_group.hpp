#ifndef COXVAL_WEYL_GROUP_HPP
#define COXVAL_WEYL_GROUP_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "coxval/root_system.hpp"

namespace coxval {

// One group element. `word` is the lexicographically least reduced word
// (1-based simple-reflection letters); any other reduced word names the same
// element, identity is the matrix.
struct GroupElement {
  QMatrix matrix;
  std::vector<int> word;
  int length = 0;
};

// The full reflection group of a root system, enumerated once. Elements are
// indexed 0..size()-1 in (length, word-lex) order, so index 0 is the identity
// and the last index is the longest element. All tables are built eagerly;
// instances are immutable and safe to share across threads.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank; }
  int size() const { return static_cast<int>(elems_.size()); }

  const GroupElement& element(int w) const { return elems_[static_cast<std::size_t>(w)]; }
  int length(int w) const { return elems_[static_cast<std::size_t>(w)].length; }
  const std::vector<int>& word(int w) const { return elems_[static_cast<std::size_t>(w)].word; }
  const QMatrix& matrix(int w) const { return elems_[static_cast<std::size_t>(w)].matrix; }

  int identity() const { return 0; }
  int longest() const { return size() - 1; }
  int simple(int i) const;  // index of s_i, i 1-based

  int mult(int a, int b) const;
  int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int mult_simple_right(int a, int i) const;  // a·s_i
  int mult_simple_left(int i, int a) const;   // s_i·a
  int from_word(const std::vector<int>& word) const;

  // Index of the element with this matrix; throws consistency_error if the
  // matrix is not in the group.
  int index_of(const QMatrix& m) const;

  QVector act(int w, const QVector& x) const { return matrix(w) * x; }

  // ℓ(w·s_i) > ℓ(w), equivalently w·α_i ∈ R⁺.
  bool right_ascent(int w, int i) const { return length(mult_simple_right(w, i)) > length(w); }

  // Bruhat order, u ≤ v. The twisted form compares w⁻¹u ≤ w⁻¹v.
  bool bruhat_leq(int u, int v) const;
  bool bruhat_leq(int u, int v, int twist) const;

  // 0-Hecke product: T_u·T_v = sign·T_z with one −1 per length-drop.
  std::pair<int, int> demazure_product(int u, int v) const;

 private:
  RootSystem rs_;
  std::vector<GroupElement> elems_;
  std::vector<int> inv_;
  std::vector<int> right_;   // size()*rank: w·s_i
  std::vector<int> left_;    // size()*rank: s_i·w
  std::vector<std::uint64_t> bruhat_;  // row-major bitmatrix, bit(u,v) = u ≤ v
  std::map<QMatrix, int, QMatrixLess> index_;
  std::size_t bword_ = 0;

  bool bruhat_bit(int u, int v) const {
    const std::size_t pos = static_cast<std::size_t>(u) * bword_ * 64 + static_cast<std::size_t>(v);
    return (bruhat_[pos >> 6] >> (pos & 63)) & 1;
  }
};

}  // namespace coxval

#endif
