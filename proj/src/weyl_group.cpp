#include "coxval/weyl_group.hpp"

#include <algorithm>
#include <deque>

#include "coxval/errors.hpp"

namespace coxval {

namespace {

int inversion_count(const RootSystem& rs, const QMatrix& m) {
  int cnt = 0;
  for (const auto& a : rs.positive) {
    if (!rs.is_positive_root(m * a)) ++cnt;
  }
  return cnt;
}

}  // namespace

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int n = rs_.rank;
  const Eigen::Index d = rs_.ambient;
  for (const auto& s : rs_.simple_refl) {
    if (!(s.transpose() * rs_.gram * s - rs_.gram).isZero())
      throw consistency_error("generator does not preserve the inner product");
  }

  // Orbit of the identity under right multiplication by the generators.
  std::map<QMatrix, int, QMatrixLess> seen;
  std::vector<QMatrix> mats{QMatrix::Identity(d, d)};
  seen.emplace(mats[0], 0);
  for (std::size_t head = 0; head < mats.size(); ++head) {
    const QMatrix cur = mats[head];
    for (int i = 0; i < n; ++i) {
      QMatrix nxt = cur * rs_.simple_refl[static_cast<std::size_t>(i)];
      if (seen.emplace(nxt, static_cast<int>(mats.size())).second) mats.push_back(std::move(nxt));
    }
  }

  std::vector<int> lengths(mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k) lengths[k] = inversion_count(rs_, mats[k]);

  // Lexicographically least reduced word, by greedy left descent: repeatedly
  // strip the smallest i with ℓ(s_i w) < ℓ(w).
  elems_.resize(mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k) {
    GroupElement el;
    el.matrix = mats[k];
    el.length = lengths[k];
    QMatrix m = mats[k];
    int len = lengths[k];
    while (len > 0) {
      bool stepped = false;
      for (int i = 0; i < n && !stepped; ++i) {
        QMatrix m2 = rs_.simple_refl[static_cast<std::size_t>(i)] * m;
        const int l2 = lengths[static_cast<std::size_t>(seen.at(m2))];
        if (l2 < len) {
          el.word.push_back(i + 1);
          m = std::move(m2);
          len = l2;
          stepped = true;
        }
      }
      if (!stepped) throw consistency_error("no descent on a non-identity element");
    }
    if (static_cast<int>(el.word.size()) != el.length)
      throw consistency_error("word length disagrees with inversion count");
    elems_[k] = std::move(el);
  }

  std::sort(elems_.begin(), elems_.end(), [](const GroupElement& a, const GroupElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  for (std::size_t k = 0; k < elems_.size(); ++k) index_.emplace(elems_[k].matrix, static_cast<int>(k));

  const int N = size();
  right_.resize(static_cast<std::size_t>(N) * n);
  left_.resize(static_cast<std::size_t>(N) * n);
  inv_.resize(static_cast<std::size_t>(N));
  for (int w = 0; w < N; ++w) {
    for (int i = 0; i < n; ++i) {
      right_[static_cast<std::size_t>(w) * n + i] =
          index_of(matrix(w) * rs_.simple_refl[static_cast<std::size_t>(i)]);
      left_[static_cast<std::size_t>(w) * n + i] =
          index_of(rs_.simple_refl[static_cast<std::size_t>(i)] * matrix(w));
    }
    inv_[static_cast<std::size_t>(w)] = index_of(matrix(w).transpose());
  }

  // Bruhat bitmatrix by the lifting recursion, filled in increasing length of
  // v: with s a left descent of v, u ≤ v iff (su ≤ sv if ℓ(su)<ℓ(u), else u ≤ sv).
  bword_ = static_cast<std::size_t>((N + 63) / 64);
  bruhat_.assign(static_cast<std::size_t>(N) * bword_, 0);
  auto set_bit = [&](int u, int v) {
    const std::size_t pos = static_cast<std::size_t>(u) * bword_ * 64 + static_cast<std::size_t>(v);
    bruhat_[pos >> 6] |= (std::uint64_t{1} << (pos & 63));
  };
  set_bit(0, 0);
  for (int v = 1; v < N; ++v) {
    int s = -1;
    for (int i = 0; i < n; ++i) {
      if (length(mult_simple_left(i + 1, v)) < length(v)) {
        s = i + 1;
        break;
      }
    }
    const int sv = mult_simple_left(s, v);
    for (int u = 0; u < N; ++u) {
      const int su = mult_simple_left(s, u);
      const int base = (length(su) < length(u)) ? su : u;
      if (bruhat_bit(base, sv)) set_bit(u, v);
    }
  }
}

int WeylGroup::simple(int i) const {
  if (i < 1 || i > rank()) throw input_error("simple reflection index out of range");
  return from_word({i});
}

int WeylGroup::mult(int a, int b) const { return index_of(matrix(a) * matrix(b)); }

int WeylGroup::mult_simple_right(int a, int i) const {
  if (i < 1 || i > rank()) throw input_error("simple reflection index out of range");
  return right_[static_cast<std::size_t>(a) * rank() + (i - 1)];
}

int WeylGroup::mult_simple_left(int i, int a) const {
  if (i < 1 || i > rank()) throw input_error("simple reflection index out of range");
  return left_[static_cast<std::size_t>(a) * rank() + (i - 1)];
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  int w = identity();
  for (int i : word) w = mult_simple_right(w, i);
  return w;
}

int WeylGroup::index_of(const QMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw consistency_error("matrix is not a group element");
  return it->second;
}

bool WeylGroup::bruhat_leq(int u, int v) const { return bruhat_bit(u, v); }

bool WeylGroup::bruhat_leq(int u, int v, int twist) const {
  const int ti = inverse(twist);
  return bruhat_bit(mult(ti, u), mult(ti, v));
}

std::pair<int, int> WeylGroup::demazure_product(int u, int v) const {
  int z = u;
  int sign = 1;
  for (int i : word(v)) {
    const int zi = mult_simple_right(z, i);
    if (length(zi) > length(z))
      z = zi;
    else
      sign = -sign;
  }
  return {sign, z};
}

}  // namespace coxval
