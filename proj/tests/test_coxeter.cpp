#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxval/errors.hpp"
#include "coxval/parabolic_quotient.hpp"
#include "coxval/weyl_group.hpp"

using namespace coxval;

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Independent Bruhat oracle via the subword property: u ≤ v iff some
// subsequence of a fixed reduced word of v is a reduced word of u.
bool subword_oracle(const WeylGroup& W, int u, int v) {
  const auto& wv = W.word(v);
  const int L = static_cast<int>(wv.size());
  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    std::vector<int> sub;
    for (int k = 0; k < L; ++k)
      if (mask & (1u << k)) sub.push_back(wv[static_cast<std::size_t>(k)]);
    if (static_cast<int>(sub.size()) != W.length(u)) continue;
    if (W.from_word(sub) == u) return true;
  }
  return false;
}

void all_reduced_words(const WeylGroup& W, int v, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (W.length(v) == 0) {
    std::vector<int> word(prefix.rbegin(), prefix.rend());
    out.push_back(std::move(word));
    return;
  }
  for (int i = 1; i <= W.rank(); ++i) {
    const int vs = W.mult_simple_right(v, i);
    if (W.length(vs) < W.length(v)) {
      prefix.push_back(i);
      all_reduced_words(W, vs, prefix, out);
      prefix.pop_back();
    }
  }
}

std::vector<std::vector<int>> all_reduced_words(const WeylGroup& W, int v) {
  std::vector<int> prefix;
  std::vector<std::vector<int>> out;
  all_reduced_words(W, v, prefix, out);
  return out;
}

}  // namespace

TEST_CASE("root systems take their textbook shape") {
  auto a2 = build_root_system(RootType::A, 2);
  CHECK(a2.positive.size() == 3);
  CHECK(a2.ambient == 3);

  auto b3 = build_root_system(RootType::B, 3);
  CHECK(b3.positive.size() == 9);

  auto a1 = build_root_system(RootType::A, 1);
  REQUIRE(a1.positive.size() == 1);
  CHECK(compare(a1.positive[0], a1.simple[0]) == 0);
  CHECK(a1.weights[0].dot(a1.coroot(a1.simple[0])) == Rational(1));

  auto c3 = build_root_system(RootType::C, 3);
  CHECK(c3.positive.size() == 9);
  CHECK(c3.simple[2](2) == Rational(2));

  auto d4 = build_root_system(RootType::D, 4);
  CHECK(d4.positive.size() == 12);

  CHECK_THROWS_AS(build_root_system(RootType::A, 6), input_error);
  CHECK_THROWS_AS(build_root_system(RootType::B, 1), input_error);
  CHECK_THROWS_AS(build_root_system(RootType::D, 2), input_error);
  CHECK_THROWS_AS(root_type_from_string("E"), input_error);
}

TEST_CASE("weights pair to the identity against coroots") {
  for (auto [t, lo, hi] : {std::tuple{RootType::A, 1, 5}, {RootType::B, 2, 4},
                           {RootType::C, 2, 4}, {RootType::D, 3, 4}}) {
    for (int n = lo; n <= hi; ++n) {
      auto rs = build_root_system(t, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(rs.weights[static_cast<std::size_t>(i)].dot(
                    rs.coroot(rs.simple[static_cast<std::size_t>(j)])) ==
                Rational(i == j ? 1 : 0));
    }
  }
}

TEST_CASE("group enumeration: order, sorting, inversion lengths") {
  struct Fixture {
    RootType t;
    int n;
    long long order;
  };
  std::vector<Fixture> fixtures;
  for (int n = 1; n <= 5; ++n) fixtures.push_back({RootType::A, n, factorial(n + 1)});
  for (int n = 2; n <= 4; ++n) fixtures.push_back({RootType::B, n, (1LL << n) * factorial(n)});
  for (int n = 2; n <= 4; ++n) fixtures.push_back({RootType::C, n, (1LL << n) * factorial(n)});
  for (int n = 3; n <= 4; ++n) fixtures.push_back({RootType::D, n, (1LL << (n - 1)) * factorial(n)});

  for (const auto& f : fixtures) {
    WeylGroup W(build_root_system(f.t, f.n));
    CAPTURE(to_string(f.t));
    CAPTURE(f.n);
    CHECK(W.size() == f.order);
    CHECK(W.length(W.identity()) == 0);
    CHECK(W.word(W.identity()).empty());
    for (int w = 1; w < W.size(); ++w) {
      const auto &prev = W.element(w - 1), &cur = W.element(w);
      CHECK((prev.length < cur.length ||
             (prev.length == cur.length && prev.word < cur.word)));
    }
    CHECK(W.length(W.longest()) == static_cast<int>(W.roots().positive.size()));
  }

  WeylGroup a2(build_root_system(RootType::A, 2));
  CHECK(a2.size() == 6);
  CHECK(a2.length(a2.longest()) == 3);
  WeylGroup b2(build_root_system(RootType::B, 2));
  CHECK(b2.size() == 8);
  CHECK(b2.length(b2.longest()) == 4);
  WeylGroup a1(build_root_system(RootType::A, 1));
  CHECK(a1.size() == 2);
}

TEST_CASE("lengths equal inversion counts, recomputed independently") {
  WeylGroup W(build_root_system(RootType::A, 3));
  for (int w = 0; w < W.size(); ++w) {
    int inv = 0;
    for (const auto& a : W.roots().positive)
      if (!W.roots().is_positive_root(W.act(w, a))) ++inv;
    CHECK(W.length(w) == inv);
    CHECK(static_cast<int>(W.word(w).size()) == inv);
  }
}

TEST_CASE("group algebra plumbing round-trips") {
  WeylGroup W(build_root_system(RootType::B, 2));
  for (int w = 0; w < W.size(); ++w) {
    CHECK(W.from_word(W.word(w)) == w);
    CHECK(W.mult(w, W.inverse(w)) == W.identity());
    CHECK(W.inverse(W.inverse(w)) == w);
    for (int i = 1; i <= W.rank(); ++i) {
      CHECK(W.mult(w, W.simple(i)) == W.mult_simple_right(w, i));
      CHECK(W.mult(W.simple(i), w) == W.mult_simple_left(i, w));
      CHECK(W.right_ascent(w, i) ==
            W.roots().is_positive_root(W.act(w, W.roots().simple[static_cast<std::size_t>(i - 1)])));
    }
  }
}

TEST_CASE("bruhat order agrees with the subword oracle everywhere") {
  for (auto [t, n] : {std::pair{RootType::A, 2}, {RootType::A, 3}, {RootType::B, 2}}) {
    WeylGroup W(build_root_system(t, n));
    CAPTURE(to_string(t));
    for (int u = 0; u < W.size(); ++u)
      for (int v = 0; v < W.size(); ++v)
        CHECK(W.bruhat_leq(u, v) == subword_oracle(W, u, v));
  }
}

TEST_CASE("bruhat basics and the longest-element twist") {
  WeylGroup W(build_root_system(RootType::A, 2));
  const int s1 = W.simple(1), s2 = W.simple(2);
  for (int v = 0; v < W.size(); ++v) CHECK(W.bruhat_leq(W.identity(), v));
  CHECK_FALSE(W.bruhat_leq(s1, s2));
  CHECK_FALSE(W.bruhat_leq(s2, s1));
  CHECK(W.bruhat_leq(s1, W.from_word({1, 2, 1})));

  // Twisting by w0 reverses the order.
  for (auto [t, n] : {std::pair{RootType::A, 2}, {RootType::B, 2}}) {
    WeylGroup G(build_root_system(t, n));
    for (int u = 0; u < G.size(); ++u)
      for (int v = 0; v < G.size(); ++v)
        CHECK(G.bruhat_leq(u, v, G.longest()) == G.bruhat_leq(v, u));
  }
}

TEST_CASE("parabolic quotients: counts, deltas, order axioms") {
  WeylGroup a2(build_root_system(RootType::A, 2));
  ParabolicQuotient q1(a2, {1});
  CHECK(q1.size() == 3);
  ParabolicQuotient qfull(a2, {1, 2});
  CHECK(qfull.size() == 1);
  CHECK(qfull.min_rep(0) == a2.identity());

  WeylGroup b2(build_root_system(RootType::B, 2));
  ParabolicQuotient qb(b2, {1});
  CHECK(qb.size() == 4);
  std::set<QVector, QVectorLess> deltas;
  for (int b = 0; b < qb.size(); ++b) deltas.insert(qb.delta(b));
  std::set<QVector, QVectorLess> square;
  const Rational h(1, 2);
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      square.insert(make_qvector({Rational(sx) * h, Rational(sy) * h}));
  CHECK(deltas == square);

  // Partial-order axioms on quotients of size 24.
  WeylGroup a3(build_root_system(RootType::A, 3));
  ParabolicQuotient pa(a3, {});
  WeylGroup b3(build_root_system(RootType::B, 3));
  ParabolicQuotient pb(b3, {1});
  for (const ParabolicQuotient* q : {&pa, &pb}) {
    REQUIRE(q->size() == 24);
    for (int x = 0; x < q->size(); ++x) {
      CHECK(q->leq(x, x));
      for (int y = 0; y < q->size(); ++y) {
        if (q->leq(x, y) && q->leq(y, x)) CHECK(x == y);
        for (int z = 0; z < q->size(); ++z)
          if (q->leq(x, y) && q->leq(y, z)) CHECK(q->leq(x, z));
      }
    }
  }
}

TEST_CASE("delta points are equivariant and separate cosets") {
  for (auto [t, n, I] : {std::tuple{RootType::A, 2, std::vector<int>{1}},
                         {RootType::B, 2, std::vector<int>{2}},
                         {RootType::A, 3, std::vector<int>{1, 3}}}) {
    WeylGroup W(build_root_system(t, n));
    ParabolicQuotient Q(W, I);
    CHECK(W.size() % Q.size() == 0);
    for (int b = 0; b < Q.size(); ++b) {
      for (int w = 0; w < W.size(); ++w) {
        const int wb = Q.coset_of(W.mult(w, Q.min_rep(b)));
        CHECK(wb == Q.act(w, b));
        CHECK(compare(W.act(w, Q.delta(b)), Q.delta(wb)) == 0);
      }
    }
  }
}

TEST_CASE("twisted quotient order matches its definition") {
  WeylGroup W(build_root_system(RootType::B, 2));
  ParabolicQuotient Q(W, {1});
  for (int w = 0; w < W.size(); ++w) {
    const int wi = W.inverse(w);
    for (int b1 = 0; b1 < Q.size(); ++b1)
      for (int b2 = 0; b2 < Q.size(); ++b2)
        CHECK(Q.leq(b1, b2, w) == Q.leq(Q.act(wi, b1), Q.act(wi, b2)));
  }
  for (int b1 = 0; b1 < Q.size(); ++b1)
    for (int b2 = 0; b2 < Q.size(); ++b2)
      CHECK(Q.leq(b1, b2) == Q.leq(b1, b2, W.identity()));
}

TEST_CASE("demazure product: units, squares, growth") {
  WeylGroup W(build_root_system(RootType::A, 2));
  const int s1 = W.simple(1), s2 = W.simple(2);
  CHECK(W.demazure_product(s1, s1) == std::pair{-1, s1});
  CHECK(W.demazure_product(s1, s2) == std::pair{1, W.from_word({1, 2})});
  for (int w = 0; w < W.size(); ++w) {
    CHECK(W.demazure_product(W.identity(), w) == std::pair{1, w});
    CHECK(W.demazure_product(w, W.identity()) == std::pair{1, w});
  }
}

TEST_CASE("demazure result dominates both factors across S4") {
  WeylGroup W(build_root_system(RootType::A, 3));
  for (int u = 0; u < W.size(); ++u) {
    for (int v = 0; v < W.size(); ++v) {
      auto [sign, z] = W.demazure_product(u, v);
      CHECK((sign == 1 || sign == -1));
      CHECK(W.bruhat_leq(u, z));
      CHECK(W.bruhat_leq(v, z));
    }
  }
}

TEST_CASE("demazure folding is independent of the reduced word") {
  WeylGroup W(build_root_system(RootType::A, 2));
  for (int u = 0; u < W.size(); ++u) {
    for (int v = 0; v < W.size(); ++v) {
      const auto expected = W.demazure_product(u, v);
      for (const auto& wv : all_reduced_words(W, v)) {
        int z = u, sign = 1;
        for (int i : wv) {
          const int zi = W.mult_simple_right(z, i);
          if (W.length(zi) > W.length(z))
            z = zi;
          else
            sign = -sign;
        }
        CHECK(std::pair{sign, z} == expected);
      }
    }
  }
}
