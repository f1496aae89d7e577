#ifndef COXVAL_INVARIANTS_HPP
#define COXVAL_INVARIANTS_HPP

#include <map>
#include <utility>
#include <vector>

#include "coxval/coxeter_matroid.hpp"
#include "coxval/errors.hpp"

namespace coxval {

// Finite formal sum Σ c_L·U_L with rational coefficients and canonical
// labels. Zero coefficients are never stored, so equality is map equality.
template <class Label, class Less = std::less<Label>>
class FormalSum {
 public:
  void add(const Rational& c, const Label& l) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(l, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Label, Rational, Less>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational mass() const {
    Rational m(0);
    for (const auto& [l, c] : terms_) m += c;
    return m;
  }

  bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalSum& o) const { return !(*this == o); }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) {
    for (const auto& [l, c] : b.terms_) a.add(c, l);
    return a;
  }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) {
    for (const auto& [l, c] : b.terms_) a.add(-c, l);
    return a;
  }
  friend FormalSum operator*(FormalSum a, const Rational& c) {
    if (c.is_zero()) return FormalSum{};
    for (auto& [l, v] : a.terms_) v *= c;
    return a;
  }

 private:
  std::map<Label, Rational, Less> terms_;
};

// Univariate polynomial with exact integer coefficients; no zero terms.
class UniPolynomial {
 public:
  void add(int exponent, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  const std::map<int, Int>& terms() const { return coeffs_; }
  Int coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool operator==(const UniPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPolynomial& o) const { return !(*this == o); }

 private:
  std::map<int, Int> coeffs_;
};

// W-orbit class of an affine root-fan cone: the shape subset I (1-based,
// sorted) together with the apex reduced modulo span{α_i : i ∈ I}.
struct OrbitLabel {
  std::vector<int> I;
  QVector apex;

  bool operator==(const OrbitLabel& o) const {
    return I == o.I && compare(apex, o.apex) == 0;
  }
  bool operator<(const OrbitLabel& o) const {
    if (I != o.I) return I < o.I;
    return compare(apex, o.apex) < 0;
  }
};

// Σ_w U_{w⁻¹·min^w(M)}: one term per group element, total mass |W|.
FormalSum<int> g_invariant(const CoxeterMatroid& m);

// The same sum computed geometrically: the coefficient of U_B counts the
// group elements w whose moved antidominant chamber, anchored at δ_{w·B},
// tightly contains the base polytope.
FormalSum<int> g_invariant_via_tc(const CoxeterMatroid& m);

// All distinct cones of the Coxeter root fan: W-translates of the cones
// spanned by the negated simple roots with the I-indexed ones made lines.
std::vector<AffineCone> coxeter_fan_cones(const WeylGroup& g);

// Support: the affine fan-cone translates tightly containing the input.
// Polytope inputs must pass the root-parallel edge test; cone inputs must be
// translates of fan cones.
FormalSum<AffineCone> f_invariant(const VPolytope& p, const WeylGroup& g);
FormalSum<AffineCone> f_invariant(const AffineCone& p, const WeylGroup& g);

// f_invariant with hits grouped into W-orbit classes; the coefficient of a
// class is the number of distinct hit cones in it.
FormalSum<OrbitLabel> g_plus_invariant(const VPolytope& p, const WeylGroup& g);
FormalSum<OrbitLabel> g_plus_invariant(const AffineCone& p, const WeylGroup& g);

enum class InterlaceMode { definition, via_g };

// Interlace polynomial of a delta-matroid, i.e. a matroid over the size-2ⁿ
// quotient of the hyperoctahedral group. definition: Σ_A x^{min_B |A△B|}
// over all subsets A; via_g: the normalized group sweep (1/n!)·Σ_w x^{n/2 −
// coordinate sum of δ at w⁻¹·min^w(M)}.
UniPolynomial interlace_polynomial(const CoxeterMatroid& m, InterlaceMode mode);

// Row b = coefficients of g_invariant(schubert(q, b)); lower-triangular in
// the coset index order with a positive diagonal.
QMatrix schubert_matrix(const ParabolicQuotient& q);

// Σ coeff(b)·values[b] for a coset-labeled sum.
template <class V>
V apply_specialization(const std::vector<V>& values, const FormalSum<int>& g) {
  V out{};
  for (const auto& [b, c] : g.terms()) out = out + values[static_cast<std::size_t>(b)] * c;
  return out;
}

// Given the values of an invariant on all Schubert matroids, solve for the
// unique linear map ψ on the U_B basis with ψ∘g_invariant matching them.
// V must be a rational vector space type: zero default, +, -, *Rational, ==.
template <class V>
std::vector<V> specialize(const ParabolicQuotient& q, const std::vector<V>& g_on_schuberts) {
  if (static_cast<int>(g_on_schuberts.size()) != q.size())
    throw input_error("specialize needs one value per coset");
  const QMatrix c = schubert_matrix(q);
  std::vector<V> psi(g_on_schuberts.size());
  for (int b = 0; b < q.size(); ++b) {
    V acc = g_on_schuberts[static_cast<std::size_t>(b)];
    for (int bp = 0; bp < b; ++bp)
      if (c(b, bp) != Rational(0)) acc = acc - psi[static_cast<std::size_t>(bp)] * c(b, bp);
    if (c(b, b) == Rational(0)) throw consistency_error("Schubert matrix diagonal vanished");
    psi[static_cast<std::size_t>(b)] = acc * (Rational(1) / c(b, b));
  }
  for (int b = 0; b < q.size(); ++b) {
    V back{};
    for (int bp = 0; bp <= b; ++bp)
      if (c(b, bp) != Rational(0)) back = back + psi[static_cast<std::size_t>(bp)] * c(b, bp);
    if (!(back == g_on_schuberts[static_cast<std::size_t>(b)]))
      throw consistency_error("specialization failed to reconstruct its inputs");
  }
  return psi;
}

// Coefficients λ with g_invariant(M) = Σ_B λ_B·g_invariant(schubert(q, B)),
// solved exactly against the Schubert matrix; zero residual is verified.
FormalSum<int> schubert_decompose(const CoxeterMatroid& m);

enum class ValuationInvariant { g, interlace, f };

struct ValuationCheck {
  bool is_relation = false;
  bool invariant_zero = false;
};

// First decides whether Σ aᵢ·1_{P_{Mᵢ}} = 0 on base polytopes, then whether
// the chosen invariant also sums to zero with the same coefficients.
ValuationCheck verify_valuation_relation(
    const std::vector<std::pair<Rational, CoxeterMatroid>>& terms, ValuationInvariant invariant);

}  // namespace coxval

#endif
