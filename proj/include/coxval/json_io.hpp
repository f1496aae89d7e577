#ifndef COXVAL_JSON_IO_HPP
#define COXVAL_JSON_IO_HPP

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxval/coxeter_matroid.hpp"
#include "coxval/indicator_sum.hpp"
#include "coxval/invariants.hpp"

namespace coxval {

// Insertion-ordered JSON: serialization emits keys in the order we insert
// them, so identical data always produces identical bytes.
using Json = nlohmann::ordered_json;

// Parse raw text, converting library parse failures into input_error.
Json parse_json_text(const std::string& text);

// Rationals travel as strings ("3", "-1/2"), never as floats.
Rational json_to_rational(const Json& j);
Json rational_to_json(const Rational& r);

QVector json_to_qvector(const Json& j);
Json qvector_to_json(const QVector& v);

// {"type":"A","rank":2}
RootSystem json_to_root_system(const Json& j);
Json root_system_to_json(const RootSystem& rs);

// Sorted 1-based subsets of [rank], e.g. [1,3].
std::vector<int> json_to_parabolic_set(const Json& j, const RootSystem& rs);
Json parabolic_set_to_json(const std::vector<int>& I);

// {"word":[1,2,1]}: 1-based simple-reflection letters. Any word naming the
// element is accepted; serialization always emits the canonical reduced word.
int json_to_element(const Json& j, const WeylGroup& g);
Json element_to_json(const WeylGroup& g, int w);

// Coset document {"I":[...],"word":[...]}; the word may name any coset
// representative on input and is the minimal representative on output.
Json coset_to_json(const ParabolicQuotient& q, int b);

// {"vertices":[["1/2","-1/2"],...]}
VPolytope json_to_polytope(const Json& j);
Json polytope_to_json(const VPolytope& p);

// {"apex":[...],"generators":[[...]],"lineality":[[...]]}; the generator and
// lineality keys may be omitted for a single point.
AffineCone json_to_cone(const Json& j);
Json cone_to_json(const AffineCone& c);

// Matroid schema before any group is built:
// {"root_system":{"type":"A","rank":2},"I":[1],"bases":[{"word":[]},...]}.
struct MatroidDocument {
  RootType type = RootType::A;
  int rank = 0;
  std::vector<int> I;
  std::vector<std::vector<int>> basis_words;
};

MatroidDocument json_to_matroid_document(const Json& j);

// Map the basis words of a document onto coset indices of a quotient built
// for the same (type, rank, I).
std::vector<int> resolve_bases(const MatroidDocument& doc, const ParabolicQuotient& q);

Json matroid_to_json(const CoxeterMatroid& m);

// Formal sums carry their label kind plus enough context to re-parse the
// labels: {"kind":"coset","root_system":...,"I":...,"terms":[...]} with terms
// [{"label":...,"coeff":"4"},...] in canonical label order.
Json coset_sum_to_json(const FormalSum<int>& s, const ParabolicQuotient& q);
Json cone_sum_to_json(const FormalSum<AffineCone>& s, const RootSystem& rs);
Json orbit_sum_to_json(const FormalSum<OrbitLabel>& s, const RootSystem& rs);

FormalSum<int> json_to_coset_sum(const Json& j, const ParabolicQuotient& q);
FormalSum<AffineCone> json_to_cone_sum(const Json& j);
FormalSum<OrbitLabel> json_to_orbit_sum(const Json& j, const RootSystem& rs);

// {"terms":{"0":"1","2":"4"}}: exponent -> integer coefficient, ascending.
Json polynomial_to_json(const UniPolynomial& p);
UniPolynomial json_to_polynomial(const Json& j);

// Owns the group and quotient a parsed matroid document refers to, so the
// borrowed references inside CoxeterMatroid stay valid for the bundle's
// lifetime.
class MatroidBundle {
 public:
  explicit MatroidBundle(const Json& doc);

  const WeylGroup& group() const { return *group_; }
  const ParabolicQuotient& quotient() const { return *quotient_; }
  const std::vector<int>& bases() const { return bases_; }

  CoxeterMatroid matroid(RecognitionMode mode = RecognitionMode::both) const;
  CoxeterMatroid matroid_unchecked() const;

 private:
  std::unique_ptr<WeylGroup> group_;
  std::unique_ptr<ParabolicQuotient> quotient_;
  std::vector<int> bases_;
};

}  // namespace coxval

#endif
