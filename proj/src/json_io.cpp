#include "coxval/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "coxval/errors.hpp"

namespace coxval {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw input_error(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw input_error(std::string(what) + " is missing the \"" + key + "\" key");
  return *it;
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known)
      throw input_error(std::string(what) + " has an unknown key \"" + it.key() + "\"");
  }
}

int to_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw input_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> to_int_vector(const Json& j, const char* what) {
  if (!j.is_array())
    throw input_error(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(to_int(e, what));
  return out;
}

std::string to_text(const Json& j, const char* what) {
  if (!j.is_string()) throw input_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json word_to_json(const std::vector<int>& word) {
  Json out = Json::array();
  for (int letter : word) out.push_back(letter);
  return out;
}

std::vector<QVector> json_to_qvector_list(const Json& j, Eigen::Index ambient,
                                          const char* what) {
  if (!j.is_array())
    throw input_error(std::string(what) + " must be an array of vectors");
  std::vector<QVector> out;
  for (const auto& e : j) {
    QVector v = json_to_qvector(e);
    if (v.size() != ambient)
      throw input_error(std::string(what) + " has a vector of the wrong length");
    out.push_back(std::move(v));
  }
  return out;
}

Json qvector_list_to_json(const std::vector<QVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(qvector_to_json(v));
  return out;
}

// Shared frame of the formal-sum documents: kind, context, term list.
Json sum_document(const char* kind) {
  Json out = Json::object();
  out["kind"] = kind;
  return out;
}

void check_sum_kind(const Json& j, const char* kind) {
  if (to_text(field(j, "kind", "formal sum"), "formal sum kind") != kind)
    throw input_error(std::string("formal sum has kind \"") +
                      j["kind"].get<std::string>() + "\", expected \"" + kind + "\"");
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
}

Rational json_to_rational(const Json& j) {
  return Rational::parse(to_text(j, "rational value (use strings like \"-1/2\")"));
}

Json rational_to_json(const Rational& r) { return Json(r.str()); }

QVector json_to_qvector(const Json& j) {
  if (!j.is_array() || j.empty())
    throw input_error("vectors must be non-empty arrays of rational strings");
  QVector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = json_to_rational(j[static_cast<std::size_t>(i)]);
  return v;
}

Json qvector_to_json(const QVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

RootSystem json_to_root_system(const Json& j) {
  reject_unknown_keys(j, {"type", "rank"}, "root system");
  const std::string type = to_text(field(j, "type", "root system"), "root system type");
  const int rank = to_int(field(j, "rank", "root system"), "root system rank");
  return build_root_system(root_type_from_string(type), rank);
}

Json root_system_to_json(const RootSystem& rs) {
  Json out = Json::object();
  out["type"] = to_string(rs.type);
  out["rank"] = rs.rank;
  return out;
}

std::vector<int> json_to_parabolic_set(const Json& j, const RootSystem& rs) {
  std::vector<int> I = to_int_vector(j, "the parabolic set I");
  check_parabolic_subset(rs, I);
  return I;
}

Json parabolic_set_to_json(const std::vector<int>& I) { return word_to_json(I); }

int json_to_element(const Json& j, const WeylGroup& g) {
  reject_unknown_keys(j, {"word"}, "group element");
  return g.from_word(to_int_vector(field(j, "word", "group element"), "word letter"));
}

Json element_to_json(const WeylGroup& g, int w) {
  Json out = Json::object();
  out["word"] = word_to_json(g.word(w));
  return out;
}

Json coset_to_json(const ParabolicQuotient& q, int b) {
  Json out = Json::object();
  out["I"] = parabolic_set_to_json(q.parabolic_set());
  out["word"] = word_to_json(q.group().word(q.min_rep(b)));
  return out;
}

VPolytope json_to_polytope(const Json& j) {
  reject_unknown_keys(j, {"vertices"}, "polytope");
  const Json& verts = field(j, "vertices", "polytope");
  if (!verts.is_array() || verts.empty())
    throw input_error("polytope needs a non-empty \"vertices\" array");
  QVector first = json_to_qvector(verts[0]);
  std::vector<QVector> pts = json_to_qvector_list(verts, first.size(), "polytope vertices");
  return VPolytope(std::move(pts));
}

Json polytope_to_json(const VPolytope& p) {
  Json out = Json::object();
  out["vertices"] = qvector_list_to_json(p.vertices());
  return out;
}

AffineCone json_to_cone(const Json& j) {
  reject_unknown_keys(j, {"apex", "generators", "lineality"}, "cone");
  QVector apex = json_to_qvector(field(j, "apex", "cone"));
  std::vector<QVector> gens, lin;
  if (j.contains("generators"))
    gens = json_to_qvector_list(j["generators"], apex.size(), "cone generators");
  if (j.contains("lineality"))
    lin = json_to_qvector_list(j["lineality"], apex.size(), "cone lineality");
  return AffineCone(std::move(apex), std::move(gens), std::move(lin));
}

Json cone_to_json(const AffineCone& c) {
  Json out = Json::object();
  out["apex"] = qvector_to_json(c.apex());
  out["generators"] = qvector_list_to_json(c.rays());
  out["lineality"] = qvector_list_to_json(c.lineality_basis());
  return out;
}

MatroidDocument json_to_matroid_document(const Json& j) {
  reject_unknown_keys(j, {"root_system", "I", "bases"}, "matroid");
  MatroidDocument doc;
  const RootSystem rs = json_to_root_system(field(j, "root_system", "matroid"));
  doc.type = rs.type;
  doc.rank = rs.rank;
  doc.I = json_to_parabolic_set(field(j, "I", "matroid"), rs);
  const Json& bases = field(j, "bases", "matroid");
  if (!bases.is_array() || bases.empty())
    throw input_error("matroid needs a non-empty \"bases\" array");
  for (const auto& b : bases) {
    reject_unknown_keys(b, {"word"}, "basis");
    doc.basis_words.push_back(to_int_vector(field(b, "word", "basis"), "word letter"));
  }
  return doc;
}

std::vector<int> resolve_bases(const MatroidDocument& doc, const ParabolicQuotient& q) {
  std::vector<int> out;
  out.reserve(doc.basis_words.size());
  for (const auto& word : doc.basis_words)
    out.push_back(q.coset_of(q.group().from_word(word)));
  return out;
}

Json matroid_to_json(const CoxeterMatroid& m) {
  const ParabolicQuotient& q = m.quotient();
  Json out = Json::object();
  out["root_system"] = root_system_to_json(q.group().roots());
  out["I"] = parabolic_set_to_json(q.parabolic_set());
  Json bases = Json::array();
  for (int b : m.bases()) {
    Json basis = Json::object();
    basis["word"] = word_to_json(q.group().word(q.min_rep(b)));
    bases.push_back(std::move(basis));
  }
  out["bases"] = std::move(bases);
  return out;
}

Json coset_sum_to_json(const FormalSum<int>& s, const ParabolicQuotient& q) {
  Json out = sum_document("coset");
  out["root_system"] = root_system_to_json(q.group().roots());
  out["I"] = parabolic_set_to_json(q.parabolic_set());
  Json terms = Json::array();
  for (const auto& [b, c] : s.terms()) {
    Json term = Json::object();
    Json label = Json::object();
    label["word"] = word_to_json(q.group().word(q.min_rep(b)));
    term["label"] = std::move(label);
    term["coeff"] = rational_to_json(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json cone_sum_to_json(const FormalSum<AffineCone>& s, const RootSystem& rs) {
  Json out = sum_document("cone-class");
  out["root_system"] = root_system_to_json(rs);
  Json terms = Json::array();
  for (const auto& [cone, c] : s.terms()) {
    Json term = Json::object();
    term["label"] = cone_to_json(cone);
    term["coeff"] = rational_to_json(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json orbit_sum_to_json(const FormalSum<OrbitLabel>& s, const RootSystem& rs) {
  Json out = sum_document("orbit-class");
  out["root_system"] = root_system_to_json(rs);
  Json terms = Json::array();
  for (const auto& [label, c] : s.terms()) {
    Json term = Json::object();
    Json l = Json::object();
    l["I"] = parabolic_set_to_json(label.I);
    l["apex"] = qvector_to_json(label.apex);
    term["label"] = std::move(l);
    term["coeff"] = rational_to_json(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

FormalSum<int> json_to_coset_sum(const Json& j, const ParabolicQuotient& q) {
  check_sum_kind(j, "coset");
  const RootSystem rs = json_to_root_system(field(j, "root_system", "formal sum"));
  if (rs.type != q.group().roots().type || rs.rank != q.group().roots().rank)
    throw input_error("formal sum root system does not match the quotient");
  if (json_to_parabolic_set(field(j, "I", "formal sum"), rs) != q.parabolic_set())
    throw input_error("formal sum parabolic set does not match the quotient");
  FormalSum<int> out;
  for (const auto& term : field(j, "terms", "formal sum")) {
    const int w = json_to_element(field(term, "label", "term"), q.group());
    out.add(json_to_rational(field(term, "coeff", "term")), q.coset_of(w));
  }
  return out;
}

FormalSum<AffineCone> json_to_cone_sum(const Json& j) {
  check_sum_kind(j, "cone-class");
  FormalSum<AffineCone> out;
  Eigen::Index ambient = -1;
  for (const auto& term : field(j, "terms", "formal sum")) {
    AffineCone cone = json_to_cone(field(term, "label", "term"));
    if (ambient < 0) ambient = cone.ambient();
    if (cone.ambient() != ambient)
      throw input_error("cone-class labels live in different ambient dimensions");
    out.add(json_to_rational(field(term, "coeff", "term")), cone);
  }
  return out;
}

FormalSum<OrbitLabel> json_to_orbit_sum(const Json& j, const RootSystem& rs) {
  check_sum_kind(j, "orbit-class");
  FormalSum<OrbitLabel> out;
  for (const auto& term : field(j, "terms", "formal sum")) {
    const Json& l = field(term, "label", "term");
    reject_unknown_keys(l, {"I", "apex"}, "orbit label");
    OrbitLabel label;
    label.I = json_to_parabolic_set(field(l, "I", "orbit label"), rs);
    label.apex = json_to_qvector(field(l, "apex", "orbit label"));
    if (label.apex.size() != rs.ambient)
      throw input_error("orbit label apex has the wrong length");
    out.add(json_to_rational(field(term, "coeff", "term")), label);
  }
  return out;
}

Json polynomial_to_json(const UniPolynomial& p) {
  Json out = Json::object();
  Json terms = Json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = c.str();
  out["terms"] = std::move(terms);
  return out;
}

UniPolynomial json_to_polynomial(const Json& j) {
  reject_unknown_keys(j, {"terms"}, "polynomial");
  const Json& terms = field(j, "terms", "polynomial");
  if (!terms.is_object()) throw input_error("polynomial \"terms\" must be an object");
  UniPolynomial out;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    const std::string& key = it.key();
    std::size_t used = 0;
    int exponent = 0;
    try {
      exponent = std::stoi(key, &used);
    } catch (const std::exception&) {
      throw input_error("polynomial exponent \"" + key + "\" is not an integer");
    }
    if (used != key.size())
      throw input_error("polynomial exponent \"" + key + "\" is not an integer");
    const Rational c = json_to_rational(*it);
    if (!c.is_integer())
      throw input_error("polynomial coefficients must be integers");
    out.add(exponent, c.as_integer());
  }
  return out;
}

MatroidBundle::MatroidBundle(const Json& doc) {
  const MatroidDocument d = json_to_matroid_document(doc);
  group_ = std::make_unique<WeylGroup>(build_root_system(d.type, d.rank));
  quotient_ = std::make_unique<ParabolicQuotient>(*group_, d.I);
  bases_ = resolve_bases(d, *quotient_);
}

CoxeterMatroid MatroidBundle::matroid(RecognitionMode mode) const {
  return CoxeterMatroid(*quotient_, bases_, mode);
}

CoxeterMatroid MatroidBundle::matroid_unchecked() const {
  return CoxeterMatroid::unchecked(*quotient_, bases_);
}

}  // namespace coxval
