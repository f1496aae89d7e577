// coxval: batch front end over the exact Coxeter-matroid library. Parses JSON
// documents, dispatches to the library, prints JSON or text reports. Exit
// codes: 0 success, 1 domain/capacity/internal errors, 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "coxval/coxeter_matroid.hpp"
#include "coxval/errors.hpp"
#include "coxval/indicator_sum.hpp"
#include "coxval/invariants.hpp"
#include "coxval/json_io.hpp"

namespace {

using coxval::AffineCone;
using coxval::CoxeterMatroid;
using coxval::FormalSum;
using coxval::Json;
using coxval::OrbitLabel;
using coxval::ParabolicQuotient;
using coxval::QVector;
using coxval::Rational;
using coxval::RootSystem;
using coxval::UniPolynomial;
using coxval::VPolytope;
using coxval::WeylGroup;

// Everything the flags can carry; each subcommand binds the subset it uses.
struct Opts {
  std::string input_path;
  std::string inline_json;
  std::string format = "json";
  int jobs = 1;
  std::string type;
  int rank = 0;
  std::string I;
  std::string word;
  std::string mode = "both";
  std::string method = "bruhat";
  std::string interlace_method = "definition";
  std::string invariant;
  bool skip_verify = false;
};

// The error trap needs the requested format even when the handler never ran.
std::string g_format = "json";

void print_json(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

void emit(const Json& doc, const std::string& text) {
  if (g_format == "text")
    std::cout << text;
  else
    print_json(doc);
}

void emit_error(const std::string& kind, const std::string& message) {
  if (g_format == "text") {
    std::cout << "error (" << kind << "): " << message << "\n";
    return;
  }
  Json doc = Json::object();
  Json err = Json::object();
  err["kind"] = kind;
  err["message"] = message;
  doc["error"] = std::move(err);
  print_json(doc);
}

std::string read_input_text(const Opts& o) {
  const bool has_path = !o.input_path.empty();
  const bool has_inline = !o.inline_json.empty();
  if (has_path == has_inline)
    throw coxval::input_error("provide exactly one of --input or --json");
  if (has_inline) return o.inline_json;
  if (o.input_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(o.input_path);
  if (!in) throw coxval::input_error("cannot read input file: " + o.input_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_input_doc(const Opts& o) { return coxval::parse_json_text(read_input_text(o)); }

const Json& need(const Json& j, const char* key, const char* what) {
  if (!j.is_object())
    throw coxval::input_error(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw coxval::input_error(std::string(what) + " is missing the \"" + key + "\" key");
  return *it;
}

// "1,3" or "2 1" style integer lists; empty string means the empty set.
std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(s);
  std::string normalized = s;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream words(normalized);
  while (words >> token) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw coxval::input_error(std::string(what) + ": \"" + token + "\" is not an integer");
    }
  }
  return out;
}

// ---- text renderings ------------------------------------------------------

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += " ";
    s += "s" + std::to_string(word[k]);
  }
  return s;
}

std::string set_text(const std::vector<int>& I) {
  std::string s = "{";
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(I[k]);
  }
  return s + "}";
}

std::string vec_text(const QVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v(i).str();
  }
  return s + ")";
}

std::string vec_list_text(const std::vector<QVector>& vs) {
  if (vs.empty()) return "none";
  std::string s;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) s += " ";
    s += vec_text(vs[k]);
  }
  return s;
}

std::string cone_label_text(const AffineCone& c) {
  return "apex " + vec_text(c.apex()) + "; rays " + vec_list_text(c.rays()) + "; lin " +
         vec_list_text(c.lineality_basis());
}

std::string header_text(const RootSystem& rs, const std::vector<int>& I) {
  return "root system: " + to_string(rs.type) + std::to_string(rs.rank) + ", I = " +
         set_text(I) + "\n";
}

std::string coset_sum_text(const FormalSum<int>& s, const ParabolicQuotient& q) {
  std::string out;
  for (const auto& [b, c] : s.terms())
    out += c.str() + "  U(" + word_text(q.group().word(q.min_rep(b))) + ")\n";
  if (s.terms().empty()) out += "0\n";
  return out;
}

std::string cone_sum_text(const FormalSum<AffineCone>& s) {
  std::string out;
  for (const auto& [cone, c] : s.terms())
    out += c.str() + "  C[" + cone_label_text(cone) + "]\n";
  if (s.terms().empty()) out += "0\n";
  return out;
}

std::string orbit_sum_text(const FormalSum<OrbitLabel>& s) {
  std::string out;
  for (const auto& [label, c] : s.terms())
    out += c.str() + "  O[I = " + set_text(label.I) + "; apex " + vec_text(label.apex) + "]\n";
  if (s.terms().empty()) out += "0\n";
  return out;
}

std::string poly_text(const UniPolynomial& p) {
  if (p.is_zero()) return "0\n";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    const std::string coeff = c.str();
    if (e == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + " ";
      out += "x";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out + "\n";
}

std::string matroid_text(const CoxeterMatroid& m) {
  const ParabolicQuotient& q = m.quotient();
  std::string out = header_text(q.group().roots(), q.parabolic_set());
  out += std::to_string(m.size()) + " bases:\n";
  for (int b : m.bases()) out += "  " + word_text(q.group().word(q.min_rep(b))) + "\n";
  return out;
}

// ---- input-document dispatch for the polyhedral invariants ----------------

// finvariant/gplus accept a matroid document, or {"root_system", "polytope"},
// or {"root_system", "cone"}. Returns the group plus the body to sweep.
struct SweepInput {
  std::unique_ptr<coxval::MatroidBundle> bundle;  // set on the matroid path
  std::unique_ptr<WeylGroup> group;               // set otherwise
  std::unique_ptr<VPolytope> polytope;
  std::unique_ptr<AffineCone> cone;

  const WeylGroup& weyl() const { return bundle ? bundle->group() : *group; }
};

SweepInput parse_sweep_input(const Json& doc) {
  SweepInput in;
  if (doc.is_object() && doc.contains("bases")) {
    in.bundle = std::make_unique<coxval::MatroidBundle>(doc);
    const CoxeterMatroid m = in.bundle->matroid();
    in.polytope = std::make_unique<VPolytope>(base_polytope(m));
    return in;
  }
  if (doc.is_object() && doc.contains("polytope")) {
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (it.key() != "root_system" && it.key() != "polytope")
        throw coxval::input_error("unknown key \"" + it.key() + "\" in polytope input");
    in.group = std::make_unique<WeylGroup>(
        coxval::json_to_root_system(need(doc, "root_system", "input")));
    in.polytope = std::make_unique<VPolytope>(coxval::json_to_polytope(doc["polytope"]));
    return in;
  }
  if (doc.is_object() && doc.contains("cone")) {
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (it.key() != "root_system" && it.key() != "cone")
        throw coxval::input_error("unknown key \"" + it.key() + "\" in cone input");
    in.group = std::make_unique<WeylGroup>(
        coxval::json_to_root_system(need(doc, "root_system", "input")));
    in.cone = std::make_unique<AffineCone>(coxval::json_to_cone(doc["cone"]));
    return in;
  }
  throw coxval::input_error(
      "expected a matroid document, {root_system, polytope}, or {root_system, cone}");
}

// ---- subcommand handlers ---------------------------------------------------

void run_group(const Opts& o) {
  const RootSystem rs = build_root_system(coxval::root_type_from_string(o.type), o.rank);
  const WeylGroup g(rs);
  Json doc = Json::object();
  doc["root_system"] = coxval::root_system_to_json(g.roots());
  doc["order"] = g.size();
  Json elems = Json::array();
  for (int w = 0; w < g.size(); ++w) {
    Json e = coxval::element_to_json(g, w);
    e["length"] = g.length(w);
    elems.push_back(std::move(e));
  }
  doc["elements"] = std::move(elems);

  std::string text = "W(" + to_string(rs.type) + std::to_string(rs.rank) + "): " +
                     std::to_string(g.size()) + " elements\n";
  for (int w = 0; w < g.size(); ++w)
    text += "  " + word_text(g.word(w)) + "  (length " + std::to_string(g.length(w)) + ")\n";
  emit(doc, text);
}

coxval::RecognitionMode parse_recognition_mode(const std::string& s) {
  if (s == "bruhat") return coxval::RecognitionMode::bruhat;
  if (s == "polytope") return coxval::RecognitionMode::polytope;
  if (s == "both") return coxval::RecognitionMode::both;
  throw coxval::input_error("unknown recognition mode: " + s);
}

void run_matroid_check(const Opts& o) {
  const coxval::MatroidBundle bundle(read_input_doc(o));
  const bool ok = is_coxeter_matroid(bundle.quotient(), bundle.bases(),
                                     parse_recognition_mode(o.mode));
  const ParabolicQuotient& q = bundle.quotient();
  Json doc = Json::object();
  doc["root_system"] = coxval::root_system_to_json(q.group().roots());
  doc["I"] = coxval::parabolic_set_to_json(q.parabolic_set());
  doc["mode"] = o.mode;
  doc["matroid"] = ok;

  std::string text = header_text(q.group().roots(), q.parabolic_set());
  text += std::string("coxeter matroid: ") + (ok ? "yes" : "no") + "\n";
  emit(doc, text);
}

void run_ginvariant(const Opts& o) {
  const coxval::MatroidBundle bundle(read_input_doc(o));
  const CoxeterMatroid m = bundle.matroid();
  FormalSum<int> sum;
  if (o.method == "bruhat")
    sum = g_invariant(m);
  else if (o.method == "cones")
    sum = g_invariant_via_tc(m);
  else
    throw coxval::input_error("unknown method: " + o.method);
  emit(coset_sum_to_json(sum, bundle.quotient()), coset_sum_text(sum, bundle.quotient()));
}

void run_finvariant(const Opts& o) {
  const SweepInput in = parse_sweep_input(read_input_doc(o));
  const FormalSum<AffineCone> sum = in.polytope ? f_invariant(*in.polytope, in.weyl())
                                                : f_invariant(*in.cone, in.weyl());
  emit(cone_sum_to_json(sum, in.weyl().roots()), cone_sum_text(sum));
}

void run_gplus(const Opts& o) {
  const SweepInput in = parse_sweep_input(read_input_doc(o));
  const FormalSum<OrbitLabel> sum = in.polytope ? g_plus_invariant(*in.polytope, in.weyl())
                                                : g_plus_invariant(*in.cone, in.weyl());
  emit(orbit_sum_to_json(sum, in.weyl().roots()), orbit_sum_text(sum));
}

void run_schubert(const Opts& o) {
  const RootSystem rs = build_root_system(coxval::root_type_from_string(o.type), o.rank);
  const WeylGroup g(rs);
  std::vector<int> I = parse_int_list(o.I, "the parabolic set I");
  check_parabolic_subset(g.roots(), I);
  const ParabolicQuotient q(g, I);
  const int w = g.from_word(parse_int_list(o.word, "the coset word"));
  const CoxeterMatroid m = schubert(q, q.coset_of(w));
  emit(coxval::matroid_to_json(m), matroid_text(m));
}

void run_schubert_matrix(const Opts& o) {
  const RootSystem rs = build_root_system(coxval::root_type_from_string(o.type), o.rank);
  const WeylGroup g(rs);
  std::vector<int> I = parse_int_list(o.I, "the parabolic set I");
  check_parabolic_subset(g.roots(), I);
  const ParabolicQuotient q(g, I);
  const coxval::QMatrix m = schubert_matrix(q);

  Json doc = Json::object();
  doc["root_system"] = coxval::root_system_to_json(g.roots());
  doc["I"] = coxval::parabolic_set_to_json(I);
  Json cosets = Json::array();
  for (int b = 0; b < q.size(); ++b) {
    Json c = Json::object();
    c["word"] = coxval::element_to_json(g, q.min_rep(b))["word"];
    cosets.push_back(std::move(c));
  }
  doc["cosets"] = std::move(cosets);
  Json rows = Json::array();
  for (int b = 0; b < q.size(); ++b) {
    Json row = Json::array();
    for (int bp = 0; bp < q.size(); ++bp) row.push_back(m(b, bp).str());
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);

  std::string text = header_text(g.roots(), I);
  text += "rows/columns (coset order):";
  for (int b = 0; b < q.size(); ++b) text += " " + word_text(g.word(q.min_rep(b)));
  text += "\n";
  for (int b = 0; b < q.size(); ++b) {
    std::string line;
    for (int bp = 0; bp < q.size(); ++bp) {
      if (bp) line += " ";
      line += m(b, bp).str();
    }
    text += line + "\n";
  }
  emit(doc, text);
}

void run_decompose(const Opts& o) {
  const coxval::MatroidBundle bundle(read_input_doc(o));
  const FormalSum<int> lambda = schubert_decompose(bundle.matroid());
  emit(coset_sum_to_json(lambda, bundle.quotient()),
       coset_sum_text(lambda, bundle.quotient()));
}

void run_interlace(const Opts& o) {
  const coxval::MatroidBundle bundle(read_input_doc(o));
  coxval::InterlaceMode mode;
  if (o.interlace_method == "definition")
    mode = coxval::InterlaceMode::definition;
  else if (o.interlace_method == "via-g")
    mode = coxval::InterlaceMode::via_g;
  else
    throw coxval::input_error("unknown method: " + o.interlace_method);
  const UniPolynomial p = interlace_polynomial(bundle.matroid(), mode);
  emit(coxval::polynomial_to_json(p), poly_text(p));
}

void run_subdivision_verify(const Opts& o) {
  const Json doc = read_input_doc(o);
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "invariant" && it.key() != "terms")
      throw coxval::input_error("unknown key \"" + it.key() + "\" in subdivision input");

  std::string which = o.invariant;
  if (which.empty() && doc.contains("invariant") && doc["invariant"].is_string())
    which = doc["invariant"].get<std::string>();
  coxval::ValuationInvariant inv;
  if (which == "g")
    inv = coxval::ValuationInvariant::g;
  else if (which == "interlace")
    inv = coxval::ValuationInvariant::interlace;
  else if (which == "f")
    inv = coxval::ValuationInvariant::f;
  else if (which.empty())
    throw coxval::input_error("choose an invariant: --invariant g|interlace|f");
  else
    throw coxval::input_error("unknown invariant: " + which);

  const Json& term_list = need(doc, "terms", "subdivision input");
  if (!term_list.is_array() || term_list.empty())
    throw coxval::input_error("subdivision input needs a non-empty \"terms\" array");

  // All cells must live in one quotient; parse the headers first so a single
  // group can own every matroid.
  std::vector<Rational> coeffs;
  std::vector<coxval::MatroidDocument> docs;
  for (const auto& t : term_list) {
    for (auto it = t.begin(); it != t.end(); ++it)
      if (it.key() != "coeff" && it.key() != "matroid")
        throw coxval::input_error("unknown key \"" + it.key() + "\" in subdivision term");
    coeffs.push_back(coxval::json_to_rational(need(t, "coeff", "subdivision term")));
    docs.push_back(coxval::json_to_matroid_document(need(t, "matroid", "subdivision term")));
  }
  for (const auto& d : docs)
    if (d.type != docs[0].type || d.rank != docs[0].rank || d.I != docs[0].I)
      throw coxval::input_error("subdivision terms live in different quotients");

  const WeylGroup g(build_root_system(docs[0].type, docs[0].rank));
  const ParabolicQuotient q(g, docs[0].I);
  std::vector<std::pair<Rational, CoxeterMatroid>> terms;
  for (std::size_t k = 0; k < docs.size(); ++k)
    terms.emplace_back(coeffs[k], CoxeterMatroid(q, resolve_bases(docs[k], q)));

  const coxval::ValuationCheck check = verify_valuation_relation(terms, inv);
  Json out = Json::object();
  out["invariant"] = which;
  out["term_count"] = static_cast<int>(terms.size());
  out["relation"] = check.is_relation;
  out["invariant_zero"] = check.invariant_zero;

  std::string text = std::string("indicator relation: ") + (check.is_relation ? "yes" : "no") +
                     "\n" + "invariant sum zero: " + (check.invariant_zero ? "yes" : "no") +
                     "\n";
  emit(out, text);
}

void run_stability(const Opts& o) {
  const RootSystem rs = build_root_system(coxval::root_type_from_string(o.type), o.rank);
  const WeylGroup g(rs);
  std::vector<int> I = parse_int_list(o.I, "the parabolic set I");
  check_parabolic_subset(g.roots(), I);
  const ParabolicQuotient q(g, I);
  const coxval::StabilityReport report = check_intersection_stability(q);

  Json doc = Json::object();
  doc["root_system"] = coxval::root_system_to_json(g.roots());
  doc["I"] = coxval::parabolic_set_to_json(I);
  doc["stable"] = report.stable;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json j = Json::object();
    Json base = Json::object();
    base["word"] = coxval::element_to_json(g, q.min_rep(w.base))["word"];
    j["base"] = std::move(base);
    Json bad_v = Json::array();
    for (const auto& v : w.bad_vertices) bad_v.push_back(coxval::qvector_to_json(v));
    j["bad_vertices"] = std::move(bad_v);
    Json bad_e = Json::array();
    for (const auto& e : w.bad_edges) bad_e.push_back(coxval::qvector_to_json(e));
    j["bad_edges"] = std::move(bad_e);
    witnesses.push_back(std::move(j));
  }
  doc["witnesses"] = std::move(witnesses);

  std::string text = header_text(g.roots(), I);
  text += std::string("stable: ") + (report.stable ? "yes" : "no") + "\n";
  for (const auto& w : report.witnesses) {
    text += "  witness base " + word_text(g.word(q.min_rep(w.base))) + ": " +
            std::to_string(w.bad_vertices.size()) + " stray vertices, " +
            std::to_string(w.bad_edges.size()) + " non-root edges\n";
  }
  emit(doc, text);
}

void run_brianchon_gram(const Opts& o) {
  const Json doc = read_input_doc(o);
  const VPolytope p = coxval::json_to_polytope(doc);
  const coxval::SignedPolyhedralSum sum = brianchon_gram(p);

  Json out = Json::object();
  out["polytope"] = coxval::polytope_to_json(p);
  Json terms = Json::array();
  std::string text;
  for (const auto& t : sum.terms) {
    Json term = Json::object();
    term["coeff"] = t.coeff.str();
    const AffineCone& cone = std::get<AffineCone>(t.body);
    term["cone"] = coxval::cone_to_json(cone);
    terms.push_back(std::move(term));
    text += t.coeff.str() + "  C[" + cone_label_text(cone) + "]\n";
  }
  out["terms"] = std::move(terms);

  if (!o.skip_verify) {
    coxval::SignedPolyhedralSum relation = sum;
    relation.add(coxval::Int(-1), p);
    const bool ok = verify_indicator_relation(relation);
    if (!ok)
      throw coxval::consistency_error("Brianchon-Gram decomposition failed verification");
    out["verified"] = true;
    text += "verified: yes\n";
  }
  emit(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact valuative invariants of Coxeter matroids"};
  app.require_subcommand(1);
  Opts o;

  auto add_common = [&](CLI::App* sub, bool takes_doc) {
    sub->add_option("-o,--output-format", o.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--jobs", o.jobs, "worker threads for library sweeps")
        ->check(CLI::PositiveNumber);
    if (takes_doc) {
      sub->add_option("-i,--input", o.input_path, "path of the JSON input ('-' for stdin)");
      sub->add_option("--json", o.inline_json, "inline JSON input");
    }
  };
  auto add_quotient_flags = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "root system type: A, B, C or D")->required();
    sub->add_option("--rank", o.rank, "root system rank")->required();
    sub->add_option("--I", o.I, "parabolic set, e.g. \"1,3\" (\"\" for the empty set)")
        ->required();
  };

  // Handlers pick up the output format before doing any work so the error
  // trap renders in the format the user asked for.
  auto dispatch = [&](void (*handler)(const Opts&)) {
    return [&o, handler] {
      g_format = o.format;
      handler(o);
    };
  };

  CLI::App* group = app.add_subcommand("group", "enumerate a Weyl group");
  group->add_option("--type", o.type, "root system type: A, B, C or D")->required();
  group->add_option("--rank", o.rank, "root system rank")->required();
  add_common(group, false);
  group->callback(dispatch(run_group));

  CLI::App* mcheck =
      app.add_subcommand("matroid-check", "test whether a basis set is a Coxeter matroid");
  add_common(mcheck, true);
  mcheck->add_option("--mode", o.mode, "recognition mode: bruhat, polytope or both")
      ->check(CLI::IsMember({"bruhat", "polytope", "both"}));
  mcheck->callback(dispatch(run_matroid_check));

  CLI::App* ginv = app.add_subcommand("ginvariant", "g-invariant of a Coxeter matroid");
  add_common(ginv, true);
  ginv->add_option("--method", o.method, "bruhat (group sweep) or cones (tight containment)")
      ->check(CLI::IsMember({"bruhat", "cones"}));
  ginv->callback(dispatch(run_ginvariant));

  CLI::App* finv =
      app.add_subcommand("finvariant", "universal valuation on cone classes");
  add_common(finv, true);
  finv->callback(dispatch(run_finvariant));

  CLI::App* gplus =
      app.add_subcommand("gplus", "universal valuative invariant on orbit classes");
  add_common(gplus, true);
  gplus->callback(dispatch(run_gplus));

  CLI::App* schub = app.add_subcommand("schubert", "Schubert matroid of a coset");
  add_quotient_flags(schub);
  schub->add_option("--word", o.word, "word of the coset representative (\"\" = identity)");
  add_common(schub, false);
  schub->callback(dispatch(run_schubert));

  CLI::App* smat =
      app.add_subcommand("schubert-matrix", "g-invariants of all Schubert matroids");
  add_quotient_flags(smat);
  add_common(smat, false);
  smat->callback(dispatch(run_schubert_matrix));

  CLI::App* dec =
      app.add_subcommand("decompose", "expand a matroid in the Schubert basis");
  add_common(dec, true);
  dec->callback(dispatch(run_decompose));

  CLI::App* inter = app.add_subcommand("interlace", "interlace polynomial of a delta-matroid");
  add_common(inter, true);
  inter->add_option("--method", o.interlace_method, "definition or via-g")
      ->check(CLI::IsMember({"definition", "via-g"}));
  inter->callback(dispatch(run_interlace));

  CLI::App* subdiv =
      app.add_subcommand("subdivision-verify", "check a valuation relation on matroid cells");
  add_common(subdiv, true);
  subdiv->add_option("--invariant", o.invariant, "g, interlace or f")
      ->check(CLI::IsMember({"g", "interlace", "f"}));
  subdiv->callback(dispatch(run_subdivision_verify));

  CLI::App* stab = app.add_subcommand("stability", "intersection stability of a quotient");
  add_quotient_flags(stab);
  add_common(stab, false);
  stab->callback(dispatch(run_stability));

  CLI::App* bg =
      app.add_subcommand("brianchon-gram", "tangent-cone decomposition of a polytope");
  add_common(bg, true);
  bg->add_flag("--skip-verify", o.skip_verify, "emit the decomposition without verifying it");
  bg->callback(dispatch(run_brianchon_gram));

  // Subcommand callbacks run inside parse(), so the whole dispatch funnels
  // through one error trap.
  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    g_format = o.format;
    emit_error("input", e.what());
    return 2;
  } catch (const coxval::input_error& e) {
    g_format = o.format;
    emit_error("input", e.what());
    return 2;
  } catch (const coxval::capacity_error& e) {
    g_format = o.format;
    emit_error("capacity", e.what());
    return 1;
  } catch (const coxval::domain_error& e) {
    g_format = o.format;
    emit_error("domain", e.what());
    return 1;
  } catch (const coxval::consistency_error& e) {
    g_format = o.format;
    emit_error("internal", e.what());
    return 1;
  } catch (const std::exception& e) {
    g_format = o.format;
    emit_error("internal", e.what());
    return 1;
  }
}
