// End-to-end tests of the coxval binary: example invocations, schema round
// trips, byte determinism, and the exit-code contract. The binary path
// arrives as the first command-line argument.

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "coxval/invariants.hpp"
#include "coxval/json_io.hpp"

namespace {

std::string g_cli;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string write_fixture(const std::string& name, const std::string& text) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "coxval_cli_fixtures";
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / name;
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
  out.close();
  return path.string();
}

coxval::Json parsed(const CliResult& r) { return coxval::parse_json_text(r.out); }

const char* kFullA21 =
    R"({"root_system":{"type":"A","rank":2},"I":[1],)"
    R"("bases":[{"word":[]},{"word":[2]},{"word":[1,2]}]})";

const char* kPairA21 =
    R"({"root_system":{"type":"A","rank":2},"I":[1],"bases":[{"word":[]},{"word":[2]}]})";

const char* kSquareB2 =
    R"({"root_system":{"type":"B","rank":2},"I":[1],)"
    R"("bases":[{"word":[]},{"word":[2]},{"word":[1,2]},{"word":[2,1,2]}]})";

}  // namespace

TEST_CASE("group enumerates W(A2) with lengths") {
  const CliResult r = run_cli("group --type A --rank 2");
  CHECK(r.exit_code == 0);
  const coxval::Json doc = parsed(r);
  CHECK(doc["order"] == 6);
  CHECK(doc["root_system"]["type"] == "A");
  REQUIRE(doc["elements"].size() == 6);
  std::vector<int> lengths;
  for (const auto& e : doc["elements"]) lengths.push_back(e["length"].get<int>());
  CHECK(lengths == std::vector<int>{0, 1, 1, 2, 2, 3});
  CHECK(doc["elements"][0]["word"].empty());
  CHECK(doc["elements"][5]["word"] == coxval::Json::array({1, 2, 1}));
}

TEST_CASE("ginvariant of a whole quotient is |W| at the bottom coset") {
  const std::string path = write_fixture("full_a2_1.json", kFullA21);
  const CliResult r = run_cli("ginvariant -i " + path);
  CHECK(r.exit_code == 0);
  const coxval::Json doc = parsed(r);
  CHECK(doc["kind"] == "coset");
  REQUIRE(doc["terms"].size() == 1);
  CHECK(doc["terms"][0]["label"]["word"].empty());
  CHECK(doc["terms"][0]["coeff"] == "6");
}

TEST_CASE("stability reproduces the unstable and stable fixtures") {
  const CliResult unstable = run_cli("stability --type A --rank 3 --I \"\"");
  CHECK(unstable.exit_code == 0);
  const coxval::Json u = parsed(unstable);
  CHECK(u["stable"] == false);
  CHECK(u["witnesses"].size() > 0);
  CHECK(u["witnesses"][0].contains("base"));

  const CliResult stable = run_cli("stability --type A --rank 3 --I \"1,2\"");
  CHECK(stable.exit_code == 0);
  const coxval::Json s = parsed(stable);
  CHECK(s["stable"] == true);
  CHECK(s["witnesses"].empty());
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string path = write_fixture("pair_a2_1.json", kPairA21);
  const std::vector<std::string> commands = {
      "group --type B --rank 2",
      "ginvariant -i " + path,
      "gplus -i " + path,
      "schubert-matrix --type A --rank 2 --I \"1\"",
      "ginvariant -i " + path + " -o text",
      "brianchon-gram --json "
      "'{\"vertices\":[[\"0\",\"0\"],[\"1\",\"0\"],[\"0\",\"1\"]]}'",
  };
  for (const std::string& cmd : commands) {
    CAPTURE(cmd);
    const CliResult a = run_cli(cmd);
    const CliResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("both g-invariant methods print the same document") {
  const std::string path = write_fixture("pair_a2_1.json", kPairA21);
  const CliResult bruhat = run_cli("ginvariant -i " + path + " --method bruhat");
  const CliResult cones = run_cli("ginvariant -i " + path + " --method cones");
  CHECK(bruhat.exit_code == 0);
  CHECK(bruhat.out == cones.out);
}

TEST_CASE("matroid documents round-trip through the library") {
  const CliResult r = run_cli("schubert --type A --rank 2 --I \"1\" --word \"2\"");
  REQUIRE(r.exit_code == 0);
  const coxval::Json doc = parsed(r);
  const coxval::MatroidBundle bundle(doc);
  CHECK(coxval::matroid_to_json(bundle.matroid()) == doc);

  const std::string path = write_fixture("schubert_out.json", r.out);
  const CliResult check = run_cli("matroid-check -i " + path);
  CHECK(check.exit_code == 0);
  CHECK(parsed(check)["matroid"] == true);
}

TEST_CASE("formal sum documents round-trip through the library") {
  const std::string path = write_fixture("pair_a2_1.json", kPairA21);

  const CliResult ginv = run_cli("ginvariant -i " + path);
  REQUIRE(ginv.exit_code == 0);
  const coxval::Json gdoc = parsed(ginv);
  const coxval::WeylGroup g(coxval::json_to_root_system(gdoc["root_system"]));
  const coxval::ParabolicQuotient q(
      g, coxval::json_to_parabolic_set(gdoc["I"], g.roots()));
  CHECK(coxval::coset_sum_to_json(coxval::json_to_coset_sum(gdoc, q), q) == gdoc);

  const CliResult finv = run_cli("finvariant -i " + path);
  REQUIRE(finv.exit_code == 0);
  const coxval::Json fdoc = parsed(finv);
  CHECK(coxval::cone_sum_to_json(coxval::json_to_cone_sum(fdoc),
                                 coxval::json_to_root_system(fdoc["root_system"])) == fdoc);

  const CliResult gplus = run_cli("gplus -i " + path);
  REQUIRE(gplus.exit_code == 0);
  const coxval::Json pdoc = parsed(gplus);
  const coxval::RootSystem rs = coxval::json_to_root_system(pdoc["root_system"]);
  CHECK(coxval::orbit_sum_to_json(coxval::json_to_orbit_sum(pdoc, rs), rs) == pdoc);

  // The fan sweep of the pair hits 13 affine cones; the orbit grouping keeps
  // the total mass.
  coxval::Rational mass(0);
  for (const auto& t : pdoc["terms"])
    mass += coxval::Rational::parse(t["coeff"].get<std::string>());
  CHECK(mass == coxval::Rational(13));
}

TEST_CASE("polynomial documents round-trip through the library") {
  const std::string path = write_fixture("square_b2.json", kSquareB2);
  const CliResult r = run_cli("interlace -i " + path);
  REQUIRE(r.exit_code == 0);
  const coxval::Json doc = parsed(r);
  CHECK(coxval::polynomial_to_json(coxval::json_to_polynomial(doc)) == doc);
  CHECK(doc["terms"]["0"] == "4");  // the full square is the n = 2 cube, q = 2^n

  const CliResult via_g = run_cli("interlace -i " + path + " --method via-g");
  CHECK(via_g.exit_code == 0);
  CHECK(via_g.out == r.out);
}

TEST_CASE("brianchon-gram emits verified cone documents") {
  const CliResult r = run_cli(
      "brianchon-gram --json '{\"vertices\":[[\"0\",\"0\"],[\"1\",\"0\"],[\"0\",\"1\"]]}'");
  REQUIRE(r.exit_code == 0);
  const coxval::Json doc = parsed(r);
  CHECK(doc["verified"] == true);
  REQUIRE(doc["terms"].size() == 7);  // 3 vertices + 3 edges + the triangle
  coxval::Int alternating(0);
  for (const auto& t : doc["terms"]) {
    const coxval::AffineCone cone = coxval::json_to_cone(t["cone"]);
    CHECK(coxval::cone_to_json(cone) == t["cone"]);
    alternating += coxval::Int(t["coeff"].get<std::string>());
  }
  CHECK(alternating == 1);  // Euler relation for the face signs
}

TEST_CASE("subdivision-verify answers both questions") {
  const std::string doc = std::string(R"({"terms":[)") + R"({"coeff":"1","matroid":)" +
                          kFullA21 + R"(},{"coeff":"-1","matroid":)" + kFullA21 + "}]}";
  const std::string path = write_fixture("trivial_relation.json", doc);
  const CliResult r = run_cli("subdivision-verify -i " + path + " --invariant g");
  CHECK(r.exit_code == 0);
  const coxval::Json out = parsed(r);
  CHECK(out["relation"] == true);
  CHECK(out["invariant_zero"] == true);

  // Without --invariant and without a document key there is nothing to check.
  const CliResult missing = run_cli("subdivision-verify -i " + path);
  CHECK(missing.exit_code == 2);
}

TEST_CASE("text mode prints sums in canonical label order") {
  const std::string path = write_fixture("pair_a2_1.json", kPairA21);
  const CliResult g = run_cli("ginvariant -i " + path + " -o text");
  CHECK(g.exit_code == 0);
  CHECK(g.out == "4  U(e)\n2  U(s2)\n");

  const std::string square = write_fixture("square_b2.json", kSquareB2);
  const CliResult q = run_cli("interlace -i " + square + " -o text");
  CHECK(q.exit_code == 0);
  CHECK(q.out == "4\n");

  const std::string tri = write_fixture(
      "upper_triangle_b2.json",
      R"({"root_system":{"type":"B","rank":2},"I":[1],)"
      R"("bases":[{"word":[]},{"word":[2]},{"word":[1,2]}]})");
  const CliResult t = run_cli("interlace -i " + tri + " -o text");
  CHECK(t.exit_code == 0);
  CHECK(t.out == "3 + x\n");
}

TEST_CASE("stdin input matches file input") {
  const std::string path = write_fixture("pair_a2_1.json", kPairA21);
  const CliResult from_file = run_cli("decompose -i " + path);
  const CliResult from_stdin = run_cli("decompose -i - < " + path);
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.out == from_stdin.out);
}

TEST_CASE("exit codes follow the error taxonomy") {
  // Malformed input: exit 2, kind "input".
  const CliResult bad_json = run_cli("ginvariant --json '{oops'");
  CHECK(bad_json.exit_code == 2);
  CHECK(parsed(bad_json)["error"]["kind"] == "input");

  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("group --type A").exit_code == 2);
  CHECK(run_cli("group --type E --rank 8").exit_code == 2);
  CHECK(run_cli("group --type A --rank 77").exit_code == 2);
  CHECK(run_cli("ginvariant -i /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("ginvariant").exit_code == 2);  // no input at all

  const std::string pair = write_fixture("pair_a2_1.json", kPairA21);
  CHECK(run_cli("ginvariant -i " + pair + " --json '{}'").exit_code == 2);
  CHECK(run_cli("interlace -i " + pair).exit_code == 2);  // not a delta-matroid quotient

  // Structurally valid inputs the operation rejects: exit 1.
  const CliResult non_matroid = run_cli(
      R"(ginvariant --json '{"root_system":{"type":"A","rank":2},"I":[],)"
      R"("bases":[{"word":[]},{"word":[1,2]}]}')");
  CHECK(non_matroid.exit_code == 1);
  CHECK(parsed(non_matroid)["error"]["kind"] == "domain");

  const CliResult bad_edge = run_cli(
      R"(finvariant --json '{"root_system":{"type":"A","rank":2},)"
      R"("polytope":{"vertices":[["0","0","0"],["1","1","-2"]]}}')");
  CHECK(bad_edge.exit_code == 1);
  CHECK(parsed(bad_edge)["error"]["kind"] == "domain");

  const CliResult capacity = run_cli(
      R"(interlace --method via-g --json '{"root_system":{"type":"B","rank":4},)"
      R"("I":[1,2,3],"bases":[{"word":[]}]}')");
  CHECK(capacity.exit_code == 1);
  CHECK(parsed(capacity)["error"]["kind"] == "capacity");

  const CliResult matrix_capacity = run_cli("schubert-matrix --type B --rank 3 --I \"\"");
  CHECK(matrix_capacity.exit_code == 1);
  CHECK(parsed(matrix_capacity)["error"]["kind"] == "capacity");

  // A negative verdict is still a successful check.
  const CliResult verdict_no = run_cli(
      R"(matroid-check --json '{"root_system":{"type":"A","rank":2},"I":[],)"
      R"("bases":[{"word":[]},{"word":[1,2]}]}')");
  CHECK(verdict_no.exit_code == 0);
  CHECK(parsed(verdict_no)["matroid"] == false);

  // Text-mode errors stay on stdout with the same exit code.
  const CliResult text_err = run_cli("ginvariant --json '{oops' -o text");
  CHECK(text_err.exit_code == 2);
  CHECK(text_err.out.rfind("error (input):", 0) == 0);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-coxval-binary> [doctest args]\n");
    return 1;
  }
  g_cli = argv[1];
  std::vector<char*> rest;
  rest.push_back(argv[0]);
  for (int i = 2; i < argc; ++i) rest.push_back(argv[i]);
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
