#include <doctest.h>

#include "suites.hpp"

#include "selfsim/cli/commands.hpp"
#include "selfsim/cli/expr.hpp"
#include "selfsim/cli/spec_file.hpp"
#include "selfsim/error.hpp"
#include "selfsim/zero.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

using namespace selfsim;
using namespace selfsim::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec_path(const std::string& name) { return std::string(SELFSIM_SPEC_DIR) + "/" + name + ".spec"; }

template <class E>
E expect_throw(const std::string& text) {
  try {
    cli::parse_spec(text);
  } catch (const E& e) {
    return e;
  } catch (const std::exception& e) {
    FAIL("unexpected exception: " << e.what());
  }
  FAIL("no exception for: " << text);
  throw;
}

}  // namespace

TEST_CASE("duplicate vertex is reported at the second declaration") {
  auto e = expect_throw<SemanticError>("graph\n  vertex u\n  vertex u\n");
  CHECK(e.line() == 3);
  CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
}

TEST_CASE("Z action without a generator table") {
  auto e = expect_throw<SemanticError>(
      "graph\n  vertex v\n  edge x v v\ngroup Z\naction gen -1\n  vertex v -> v\n  edge x -> x cocycle 0\n");
  CHECK(std::string(e.what()).find("gen 1") != std::string::npos);
}

TEST_CASE("syntax errors carry line and column") {
  auto e = expect_throw<ParseError>("graph\n  vertex u\n  edge e u\n");
  CHECK(e.line() == 3);
  CHECK(e.column() > 0);
}

TEST_CASE("broken cocycle identity is rejected") {
  // a sends both loops to y, so it is not a bijection on edges.
  CHECK_THROWS(cli::parse_spec(
      "graph\n  vertex u\n  edge x u u\n  edge y u u\ngroup finite\n  elem e a\n"
      "  mul e e = e\n  mul e a = a\n  mul a e = a\n  mul a a = e\n"
      "action a\n  vertex u -> u\n  edge x -> y cocycle e\n  edge y -> y cocycle e\n"));
}

TEST_CASE("every shipped fixture validates") {
  for (const auto& name : fixture_names()) {
    Run r = run({"validate", spec_path(name)});
    INFO(name << ": " << r.out << r.err);
    CHECK(r.code == cli::kExitOk);
  }
}

TEST_CASE("expression print and parse round-trip") {
  for (const auto& name : fixture_names()) {
    auto spec = load_fixture(name);
    Algebra alg(spec.action, Ring::rationals());
    Gen gen(77);
    for (int i = 0; i < 40; ++i) {
      Element a = gen.element(alg, 3, 3, 3, 2);
      std::string text = cli::print_expr(alg, a);
      Element b = cli::parse_expr(alg, text);
      INFO(name << ": " << text);
      CHECK(a == b);
    }
  }
}

TEST_CASE("expression errors point at the offending token") {
  auto spec = load_fixture("loop_exit");
  Algebra alg(spec.action, Ring::integers());
  try {
    cli::parse_expr(alg, "s(e.g,0)");
    FAIL("expected an error");
  } catch (const SemanticError& e) {
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(cli::parse_expr(alg, "p(u,0) +"), ParseError);
  CHECK_THROWS_AS(cli::parse_expr(alg, "p(nowhere,0)"), SemanticError);
}

TEST_CASE("germ literal round-trip") {
  auto spec = load_fixture("loop_exit");
  const auto& act = *spec.action;
  GermPoint p = cli::parse_germ(act, "[(u, 0, u), (e)^inf]");
  CHECK(format_germ(act, p) == "[(u, 0, u), (e)^inf]");
  GermPoint q = cli::parse_germ(act, format_germ(act, p));
  CHECK(format_germ(act, q) == format_germ(act, p));
  // The relative form appends mu (rho)^inf to beta.
  GermPoint r = cli::parse_germ(act, "germ (e, 0, e) : (e)^inf");
  CHECK(format_germ(act, r) == "[(e, 0, e), (e)^inf]");
  GermPoint t = cli::parse_germ(act, "germ (u, 1, u) : e.f (g)^inf");
  CHECK(t.x == EvPath::make(act.graph(), act.graph().path({"e", "f"}), act.graph().path({"g"})));
  CHECK_THROWS_AS(cli::parse_germ(act, "germ (u, 0, u), (e)^inf"), ParseError);
}

TEST_CASE("hausdorff and fixed-paths on the loop-and-exit instance") {
  Run h = run({"hausdorff", spec_path("loop_exit")});
  CHECK(h.code == cli::kExitOk);
  CHECK(h.out.rfind("NonHausdorff: l=1 vertex=u", 0) == 0);
  Run he = run({"hausdorff", spec_path("loop_exit"), "--expect", "hausdorff"});
  CHECK(he.code == cli::kExitExpectation);
  Run hb = run({"hausdorff", spec_path("b_eq_a"), "--expect", "hausdorff"});
  CHECK(hb.code == cli::kExitOk);

  Run f = run({"fixed-paths", spec_path("loop_exit"), "--vertex", "u", "--g", "1", "--max-len", "6"});
  CHECK(f.code == cli::kExitOk);
  CHECK(f.out.find("  f\n  e.f\n  e.e.f\n  e.e.e.f\n  e.e.e.e.f\n") != std::string::npos);
  CHECK(f.out.find("cycle e, exit f") != std::string::npos);
}

TEST_CASE("equal, eval and grade") {
  Run eq = run({"equal", spec_path("finite_units"), "--lhs", "p(u,0)+2*p(u,1)+p(u,2)", "--rhs",
                "p(u,3)+2*p(u,4)+p(u,5)", "--expect", "zero"});
  CHECK(eq.code == cli::kExitOk);
  CHECK(eq.out.rfind("Equal", 0) == 0);

  Run ne = run({"equal", spec_path("loop_exit"), "--lhs", "p(u,0)", "--rhs", "p(u,1)", "--expect", "zero"});
  CHECK(ne.code == cli::kExitExpectation);
  CHECK(ne.out.rfind("NotEqual", 0) == 0);

  Run ev = run({"eval", spec_path("loop_exit"), "--expr", "p(u,0)", "--germ", "[(u, 0, u), (e)^inf]"});
  CHECK(ev.code == cli::kExitOk);
  CHECK(ev.out == "1\n");

  Run gr = run({"grade", spec_path("loop_exit"), "--expr", "s(e,1)*adj(s(f,0))"});
  CHECK(gr.code == cli::kExitOk);
  CHECK(gr.out.rfind("homogeneous, degree 0", 0) == 0);

  Run mixed = run({"grade", spec_path("loop_exit"), "--expr", "s(e,0) + p(u,0)"});
  CHECK(mixed.code == cli::kExitOk);
  CHECK(mixed.out.find("degree 1") != std::string::npos);
  CHECK(mixed.out.find("degree 0") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == cli::kExitInput);
  CHECK(run({"hausdorff", "/nonexistent.spec"}).code == cli::kExitInput);
  Run bad = run({"eval", spec_path("loop_exit"), "--expr", "s(e.g,0)", "--germ", "[(u, 0, u), (e)^inf]"});
  CHECK(bad.code == cli::kExitInput);
  CHECK(bad.err.find("line 1, column 3") != std::string::npos);
}

TEST_CASE("JSON output is stable and well formed") {
  std::vector<std::string> args{"hausdorff", spec_path("loop_exit"), "--format", "json"};
  Run a = run(args);
  Run b = run(args);
  CHECK(a.out == b.out);
  auto j = nlohmann::ordered_json::parse(a.out);
  CHECK(j.begin().key() == "command");
  CHECK(j["command"] == "hausdorff");
  CHECK(j["exit_code"] == 0);
  for (const auto& name : fixture_names()) {
    Run d = run({"--format", "json", "diagonal", spec_path(name)});
    INFO(name << d.err);
    CHECK(nlohmann::ordered_json::accept(d.out));
  }
}

TEST_CASE("the installed binary behaves like run_command") {
  const char* bin = std::getenv("SELFSIM_BIN");
  if (!bin) return;
  std::string cmd = std::string(bin) + " hausdorff " + spec_path("b_eq_a") + " --expect hausdorff";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[256];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(out == run({"hausdorff", spec_path("b_eq_a"), "--expect", "hausdorff"}).out);
}
