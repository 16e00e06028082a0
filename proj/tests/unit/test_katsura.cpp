#include <doctest.h>

#include "suites.hpp"

#include "selfsim/error.hpp"
#include "selfsim/hausdorff.hpp"
#include "selfsim/katsura.hpp"

using namespace selfsim;
using namespace selfsim::testing;

namespace {

// Minimal strongly fixed paths of length < max_len by exhaustive enumeration.
std::vector<Path> brute_minimal(const SelfSimilarAction& act, VertexId v, const GroupElem& l, std::size_t max_len) {
  const Graph& G = act.graph();
  std::vector<Path> out;
  for (std::size_t n = 1; n < max_len; ++n)
    for (const Path& p : G.extend_paths(v, n)) {
      if (!act.strongly_fixes(l, p)) continue;
      bool minimal = true;
      for (std::size_t k = 1; k < n && minimal; ++k) minimal = !act.strongly_fixes(l, G.prefix(p, k));
      if (minimal) out.push_back(p);
    }
  return out;
}

KatsuraSpec random_spec(Gen& gen) {
  KatsuraSpec s;
  s.N = static_cast<std::size_t>(gen.between(1, 3));
  s.A.assign(s.N, std::vector<BigInt>(s.N, 0));
  s.B = s.A;
  for (std::size_t i = 0; i < s.N; ++i) {
    for (std::size_t j = 0; j < s.N; ++j) {
      s.A[i][j] = gen.between(0, 2);
      s.B[i][j] = gen.between(-2, 2);
    }
    if (std::all_of(s.A[i].begin(), s.A[i].end(), [](const BigInt& x) { return x == 0; }))
      s.A[i][static_cast<std::size_t>(gen.between(0, static_cast<long>(s.N) - 1))] = 1;
  }
  return s;
}

}  // namespace

TEST_CASE("the infinite family at u with l = 1") {
  auto spec = load_fixture("loop_exit");
  const auto& act = *spec.action;
  const Graph& G = act.graph();
  FixedPathVerdict v = minimal_fixed_paths(act, G.vertex_by_name("u"), 1, 6);
  REQUIRE(v.kind == FixedPathVerdict::Kind::Infinite);
  std::vector<std::string> names;
  for (const auto& p : v.paths) names.push_back(G.format(p));
  CHECK(names == std::vector<std::string>{"f", "e.f", "e.e.f", "e.e.e.f", "e.e.e.e.f"});
  REQUIRE(v.family);
  CHECK(G.format(v.family->cycle) == "e");
  CHECK(G.format(v.family->exit) == "f");
}

TEST_CASE("k_sequence") {
  auto spec = load_fixture("finite_units");
  const auto& act = *spec.action;
  const Graph& G = act.graph();
  Path p = G.path({"e_u_v_0", "e_v_v'_0"});
  auto k = k_sequence(act, p, 2);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == Rational(1));  // 2 * 1 / 2
  CHECK(k[1] == 0);
  CHECK_THROWS_AS(k_sequence(act, p, 0), Error);
  CHECK_THROWS_AS(k_sequence(act, Path::vertex(G.vertex_by_name("u")), 1), Error);
}

TEST_CASE("listing agrees with exhaustive enumeration on random matrices") {
  Gen gen(2024);
  for (int trial = 0; trial < 60; ++trial) {
    KatsuraSpec s = random_spec(gen);
    auto act = build_triple(s);
    const Graph& G = act->graph();
    if (G.num_edges() > 6) continue;
    for (auto v : G.vertices())
      for (long l : {-2L, -1L, 1L, 2L, 3L}) {
        const std::size_t L = 6;
        FixedPathVerdict fp = minimal_fixed_paths(*act, v, l, L);
        auto brute = brute_minimal(*act, v, GroupElem(static_cast<long long>(l)), L);
        std::sort(brute.begin(), brute.end(), [](const Path& a, const Path& b) {
          return a.length() != b.length() ? a.length() < b.length() : a < b;
        });
        CHECK(fp.paths == brute);
        if (fp.family) {
          for (std::size_t k = fp.family->k_min; k < fp.family->k_min + 5; ++k) {
            Path m = family_member(G, *fp.family, k);
            auto bm = brute_minimal(*act, v, GroupElem(static_cast<long long>(l)), m.length() + 1);
            CHECK(std::find(bm.begin(), bm.end(), m) != bm.end());
          }
        }
        if (fp.kind == FixedPathVerdict::Kind::Finite) {
          // Nothing appears between L and 2L.
          auto longer = brute_minimal(*act, v, GroupElem(static_cast<long long>(l)), L + 4);
          CHECK(longer.size() == brute.size());
        }
      }
  }
}

TEST_CASE("hausdorff verdicts") {
  auto run = [](const char* name) { return decide_hausdorff(*load_fixture(name).action); };
  auto v41 = run("loop_exit");
  CHECK(v41.kind == HausdorffVerdict::Kind::NonHausdorff);
  CHECK(v41.g->value() == 1);
  CHECK(run("b_eq_a").kind == HausdorffVerdict::Kind::Hausdorff);
  CHECK(run("finite_units").kind == HausdorffVerdict::Kind::NonHausdorff);
  CHECK(run("c2swap").kind == HausdorffVerdict::Kind::Hausdorff);
  CHECK(run("c2_nonhausdorff").kind == HausdorffVerdict::Kind::NonHausdorff);
  CHECK(run("odometer").kind == HausdorffVerdict::Kind::Unknown);
}

TEST_CASE("structural check: a cycle with p-adically shrinking ratio") {
  // One vertex, A = 2, B = 1: K halves each step, so only finitely many paths stay integral.
  KatsuraSpec s{1, {{2}}, {{1}}, {"v"}};
  auto act = build_triple(s);
  CHECK(decide_hausdorff(*act).kind == HausdorffVerdict::Kind::Hausdorff);
  // Add a second vertex reached through a B-zero edge.
  KatsuraSpec t{2, {{2, 1}, {0, 1}}, {{1, 0}, {0, 1}}, {"v", "w"}};
  auto act2 = build_triple(t);
  auto h = decide_hausdorff(*act2);
  CHECK(h.kind == HausdorffVerdict::Kind::Hausdorff);
}

TEST_CASE("Katsura family relations") {
  for (const char* name : {"loop_exit", "finite_units", "b_eq_a"}) {
    auto spec = load_fixture(name);
    Algebra alg(spec.action, Ring::integers());
    ValidationReport r = katsura_family_check(alg, 2);
    INFO(name);
    for (const auto& v : r.violations) INFO(v.message);
    CHECK(r.ok());
  }
}

TEST_CASE("spec validation") {
  KatsuraSpec zero_row{2, {{1, 0}, {0, 0}}, {{0, 0}, {0, 0}}, {}};
  CHECK(validate_katsura_spec(zero_row).mentions("zero row"));
  KatsuraSpec neg{1, {{-1}}, {{0}}, {}};
  CHECK_FALSE(validate_katsura_spec(neg).ok());
  CHECK_THROWS_AS(build_triple(zero_row), SemanticError);
}
