#include "selfsim/steinberg.hpp"

#include <set>

namespace selfsim {

SteinbergFn pi_map(const Element& a) { return SteinbergFn(a); }

SteinbergFn indicator(const Algebra& alg, const STriple& s, const Rational& c) {
  return SteinbergFn(alg.term(s, c));
}

Rational fn_eval(const SteinbergFn& f, const GermPoint& p, const GermOptions& opt) {
  const Algebra& alg = f.algebra();
  const SelfSimilarAction& act = alg.action();
  Rational total = 0;
  for (const auto& [t, c] : f.terms()) {
    if (!p.x.in_cylinder(t.beta())) continue;
    GermComparison cmp = germ_eq(act, p.s, t, p.x, opt);
    if (cmp.kind == GermComparison::Kind::Unknown)
      throw EvaluationUndecided("germ comparison undecided for term " + format_triple(act, t) +
                                " at " + format_germ(act, p) + ": " + cmp.certificate);
    if (cmp.equal()) total = alg.ring().add(total, c);
  }
  return total;
}

std::vector<EvPath> cylinder_test_points(const Graph& g, const Path& beta, std::size_t depth,
                                         std::size_t max_points) {
  std::vector<EvPath> out;
  std::set<EvPath> seen;
  std::vector<std::vector<Path>> cycles(g.num_vertices());
  std::vector<bool> have(g.num_vertices(), false);
  for (std::size_t k = 0; k < depth && out.size() < max_points; ++k) {
    for (const Path& mu : g.extend_paths(beta.source(), k)) {
      VertexId b = mu.source();
      if (!have[b.index]) {
        cycles[b.index] = simple_cycles_at(g, b, depth);
        have[b.index] = true;
      }
      Path head = g.concat(beta, mu);
      for (const Path& rho : cycles[b.index]) {
        if (rho.length() + k > depth) continue;
        EvPath x = EvPath::make(g, head, rho);
        if (seen.insert(x).second) out.push_back(std::move(x));
        if (out.size() >= max_points) return out;
      }
    }
  }
  return out;
}

std::vector<GermPoint> germ_test_set(const SteinbergFn& f, std::size_t depth,
                                     std::size_t max_points) {
  const Graph& g = f.algebra().graph();
  std::vector<GermPoint> out;
  std::set<std::pair<std::size_t, EvPath>> seen;  // (term index, point)
  std::size_t idx = 0;
  for (const auto& [t, c] : f.terms()) {
    for (EvPath& x : cylinder_test_points(g, t.beta(), depth, max_points)) {
      if (out.size() >= max_points) return out;
      if (seen.emplace(idx, x).second) out.push_back({t, std::move(x)});
    }
    ++idx;
  }
  return out;
}

}  // namespace selfsim
