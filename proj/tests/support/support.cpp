#include "support.hpp"

#include "selfsim/error.hpp"
#include "selfsim/germ.hpp"

#include <stdexcept>
#include <set>

#ifndef SELFSIM_SPEC_DIR
#error "SELFSIM_SPEC_DIR must point at specs/"
#endif

namespace selfsim::testing {

cli::SpecFile load_fixture(const std::string& name) {
  return cli::load_spec(std::string(SELFSIM_SPEC_DIR) + "/" + name + ".spec");
}

std::vector<std::string> fixture_names() {
  return {"loop_exit", "finite_units", "b_eq_a", "c2swap", "c2_nonhausdorff", "odometer"};
}

long Gen::between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

GroupElem Gen::group_elem(const Group& grp, long z_range) {
  if (grp.is_integers()) return GroupElem(static_cast<long long>(between(-z_range, z_range)));
  return pick(grp.elements());
}

VertexId Gen::vertex(const Graph& g) {
  return VertexId{static_cast<std::uint32_t>(between(0, static_cast<long>(g.num_vertices()) - 1))};
}

Path Gen::path_from(const Graph& g, VertexId v, std::size_t len) {
  std::vector<EdgeId> es;
  VertexId cur = v;
  for (std::size_t i = 0; i < len; ++i) {
    auto in = g.edges_into(cur);
    EdgeId e = in[static_cast<std::size_t>(between(0, static_cast<long>(in.size()) - 1))];
    es.push_back(e);
    cur = g.source(e);
  }
  return es.empty() ? Path::vertex(v) : g.path(es);
}

Path Gen::path(const Graph& g, std::size_t max_len) {
  return path_from(g, vertex(g), static_cast<std::size_t>(between(0, static_cast<long>(max_len))));
}

STriple Gen::triple(const SelfSimilarAction& act, std::size_t max_len, long z_range) {
  const Graph& G = act.graph();
  GroupElem g = group_elem(act.group(), z_range);
  Path beta = path(G, max_len);
  // s(alpha) = g.s(beta): walk alpha backwards from that vertex by reversing a forward walk.
  VertexId target = act.act(g, beta.source());
  std::size_t len = static_cast<std::size_t>(between(0, static_cast<long>(max_len)));
  for (int attempt = 0; attempt < 64; ++attempt) {
    Path a = path(G, len);
    if (a.source() == target) return STriple(act, a, g, beta);
  }
  return STriple(act, Path::vertex(target), g, beta);
}

STriple Gen::triple_of_degree(const SelfSimilarAction& act, long degree, std::size_t max_beta,
                              long z_range) {
  const Graph& G = act.graph();
  for (int attempt = 0; attempt < 256; ++attempt) {
    long lo = std::max(0L, -degree);
    long bl = between(lo, std::max(lo, static_cast<long>(max_beta)));
    long al = bl + degree;
    GroupElem g = group_elem(act.group(), z_range);
    Path beta = path_from(G, vertex(G), static_cast<std::size_t>(bl));
    VertexId target = act.act(g, beta.source());
    for (int k = 0; k < 64; ++k) {
      Path a = path_from(G, vertex(G), static_cast<std::size_t>(al));
      if (a.source() == target) return STriple(act, a, g, beta);
    }
  }
  throw Error("no triple of degree " + std::to_string(degree));
}

Element Gen::element(const Algebra& alg, std::size_t terms, std::size_t max_len, long coeff, long z_range) {
  Element out = alg.zero();
  for (std::size_t i = 0; i < terms; ++i) {
    long c = between(-coeff, coeff);
    if (c == 0) c = 1;
    out += alg.term(triple(alg.action(), max_len, z_range), alg.ring().normalize(c));
  }
  return out;
}

Graph Gen::graph(std::size_t max_v, std::size_t max_e) {
  std::size_t nv = static_cast<std::size_t>(between(1, static_cast<long>(max_v)));
  std::size_t ne = static_cast<std::size_t>(between(static_cast<long>(nv), static_cast<long>(std::max(nv, max_e))));
  Graph g;
  for (std::size_t i = 0; i < nv; ++i) g.add_vertex("v" + std::to_string(i));
  auto rv = [&] { return VertexId{static_cast<std::uint32_t>(between(0, static_cast<long>(nv) - 1))}; };
  // One edge into every vertex, then the rest at random.
  for (std::size_t i = 0; i < ne; ++i) {
    VertexId r = i < nv ? VertexId{static_cast<std::uint32_t>(i)} : rv();
    g.add_edge("e" + std::to_string(i), r, rv());
  }
  return g;
}

// Leavitt oracle

LeavittOracle::Word LeavittOracle::monomial(const Path& alpha, const Path& beta) const {
  Word w;
  if (alpha.is_vertex() && beta.is_vertex()) return {{Letter::P, alpha.range().index}};
  for (EdgeId e : alpha.edges()) w.push_back({Letter::X, e.index});
  for (auto it = beta.edges().rbegin(); it != beta.edges().rend(); ++it) w.push_back({Letter::Y, it->index});
  if (alpha.is_vertex()) w.insert(w.begin(), {Letter::P, alpha.range().index});
  if (beta.is_vertex()) w.push_back({Letter::P, beta.range().index});
  return w;
}

std::optional<LeavittOracle::Word> LeavittOracle::reduce_word(const Word& w) const {
  return reduce_concat(w, {});
}

std::optional<LeavittOracle::Word> LeavittOracle::reduce_concat(const Word& w1, const Word& w2) const {
  auto src = [&](std::uint32_t e) { return g_.source(EdgeId{e}).index; };
  auto rng = [&](std::uint32_t e) { return g_.range(EdgeId{e}).index; };
  // Left-to-right with a stack; a merged letter may merge again with the top.
  Word out;
  out.reserve(w1.size() + w2.size());
  for (std::size_t k = 0; k < w1.size() + w2.size(); ++k) {
    Letter b = k < w1.size() ? w1[k] : w2[k - w1.size()];
    for (;;) {
      if (out.empty()) {
        out.push_back(b);
        break;
      }
      Letter a = out.back();
      std::optional<Letter> merged;
      bool zero = false;
      if (a.kind == Letter::P && b.kind == Letter::P) {
        if (a.id != b.id) zero = true;
        else merged = a;
      } else if (a.kind == Letter::P && b.kind == Letter::X) {
        if (a.id != rng(b.id)) zero = true;
        else merged = b;
      } else if (a.kind == Letter::X && b.kind == Letter::P) {
        if (src(a.id) != b.id) zero = true;
        else merged = a;
      } else if (a.kind == Letter::P && b.kind == Letter::Y) {
        if (a.id != src(b.id)) zero = true;
        else merged = b;
      } else if (a.kind == Letter::Y && b.kind == Letter::P) {
        if (rng(a.id) != b.id) zero = true;
        else merged = a;
      } else if (a.kind == Letter::Y && b.kind == Letter::X) {
        if (a.id != b.id) zero = true;
        else merged = Letter{Letter::P, src(a.id)};
      } else if (a.kind == Letter::X && b.kind == Letter::X) {
        if (src(a.id) != rng(b.id)) zero = true;
      } else if (a.kind == Letter::Y && b.kind == Letter::Y) {
        // y_a y_b = y_a p_r(a) p_s(b) y_b
        if (rng(a.id) != src(b.id)) zero = true;
      } else if (a.kind == Letter::X && b.kind == Letter::Y) {
        // x_a y_b = x_a p_s(a) p_s(b) y_b
        if (src(a.id) != src(b.id)) zero = true;
      }
      if (zero) return std::nullopt;
      if (!merged) {
        out.push_back(b);
        break;
      }
      out.pop_back();
      b = *merged;
    }
  }
  return out;
}

std::optional<LeavittOracle::Word> LeavittOracle::multiply_words(const Word& a, const Word& b) const {
  return reduce_concat(a, b);
}

LeavittOracle::Poly LeavittOracle::reduce(const Word& w) const {
  auto r = reduce_word(w);
  if (!r) return {};
  return {{std::move(*r), 1L}};
}

LeavittOracle::Poly LeavittOracle::multiply(const Poly& a, const Poly& b) const {
  Poly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      auto w = multiply_words(wa, wb);
      if (!w) continue;
      if ((out[*w] += ca * cb) == 0) out.erase(*w);
    }
  return out;
}

LeavittOracle::Poly LeavittOracle::from_element(const Element& a) const {
  Poly out;
  for (const auto& [t, c] : a.terms()) {
    if (boost::multiprecision::denominator(c) != 1) throw std::domain_error("non-integer coefficient");
    const long ci = boost::multiprecision::numerator(c).convert_to<long>();
    for (const auto& [w, k] : reduce(monomial(t.alpha(), t.beta()))) {
      out[w] += ci * k;
      if (out[w] == 0) out.erase(w);
    }
  }
  return out;
}

// Convolution oracle

EvPath act_triple(const SelfSimilarAction& act, const STriple& t, const EvPath& x) {
  const Graph& G = act.graph();
  EvPath z = x.drop(G, t.beta().length());
  auto gz = z.act(act, t.g());
  if (!gz) throw EvaluationUndecided("cocycle does not recur while acting on " + x.format(G));
  return gz->prepend(G, t.alpha());
}

Rational convolve_at(const SteinbergFn& F, const SteinbergFn& Gf, const GermPoint& p) {
  const SelfSimilarAction& act = F.algebra().action();
  // Distinct germs [t, x] over the terms of G.
  std::vector<STriple> etas;
  for (const auto& [t, c] : Gf.terms()) {
    if (!p.x.in_cylinder(t.beta())) continue;
    bool seen = false;
    for (const auto& u : etas)
      if (germ_eq(act, u, t, p.x).equal()) {
        seen = true;
        break;
      }
    if (!seen) etas.push_back(t);
  }
  Rational total = 0;
  for (const auto& t : etas) {
    Rational gv = fn_eval(Gf, make_germ(act, t, p.x));
    if (gv == 0) continue;
    // gamma eta^-1 = [s t^*, t.x]; composable germs make s t^* nonzero at t.x.
    STriple lhs = s_mul(act, p.s, s_star(act, t));
    EvPath tx = act_triple(act, t, p.x);
    if (lhs.is_zero() || !tx.in_cylinder(lhs.beta()))
      throw std::logic_error("composable germs gave an empty product");
    total += fn_eval(F, make_germ(act, lhs, tx)) * gv;
  }
  return total;
}

}  // namespace selfsim::testing
