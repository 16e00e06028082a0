#include "selfsim/semigroup.hpp"

namespace selfsim {

STriple::STriple(const SelfSimilarAction& act, Path alpha, GroupElem g, Path beta)
    : zero_(false), alpha_(std::move(alpha)), g_(std::move(g)), beta_(std::move(beta)) {
  const Graph& G = act.graph();
  if (!act.group().contains(g_))
    throw CompositionError("group element outside the group");
  VertexId moved = act.act(g_, beta_.source());
  if (alpha_.source() != moved)
    throw CompositionError("invalid triple: s(alpha) = " + G.vertex_name(alpha_.source()) +
                           " but g.s(beta) = " + G.vertex_name(moved));
}

STriple STriple::unchecked(Path alpha, GroupElem g, Path beta) {
  STriple t;
  t.zero_ = false;
  t.alpha_ = std::move(alpha);
  t.g_ = std::move(g);
  t.beta_ = std::move(beta);
  return t;
}

bool TermOrder::operator()(const STriple& a, const STriple& b) const {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.beta().length() != b.beta().length()) return a.beta().length() < b.beta().length();
  if (auto c = a.beta() <=> b.beta(); c != 0) return c < 0;
  if (auto c = a.alpha() <=> b.alpha(); c != 0) return c < 0;
  return a.g() < b.g();
}

STriple s_mul(const SelfSimilarAction& act, const STriple& s, const STriple& t) {
  if (s.is_zero() || t.is_zero()) return STriple::zero();
  const Graph& G = act.graph();
  const Group& grp = act.group();
  const Path& beta = s.beta();
  const Path& gamma = t.alpha();
  if (beta.is_prefix_of(gamma)) {
    // gamma = beta.eps: (alpha (g.eps), phi(g, eps) h, delta)
    Path eps = G.suffix_after(gamma, beta.length());
    auto [geps, phi] = act.act_path(s.g(), eps);
    return STriple::unchecked(G.concat(s.alpha(), geps), grp.mul(phi, t.g()), t.beta());
  }
  if (gamma.is_prefix_of(beta)) {
    // beta = gamma.eps: (alpha, g phi(h^-1, eps)^-1, delta (h^-1.eps))
    Path eps = G.suffix_after(beta, gamma.length());
    auto [heps, phi] = act.act_path(grp.inverse(t.g()), eps);
    return STriple::unchecked(s.alpha(), grp.mul(s.g(), grp.inverse(phi)), G.concat(t.beta(), heps));
  }
  return STriple::zero();
}

STriple s_star(const SelfSimilarAction& act, const STriple& s) {
  if (s.is_zero()) return s;
  return STriple::unchecked(s.beta(), act.group().inverse(s.g()), s.alpha());
}

bool s_leq(const SelfSimilarAction& act, const STriple& s, const STriple& t) {
  return s == s_mul(act, t, s_mul(act, s_star(act, s), s));
}

bool s_is_idempotent(const SelfSimilarAction& act, const STriple& s) {
  return s == s_mul(act, s, s);
}

std::string format_triple(const SelfSimilarAction& act, const STriple& s) {
  if (s.is_zero()) return "0";
  const Graph& G = act.graph();
  return "(" + G.format(s.alpha()) + ", " + act.group().format(s.g()) + ", " + G.format(s.beta()) + ")";
}

}  // namespace selfsim
