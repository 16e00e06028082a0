#include "selfsim/germ.hpp"

#include <set>
#include <tuple>

namespace selfsim {

GermPoint make_germ(const SelfSimilarAction& act, const STriple& s, const EvPath& x) {
  if (s.is_zero()) throw CompositionError("germ of the zero triple");
  if (!x.in_cylinder(s.beta()))
    throw CompositionError("point " + x.format(act.graph()) + " is outside Z(" +
                           act.graph().format(s.beta()) + ")");
  return {s, x};
}

std::string format_germ(const SelfSimilarAction& act, const GermPoint& p) {
  return "[" + format_triple(act, p.s) + ", " + p.x.format(act.graph()) + "]";
}

namespace {

using Kind = GermComparison::Kind;

// alpha part and cocycle of s restricted to the prefix of x of length L.
std::pair<Path, GroupElem> restrict(const SelfSimilarAction& act, const STriple& s,
                                    const EvPath& x, std::size_t L) {
  const Graph& G = act.graph();
  Path eps = x.drop(G, s.beta().length()).prefix(G, L - s.beta().length());
  auto [img, h] = act.act_path(s.g(), eps);
  return {G.concat(s.alpha(), img), h};
}

// B/A ratio along the cycle for Katsura actions.
Rational cycle_ratio(const KatsuraData& k, const Path& cycle) {
  Rational r = 1;
  for (EdgeId e : cycle.edges()) {
    const auto& ke = k.edges[e.index];
    r *= Rational(k.spec.B[ke.i][ke.j], k.spec.A[ke.i][ke.j]);
  }
  return r;
}

}  // namespace

GermComparison germ_eq(const SelfSimilarAction& act, const STriple& s, const STriple& t,
                       const EvPath& x, const GermOptions& opt) {
  const Graph& G = act.graph();
  const Group& grp = act.group();
  if (s.is_zero() || t.is_zero()) throw CompositionError("germ of the zero triple");
  if (!x.in_cylinder(s.beta()) || !x.in_cylinder(t.beta()))
    throw CompositionError("point " + x.format(G) + " is outside a cylinder of the compared triples");
  if (s == t) return {Kind::Equal, 0, "identical triples"};
  if (s.degree() != t.degree()) return {Kind::NotEqual, 0, "degrees differ"};

  std::size_t p = std::max(s.beta().length(), t.beta().length());
  auto [as, a] = restrict(act, s, x, p);
  auto [at, b] = restrict(act, t, x, p);
  if (as != at) return {Kind::NotEqual, p, "ranges diverge: " + G.format(as) + " vs " + G.format(at)};

  const std::size_t T = x.transient().length();
  const std::size_t C = x.cycle().length();
  const KatsuraData* kat = grp.is_integers() ? act.katsura() : nullptr;
  std::optional<Rational> rho;
  std::set<BigInt> kat_seen;
  std::set<std::tuple<BigInt, BigInt, std::size_t>> seen;

  for (std::size_t steps = 0;; ++steps) {
    if (a == b) return {Kind::Equal, p, "cocycles agree after prefix of length " + std::to_string(p)};
    if (p >= T) {
      std::size_t q = (p - T) % C;
      if (kat) {
        if (q == 0) {
          BigInt d = b.value() - a.value();
          if (!rho) rho = cycle_ratio(*kat, x.cycle());
          if (*rho != 0 && is_integral(*rho))
            return {Kind::NotEqual, p, "cycle ratio " + to_string(*rho) + " keeps the difference nonzero"};
          if (!kat_seen.insert(d).second)
            return {Kind::NotEqual, p, "difference " + d.str() + " recurs at the cycle start"};
        }
      } else if (!seen.emplace(a.value(), b.value(), q).second) {
        return {Kind::NotEqual, p, "state (" + grp.format(a) + ", " + grp.format(b) +
                                        ") recurs at cycle position " + std::to_string(q)};
      }
    }
    if (grp.is_integers() && !kat) {
      if (steps >= opt.max_steps || boost::multiprecision::abs(a.value()) > opt.cocycle_cap ||
          boost::multiprecision::abs(b.value()) > opt.cocycle_cap)
        return {Kind::Unknown, p, "cocycle growth exceeded the configured cap"};
    } else if (steps >= 100 * opt.max_steps) {
      return {Kind::Unknown, p, "step bound exceeded"};
    }
    EdgeId e = x.edge_at(p);
    EdgeImage ia = act.act(a, e);
    EdgeImage ib = act.act(b, e);
    if (ia.edge != ib.edge)
      return {Kind::NotEqual, p + 1, "images of " + G.edge_name(e) + " differ"};
    a = std::move(ia.cocycle);
    b = std::move(ib.cocycle);
    ++p;
  }
}

}  // namespace selfsim
