#include "suites.hpp"

#include "selfsim/error.hpp"
#include "selfsim/zero.hpp"

#include <sstream>
#include <stdexcept>

namespace selfsim::testing {

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (samples.size() < 8) samples.push_back(what);
}

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << checks << " checks, " << failures << " failures";
  for (const auto& s : samples) os << "\n    " << s;
  return os.str();
}

namespace {

std::vector<GroupElem> sample_group(const Group& grp, long z_range) {
  if (grp.is_finite()) return grp.elements();
  std::vector<GroupElem> out;
  for (long k = -z_range; k <= z_range; ++k) out.emplace_back(static_cast<long long>(k));
  return out;
}

// Random path whose source is v (walks against edge direction).
std::optional<Path> path_with_source(const Graph& G, Gen& gen, VertexId v, std::size_t len) {
  std::vector<EdgeId> rev;
  VertexId cur = v;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<EdgeId> out;
    for (EdgeId e : G.edge_ids())
      if (G.source(e) == cur) out.push_back(e);
    if (out.empty()) return std::nullopt;
    EdgeId e = gen.pick(out);
    rev.push_back(e);
    cur = G.range(e);
  }
  if (rev.empty()) return Path::vertex(v);
  return G.path(std::vector<EdgeId>(rev.rbegin(), rev.rend()));
}

// A triple whose alpha extends or is a prefix of beta(s), so s t is usually nonzero.
STriple compatible_with(const SelfSimilarAction& act, Gen& gen, const STriple& s, std::size_t max_len) {
  const Graph& G = act.graph();
  Path alpha = s.beta();
  if (gen.coin() && alpha.length() > 0) {
    alpha = G.prefix(alpha, static_cast<std::size_t>(gen.between(0, static_cast<long>(alpha.length()))));
  } else {
    Path ext = gen.path_from(G, alpha.source(), static_cast<std::size_t>(gen.between(0, 2)));
    alpha = G.concat(alpha, ext);
  }
  GroupElem g = gen.group_elem(act.group());
  VertexId want = act.act(act.group().inverse(g), alpha.source());
  for (int k = 0; k < 16; ++k) {
    auto beta = path_with_source(G, gen, want, static_cast<std::size_t>(gen.between(0, static_cast<long>(max_len))));
    if (beta) return STriple(act, alpha, g, *beta);
  }
  return STriple(act, alpha, g, Path::vertex(want));
}

}  // namespace

SuiteResult cocycle_identities(const SelfSimilarAction& act, Gen& gen, std::size_t samples, std::size_t max_len) {
  const Graph& G = act.graph();
  const Group& grp = act.group();
  SuiteResult r;
  for (std::size_t i = 0; i < samples; ++i) {
    GroupElem g = gen.group_elem(grp, 6), h = gen.group_elem(grp, 6);
    std::size_t la = static_cast<std::size_t>(gen.between(0, static_cast<long>(max_len)));
    Path a = gen.path(G, la);
    Path b = gen.path_from(G, a.source(), static_cast<std::size_t>(gen.between(0, static_cast<long>(max_len - a.length()))));
    VertexId x = gen.vertex(G);
    std::string tag = " g=" + grp.format(g) + " h=" + grp.format(h) + " a=" + G.format(a) + " b=" + G.format(b);

    auto [ga, phi_ga] = act.act_path(g, a);
    auto [ha, phi_ha] = act.act_path(h, a);
    GroupElem gh = grp.mul(g, h);
    r.check(ga.length() == a.length(), "length preserved" + tag);
    r.check(act.act_on(gh, a) == act.act_on(g, ha), "action law" + tag);
    r.check(act.cocycle(gh, a) == grp.mul(act.cocycle(g, ha), phi_ha), "cocycle law" + tag);
    r.check(grp.is_identity(act.cocycle(grp.identity(), a)), "cocycle at identity" + tag);
    r.check(act.cocycle(g, Path::vertex(x)) == g, "cocycle on a vertex" + tag);
    r.check(ga.range() == act.act(g, a.range()), "range compatibility" + tag);
    r.check(ga.source() == act.act(g, a.source()), "source compatibility" + tag);
    r.check(act.act(phi_ga, x) == act.act(g, x), "cocycle acts like g on vertices" + tag);
    Path ab = G.concat(a, b);
    auto [gab, phi_gab] = act.act_path(g, ab);
    auto [pb, phi_pb] = act.act_path(phi_ga, b);
    r.check(gab == G.concat(ga, pb), "action on a concatenation" + tag);
    r.check(phi_gab == phi_pb, "cocycle on a concatenation" + tag);
  }
  return r;
}

SuiteResult semigroup_laws(const SelfSimilarAction& act, Gen& gen, std::size_t samples, std::size_t max_len) {
  const Graph& G = act.graph();
  const Group& grp = act.group();
  SuiteResult r;
  auto mul = [&](const STriple& a, const STriple& b) { return s_mul(act, a, b); };
  for (std::size_t i = 0; i < samples; ++i) {
    STriple s = gen.triple(act, max_len);
    STriple st = s_star(act, s);
    std::string tag = " s=" + format_triple(act, s);
    r.check(mul(mul(s, st), s) == s, "s = s s* s" + tag);
    r.check(mul(mul(st, s), st) == st, "s* = s* s s*" + tag);
    r.check(s_star(act, st) == s, "s** = s" + tag);

    // Candidates near s*: other group labels and one-step refinements.
    std::vector<STriple> cands;
    for (int k = 0; k < 4; ++k) {
      GroupElem g = gen.group_elem(grp);
      if (act.act(g, s.alpha().source()) == s.beta().source()) cands.push_back(STriple(act, s.beta(), g, s.alpha()));
    }
    for (EdgeId e : G.edges_into(s.alpha().source())) {
      auto [ge, phi] = act.act_path(grp.inverse(s.g()), G.edge_path(e));
      cands.push_back(STriple(act, G.concat(s.beta(), ge), grp.inverse(phi), G.concat(s.alpha(), G.edge_path(e))));
    }
    for (int k = 0; k < 2; ++k) cands.push_back(gen.triple(act, max_len));
    for (const auto& c : cands) {
      if (c == st) continue;
      bool inverse = mul(mul(s, c), s) == s && mul(mul(c, s), c) == c;
      r.check(!inverse, [&] { return "second inverse " + format_triple(act, c) + tag; });
    }

    STriple t = compatible_with(act, gen, s, max_len);
    STriple u = compatible_with(act, gen, t, max_len);
    r.check(mul(mul(s, t), u) == mul(s, mul(t, u)), [&] { return "associativity t=" + format_triple(act, t) +
                                                         " u=" + format_triple(act, u) + tag; });
    STriple e1 = mul(st, s);
    STriple e2 = mul(s_star(act, t), t);
    r.check(s_is_idempotent(act, e1), "s* s idempotent" + tag);
    r.check(mul(e1, e2) == mul(e2, e1), [&] { return "idempotents commute t=" + format_triple(act, t) + tag; });
  }
  return r;
}

SuiteResult leavitt_degeneration(const Graph& g, std::size_t max_len) {
  auto act = trivial_action(g);
  Algebra alg(act, Ring::rationals());
  LeavittOracle oracle(act->graph());
  const Graph& G = act->graph();
  std::vector<Path> paths;
  for (auto v : G.vertices())
    for (std::size_t n = 0; n <= max_len; ++n)
      for (const auto& p : G.extend_paths(v, n)) paths.push_back(p);
  std::vector<Element> span;
  for (const auto& a : paths)
    for (const auto& b : paths)
      if (a.source() == b.source())
        span.push_back(alg.term(STriple(*act, a, act->group().identity(), b)));
  // Each spanning term is a single reduced word.
  std::vector<LeavittOracle::Word> words;
  for (const auto& x : span) {
    auto p = oracle.from_element(x);
    if (p.size() != 1 || p.begin()->second != 1) throw std::logic_error("spanning term is not a monomial");
    words.push_back(p.begin()->first);
  }
  const Rational one(1);
  SuiteResult r;
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < span.size(); ++j) {
      Element xy = span[i] * span[j];
      auto expect = oracle.multiply_words(words[i], words[j]);
      // The trivial-group product of two spanning terms is a spanning term or zero.
      bool ok = false;
      if (xy.terms().empty()) {
        ok = !expect;
      } else if (xy.terms().size() == 1 && xy.terms().begin()->second == one && expect) {
        const STriple& t = xy.terms().begin()->first;
        ok = oracle.reduce_word(oracle.monomial(t.alpha(), t.beta())) == expect;
      }
      r.check(ok, [&] { return alg.format(span[i]) + " * " + alg.format(span[j]) + " = " + alg.format(xy); });
    }
  return r;
}

namespace {

struct Relation {
  std::string name;
  // lhs is either a product of two functions or a single function (star relations).
  std::optional<std::pair<Element, Element>> product;
  std::optional<Element> star_of;
  std::vector<std::pair<Element, Element>> product_sum;  // sum of products
  Element rhs;
};

std::vector<Relation> family_relations(const Algebra& alg, long z_range) {
  const SelfSimilarAction& act = alg.action();
  const Graph& G = act.graph();
  const Group& grp = act.group();
  auto gs = sample_group(grp, z_range);
  GroupElem id = grp.identity();
  std::vector<Relation> rels;
  auto fmt = [&](const GroupElem& g) { return grp.format(g); };

  // (a) E-family of the identity labels.
  for (auto v : G.vertices()) {
    Relation proj{"P_v* = P_v at " + G.vertex_name(v), std::nullopt, alg.p(v), {}, alg.p(v)};
    rels.push_back(proj);
    for (auto w : G.vertices())
      rels.push_back({"P_v P_w at " + G.vertex_name(v) + "," + G.vertex_name(w),
                      std::make_pair(alg.p(v), alg.p(w)), std::nullopt, {}, v == w ? alg.p(v) : alg.zero()});
    Relation ck{"CK sum at " + G.vertex_name(v), std::nullopt, std::nullopt, {}, alg.p(v)};
    for (EdgeId e : G.edges_into(v)) ck.product_sum.emplace_back(alg.s(e), adj(alg.s(e)));
    rels.push_back(ck);
  }
  for (auto e : G.edge_ids())
    for (auto f : G.edge_ids())
      rels.push_back({"S_e* S_f at " + G.edge_name(e) + "," + G.edge_name(f), std::make_pair(adj(alg.s(e)), alg.s(f)),
                      std::nullopt, {}, e == f ? alg.p(G.source(e)) : alg.zero()});
  // (b)-(e)
  for (auto v : G.vertices())
    for (const auto& f : gs) {
      GroupElem fi = grp.inverse(f);
      rels.push_back({"P_{v,f}* at " + G.vertex_name(v) + "," + fmt(f), std::nullopt, alg.p(v, f), {},
                      alg.p(act.act(fi, v), fi)});
      for (auto w : G.vertices())
        for (const auto& h : gs)
          rels.push_back({"P P at " + G.vertex_name(v) + "," + fmt(f) + "," + G.vertex_name(w) + "," + fmt(h),
                          std::make_pair(alg.p(v, f), alg.p(w, h)), std::nullopt, {},
                          v == act.act(f, w) ? alg.p(v, grp.mul(f, h)) : alg.zero()});
      for (auto e : G.edge_ids())
        for (const auto& g : gs) {
          EdgeImage fe = act.act(f, e);
          rels.push_back({"P S at " + G.vertex_name(v) + "," + fmt(f) + "," + G.edge_name(e) + "," + fmt(g),
                          std::make_pair(alg.p(v, f), alg.s(e, g)), std::nullopt, {},
                          v == G.range(fe.edge) ? alg.s(fe.edge, grp.mul(fe.cocycle, g)) : alg.zero()});
          rels.push_back({"S P at " + G.edge_name(e) + "," + fmt(g) + "," + G.vertex_name(v) + "," + fmt(f),
                          std::make_pair(alg.s(e, g), alg.p(v, f)), std::nullopt, {},
                          act.act(g, v) == G.source(e) ? alg.s(e, grp.mul(g, f)) : alg.zero()});
        }
    }
  (void)id;
  return rels;
}

}  // namespace

SuiteResult family_relations_pointwise(const Algebra& alg, std::size_t depth, long z_range) {
  const SelfSimilarAction& act = alg.action();
  SuiteResult r;
  for (const auto& rel : family_relations(alg, z_range)) {
    Element support = rel.rhs;
    if (rel.product) support += rel.product->first + rel.product->second + rel.product->first * rel.product->second;
    if (rel.star_of) support += *rel.star_of + adj(*rel.star_of);
    for (const auto& [a, b] : rel.product_sum) support += a + b + a * b;
    // Coefficients may cancel in `support`; take the test set term by term.
    Element cover = alg.zero();
    for (const auto& [t, c] : support.terms()) cover += alg.term(t);
    auto germs = germ_test_set(pi_map(cover), depth);
    SteinbergFn R = pi_map(rel.rhs);
    for (const auto& p : germs) {
      Rational lhs = 0;
      if (rel.product) lhs += convolve_at(pi_map(rel.product->first), pi_map(rel.product->second), p);
      if (rel.star_of) {
        // F*(gamma) = F(gamma^-1), gamma^-1 = [s*, s.x]
        STriple inv = s_star(act, p.s);
        lhs += fn_eval(pi_map(*rel.star_of), make_germ(act, inv, act_triple(act, p.s, p.x)));
      }
      for (const auto& [a, b] : rel.product_sum) lhs += convolve_at(pi_map(a), pi_map(b), p);
      Rational rhs = fn_eval(R, p);
      r.check(alg.ring().normalize(lhs - rhs) == 0, [&] { return rel.name + " at " + format_germ(act, p); });
    }
  }
  return r;
}

SuiteResult family_relations_formal(const Algebra& alg, long z_range) {
  SuiteResult r;
  for (const auto& rel : family_relations(alg, z_range)) {
    Element lhs = alg.zero();
    if (rel.product) lhs += rel.product->first * rel.product->second;
    if (rel.star_of) lhs += adj(*rel.star_of);
    for (const auto& [a, b] : rel.product_sum) lhs += a * b;
    r.check(certified_equal(lhs, rel.rhs), rel.name);
  }
  return r;
}

SuiteResult grading_suite(const Algebra& alg, Gen& gen, std::size_t pairs) {
  const SelfSimilarAction& act = alg.action();
  SuiteResult r;
  auto homogeneous = [&](long d) {
    Element x = alg.zero();
    long n = gen.between(1, 3);
    for (long k = 0; k < n; ++k) x += alg.term(gen.triple_of_degree(act, d, 3), alg.ring().normalize(gen.between(1, 3)));
    return x;
  };
  for (std::size_t i = 0; i < pairs; ++i) {
    long m = gen.between(-2, 2), n = gen.between(-2, 2);
    Element a = homogeneous(m), b = homogeneous(n);
    Element ab = a * b;
    bool additive = true;
    for (const auto& [t, c] : ab.terms()) additive = additive && t.degree() == m + n;
    r.check(additive, [&] { return "degree of " + alg.format(a) + " * " + alg.format(b); });
    Element sum = a + b;
    GradeMap gm = alg.grade_decompose(sum);
    Element back = alg.zero();
    bool pure = true;
    for (const auto& [d, comp] : gm) {
      back += comp;
      for (const auto& [t, c] : comp.terms()) pure = pure && t.degree() == d;
    }
    r.check(pure && back == sum, [&] { return "grade_decompose of " + alg.format(sum); });
  }
  return r;
}

namespace {

// One expansion step of a random term: (alpha,g,beta) -> sum over s(beta)E^1.
Element expand_one(const Algebra& alg, const Element& a, Gen& gen) {
  if (a.empty()) return a;
  std::vector<STriple> keys;
  for (const auto& [t, c] : a.terms()) keys.push_back(t);
  STriple t = gen.pick(keys);
  Rational c = a.terms().at(t);
  Element rest = a - alg.term(t, c);
  Element one = alg.term(t, c);
  Element expanded = alg.expand_to_depth(one, t.alpha().length() + 1, t.beta().length() + 1);
  return rest + expanded;
}

// Components expanded to the depth shared by a and b.
bool matched_normal_forms_equal(const Algebra& alg, const Element& a, const Element& b) {
  GradeMap ga = alg.grade_decompose(a), gb = alg.grade_decompose(b);
  std::set<long> degs;
  for (const auto& [d, x] : ga) degs.insert(d);
  for (const auto& [d, x] : gb) degs.insert(d);
  for (long d : degs) {
    std::size_t m2 = d < 0 ? static_cast<std::size_t>(-d) : 0;
    for (const GradeMap* gm : {&ga, &gb})
      if (gm->count(d))
        for (const auto& [t, c] : gm->at(d).terms()) m2 = std::max(m2, t.beta().length());
    std::size_t m1 = static_cast<std::size_t>(static_cast<long>(m2) + d);
    Element xa = ga.count(d) ? alg.expand_to_depth(ga.at(d), m1, m2) : alg.zero();
    Element xb = gb.count(d) ? alg.expand_to_depth(gb.at(d), m1, m2) : alg.zero();
    if (!(xa == xb)) return false;
  }
  return true;
}

}  // namespace

SuiteResult normal_form_crosscheck(const Algebra& alg, Gen& gen, std::size_t pairs, std::size_t max_depth) {
  SuiteResult r;
  for (std::size_t i = 0; i < pairs; ++i) {
    Element a = gen.element(alg, static_cast<std::size_t>(gen.between(1, 4)), max_depth / 2, 3, 3);
    Element b = a;
    for (long k = gen.between(0, 2); k > 0; --k) b = expand_one(alg, b, gen);
    if (gen.coin()) {
      long which = gen.between(0, 2);
      if (which == 0) b += alg.term(gen.triple(alg.action(), max_depth / 2, 3));
      else if (which == 1 && !b.empty()) b = b - alg.term(b.terms().begin()->first);
      else b = b + b;
    }
    ZeroVerdict z = elem_is_zero(a - b);
    bool identical = matched_normal_forms_equal(alg, a, b);
    r.check(z.kind != ZeroVerdict::Kind::ZeroUpToDepth, [&] { return "uncertified verdict for " + alg.format(a - b); });
    r.check(z.zero() == identical, [&] { return "zero=" + std::string(to_string(z.kind)) + " identical=" +
                                       (identical ? "yes" : "no") + " for " + alg.format(a) + " vs " + alg.format(b); });
  }
  return r;
}

}  // namespace selfsim::testing
