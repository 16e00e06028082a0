#include "selfsim/algebra.hpp"

#include <algorithm>

namespace selfsim {

Element::Element(const Algebra& alg, Terms terms) : alg_(&alg), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.is_zero() || it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

const Algebra& Element::algebra() const {
  if (!alg_) throw ContextMismatch("element is not attached to an algebra");
  return *alg_;
}

Element Element::operator+(const Element& o) const { return algebra().add(*this, o); }
Element Element::operator-(const Element& o) const { return algebra().sub(*this, o); }
Element Element::operator-() const { return algebra().scale(-1, *this); }
Element Element::operator*(const Element& o) const { return algebra().mul(*this, o); }
Element operator*(const Rational& c, const Element& a) { return a.algebra().scale(c, a); }
Element adj(const Element& a) { return a.algebra().star(a); }

Algebra::Algebra(ActionPtr act, Ring ring) : act_(std::move(act)), ring_(std::move(ring)) {}

void Algebra::check_same(const Element& a) const {
  if (&a.algebra() != this) throw ContextMismatch("elements belong to different algebras");
}

Element Algebra::term(const STriple& t, const Rational& c) const {
  Element::Terms m;
  if (!t.is_zero()) m.emplace(t, ring_.normalize(c));
  return Element(*this, std::move(m));
}

Element Algebra::p(VertexId v, const GroupElem& f) const {
  const Graph& G = graph();
  VertexId w = act_->act(group().inverse(f), v);
  return term(STriple(*act_, G.vertex_path(v), f, G.vertex_path(w)));
}

Element Algebra::s(const Path& alpha, const GroupElem& g) const {
  VertexId w = act_->act(group().inverse(g), alpha.source());
  return term(STriple(*act_, alpha, g, graph().vertex_path(w)));
}

Element Algebra::u(const GroupElem& g) const {
  Element out = zero();
  for (auto v : graph().vertices()) out = add(out, p(v, g));
  return out;
}

Element Algebra::add(const Element& a, const Element& b) const {
  check_same(a);
  check_same(b);
  Element::Terms m = a.terms();
  for (const auto& [t, c] : b.terms()) {
    auto [it, fresh] = m.emplace(t, c);
    if (!fresh) it->second = ring_.add(it->second, c);
  }
  return Element(*this, std::move(m));
}

Element Algebra::sub(const Element& a, const Element& b) const { return add(a, scale(-1, b)); }

Element Algebra::scale(const Rational& c, const Element& a) const {
  check_same(a);
  Rational k = ring_.normalize(c);
  Element::Terms m;
  for (const auto& [t, x] : a.terms()) m.emplace(t, ring_.mul(k, x));
  return Element(*this, std::move(m));
}

Element Algebra::mul(const Element& a, const Element& b) const {
  check_same(a);
  check_same(b);
  Element::Terms m;
  for (const auto& [s, x] : a.terms())
    for (const auto& [t, y] : b.terms()) {
      STriple st = s_mul(*act_, s, t);
      if (st.is_zero()) continue;
      Rational c = ring_.mul(x, y);
      auto [it, fresh] = m.emplace(std::move(st), c);
      if (!fresh) it->second = ring_.add(it->second, c);
    }
  return Element(*this, std::move(m));
}

Element Algebra::star(const Element& a) const {
  check_same(a);
  Element::Terms m;
  for (const auto& [t, c] : a.terms()) m.emplace(s_star(*act_, t), ring_.conj(c));
  return Element(*this, std::move(m));
}

GradeMap Algebra::grade_decompose(const Element& a) const {
  check_same(a);
  std::map<long, Element::Terms> parts;
  for (const auto& [t, c] : a.terms()) parts[t.degree()].emplace(t, c);
  GradeMap out;
  for (auto& [d, m] : parts) out.emplace(d, Element(*this, std::move(m)));
  return out;
}

Element Algebra::expand_to_depth(const Element& a, std::size_t m1, std::size_t m2) const {
  check_same(a);
  const Graph& G = graph();
  const long want = static_cast<long>(m1) - static_cast<long>(m2);
  Element::Terms done;
  std::vector<std::pair<STriple, Rational>> work(a.terms().begin(), a.terms().end());
  while (!work.empty()) {
    auto [t, c] = std::move(work.back());
    work.pop_back();
    if (t.degree() != want)
      throw Error("expand_to_depth: term " + format_triple(*act_, t) + " has degree " +
                  std::to_string(t.degree()) + ", target depth has degree " + std::to_string(want));
    if (t.alpha().length() > m1 || t.beta().length() > m2)
      throw Error("expand_to_depth: term " + format_triple(*act_, t) + " is deeper than the target");
    if (t.beta().length() == m2) {
      auto [it, fresh] = done.emplace(t, c);
      if (!fresh) it->second = ring_.add(it->second, c);
      continue;
    }
    for (EdgeId e : G.edges_into(t.beta().source())) {
      EdgeImage im = act_->act(t.g(), e);
      work.emplace_back(STriple::unchecked(G.concat(t.alpha(), G.edge_path(im.edge)), im.cocycle,
                                           G.concat(t.beta(), G.edge_path(e))),
                        c);
    }
  }
  return Element(*this, std::move(done));
}

Element Algebra::normal_form(const Element& a) const {
  Element out = zero();
  for (const auto& [d, part] : grade_decompose(a)) {
    std::size_t m2 = 0;
    for (const auto& [t, c] : part.terms()) m2 = std::max(m2, t.beta().length());
    out = add(out, expand_to_depth(part, static_cast<std::size_t>(static_cast<long>(m2) + d), m2));
  }
  return out;
}

std::string Algebra::format_term(const STriple& t) const {
  const Graph& G = graph();
  const Group& grp = group();
  std::string out;
  if (t.alpha().is_vertex())
    out = "p(" + G.format(t.alpha()) + "," + grp.format(t.g()) + ")";
  else
    out = "s(" + G.format(t.alpha()) + "," + grp.format(t.g()) + ")";
  if (!t.beta().is_vertex())
    out += "*adj(s(" + G.format(t.beta()) + "," + grp.format(grp.identity()) + "))";
  return out;
}

std::string Algebra::format(const Element& a) const {
  check_same(a);
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : a.terms()) {
    Rational k = c;
    bool negative = ring_.kind() != Ring::Kind::Modular && k < 0;
    if (negative) k = -k;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (k != 1) out += to_string(k) + "*";
    out += format_term(t);
  }
  return out;
}

}  // namespace selfsim
