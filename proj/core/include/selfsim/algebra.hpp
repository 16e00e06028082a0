#pragma once

#include "selfsim/ring.hpp"
#include "selfsim/semigroup.hpp"

#include <map>
#include <string>

namespace selfsim {

class Algebra;

// Finite sum of c * s_{alpha,g} s_{beta,e}^* keyed by the triple (alpha, g, beta).
// Never stores zero coefficients or the Zero triple.
class Element {
 public:
  using Terms = std::map<STriple, Rational, TermOrder>;

  Element() = default;
  Element(const Algebra& alg, Terms terms);

  const Algebra& algebra() const;
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }

  // Formal (term-identical) equality.
  friend bool operator==(const Element& a, const Element& b) {
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

 private:
  const Algebra* alg_ = nullptr;
  Terms terms_;
};

Element operator*(const Rational& c, const Element& a);
Element adj(const Element& a);

using GradeMap = std::map<long, Element>;

// L_R(G,E) over a fixed action and ring. Elements keep a pointer to their
// Algebra, which must outlive them.
class Algebra {
 public:
  Algebra(ActionPtr act, Ring ring);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const SelfSimilarAction& action() const { return *act_; }
  const ActionPtr& action_ptr() const { return act_; }
  const Graph& graph() const { return act_->graph(); }
  const Group& group() const { return act_->group(); }
  const Ring& ring() const { return ring_; }

  Element zero() const { return Element(*this, {}); }
  Element term(const STriple& t, const Rational& c = 1) const;
  // p_{v,f} = (v, f, f^-1.v)
  Element p(VertexId v, const GroupElem& f) const;
  Element p(VertexId v) const { return p(v, group().identity()); }
  // s_{alpha,g} = (alpha, g, g^-1.s(alpha)); a vertex path gives p_{v,g}.
  Element s(const Path& alpha, const GroupElem& g) const;
  Element s(EdgeId e, const GroupElem& g) const { return s(graph().edge_path(e), g); }
  Element s(EdgeId e) const { return s(e, group().identity()); }
  // u^g = sum_v p_{v,g} (finite E).
  Element u(const GroupElem& g) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(const Rational& c, const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element star(const Element& a) const;

  GradeMap grade_decompose(const Element& a) const;
  // Every term rewritten to |alpha| = m1, |beta| = m2 through
  // (alpha,g,beta) = sum_{e in s(beta)E^1} (alpha (g.e), phi(g,e), beta e).
  Element expand_to_depth(const Element& a, std::size_t m1, std::size_t m2) const;
  // Each degree component expanded to its own common depth.
  Element normal_form(const Element& a) const;

  std::string format(const Element& a) const;
  std::string format_term(const STriple& t) const;

  void check_same(const Element& a) const;

 private:
  ActionPtr act_;
  Ring ring_;
};

}  // namespace selfsim
