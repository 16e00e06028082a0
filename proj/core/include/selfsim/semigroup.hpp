#pragma once

#include "selfsim/action.hpp"

#include <string>

namespace selfsim {

// Element of S_{G,E}: Zero or (alpha, g, beta) with s(alpha) = g.s(beta).
class STriple {
 public:
  STriple() = default;  // Zero
  static STriple zero() { return STriple(); }
  // Throws CompositionError unless s(alpha) = g.s(beta).
  STriple(const SelfSimilarAction& act, Path alpha, GroupElem g, Path beta);
  static STriple unchecked(Path alpha, GroupElem g, Path beta);

  bool is_zero() const { return zero_; }
  const Path& alpha() const { return alpha_; }
  const GroupElem& g() const { return g_; }
  const Path& beta() const { return beta_; }
  long degree() const {
    return static_cast<long>(alpha_.length()) - static_cast<long>(beta_.length());
  }

  friend bool operator==(const STriple&, const STriple&) = default;

 private:
  bool zero_ = true;
  Path alpha_;
  GroupElem g_;
  Path beta_;
};

// Canonical term order: degree, |beta|, beta, alpha, g. Zero sorts first.
struct TermOrder {
  bool operator()(const STriple& a, const STriple& b) const;
};

STriple s_mul(const SelfSimilarAction& act, const STriple& s, const STriple& t);
STriple s_star(const SelfSimilarAction& act, const STriple& s);
bool s_leq(const SelfSimilarAction& act, const STriple& s, const STriple& t);
bool s_is_idempotent(const SelfSimilarAction& act, const STriple& s);

std::string format_triple(const SelfSimilarAction& act, const STriple& s);

}  // namespace selfsim
