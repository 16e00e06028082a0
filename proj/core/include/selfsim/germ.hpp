#pragma once

#include "selfsim/evpath.hpp"
#include "selfsim/semigroup.hpp"

#include <string>

namespace selfsim {

// The germ [s, x]; requires s nonzero and x in Z(beta of s).
struct GermPoint {
  STriple s;
  EvPath x;

  friend bool operator==(const GermPoint&, const GermPoint&) = default;
};

GermPoint make_germ(const SelfSimilarAction& act, const STriple& s, const EvPath& x);
std::string format_germ(const SelfSimilarAction& act, const GermPoint& p);

struct GermOptions {
  // Generic Z actions: give up once |cocycle| exceeds this.
  BigInt cocycle_cap{1000000};
  std::size_t max_steps = 1000000;
};

struct GermComparison {
  enum class Kind { Equal, NotEqual, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t prefix_length = 0;  // Equal: witnessing prefix; otherwise depth reached
  std::string certificate;

  bool equal() const { return kind == Kind::Equal; }
};

// Decides [s, x] == [t, x]. Throws CompositionError when x is outside either cylinder.
GermComparison germ_eq(const SelfSimilarAction& act, const STriple& s, const STriple& t,
                       const EvPath& x, const GermOptions& opt = {});

}  // namespace selfsim
