#pragma once

#include "selfsim/fixed.hpp"
#include "selfsim/steinberg.hpp"

#include <optional>
#include <string>

namespace selfsim {

struct ZeroOptions {
  std::size_t depth = 6;           // germ test set depth
  std::size_t max_germs = 20000;
  bool cross_check = true;         // re-evaluate certified Zero on the test set
  GermOptions germ;
};

struct ZeroVerdict {
  enum class Kind { Zero, NonZero, ZeroUpToDepth };
  Kind kind = Kind::ZeroUpToDepth;
  std::optional<GermPoint> witness;  // NonZero only
  Rational witness_value = 0;
  std::string route;                 // how the verdict was reached
  std::size_t germs_checked = 0;
  std::size_t germs_undecided = 0;
  std::string detail;

  bool zero() const { return kind == Kind::Zero; }
  bool nonzero() const { return kind == Kind::NonZero; }
};

// Zero is certified by splitting into degree components, expanding each to a
// common depth and deciding every diagonal block sum_g r_g p_{w,g} from the
// strongly fixed structure of Z(w). NonZero always carries a germ at which
// the Steinberg image is nonzero.
ZeroVerdict elem_is_zero(const Element& a, const ZeroOptions& opt = {});
ZeroVerdict fn_is_zero(const SteinbergFn& f, const ZeroOptions& opt = {});

// a == b with a certified Zero of the difference (formal identity short-circuits).
bool certified_equal(const Element& a, const Element& b, const ZeroOptions& opt = {});

std::string_view to_string(ZeroVerdict::Kind k);

}  // namespace selfsim
