#include "selfsim/ring.hpp"
#include "selfsim/error.hpp"

namespace selfsim {

Ring Ring::modular(BigInt n) {
  if (n < 2) throw SemanticError("modulus must be at least 2");
  return Ring(Kind::Modular, std::move(n));
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Zn:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw SemanticError("bad ring modulus '" + digits + "'");
    return modular(BigInt(digits));
  }
  throw SemanticError("unknown ring '" + std::string(text) + "' (expected Z, Q or Zn:N)");
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Modular: return "Z/" + modulus_.str();
  }
  return "?";
}

Rational Ring::normalize(const Rational& q) const {
  if (kind_ == Kind::Rationals) return q;
  if (!is_integral(q))
    throw ContextMismatch("coefficient " + to_string(q) + " is not an element of " + name());
  if (kind_ == Kind::Integers) return q;
  BigInt quo, rem;
  floor_divmod(boost::multiprecision::numerator(q), modulus_, quo, rem);
  return Rational(rem);
}

}  // namespace selfsim
