#pragma once

#include "selfsim/numbers.hpp"

#include <string>
#include <string_view>

namespace selfsim {

// Coefficients are stored as normalized Rationals: integral for Z,
// residues in [0, n) for Z/n. The involution is trivial on all three.
class Ring {
 public:
  enum class Kind { Integers, Rationals, Modular };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring modular(BigInt n);
  // "Z", "Q" or "Zn:N".
  static Ring parse(std::string_view text);

  Kind kind() const { return kind_; }
  const BigInt& modulus() const { return modulus_; }
  std::string name() const;

  // Throws ContextMismatch when q is not representable (non-integral in Z or Z/n).
  Rational normalize(const Rational& q) const;
  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const {
    // Units skip the gcd of a general rational product.
    if (a == 1) return normalize(b);
    if (b == 1) return normalize(a);
    return normalize(a * b);
  }
  Rational neg(const Rational& a) const { return normalize(-a); }
  Rational conj(const Rational& a) const { return a; }
  Rational one() const { return normalize(1); }
  bool is_zero(const Rational& a) const { return a == 0; }

  std::string format(const Rational& a) const { return to_string(a); }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind k, BigInt n) : kind_(k), modulus_(std::move(n)) {}
  Kind kind_;
  BigInt modulus_;
};

}  // namespace selfsim
