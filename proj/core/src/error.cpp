#include "selfsim/error.hpp"
#include "selfsim/numbers.hpp"

namespace selfsim {

namespace {
std::string located(const std::string& msg, std::size_t line, std::size_t column) {
  if (line == 0) return msg;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
}
}  // namespace

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : Error(located(msg, line, column)), line_(line), column_(column) {}

SemanticError::SemanticError(const std::string& msg, std::size_t line, std::size_t column)
    : Error(located(msg, line, column)), line_(line), column_(column) {}

bool ValidationReport::mentions(const std::string& needle) const {
  for (const auto& v : violations) {
    if (v.code.find(needle) != std::string::npos ||
        v.message.find(needle) != std::string::npos)
      return true;
  }
  return false;
}

std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

void floor_divmod(const BigInt& a, const BigInt& d, BigInt& q, BigInt& r) {
  q = a / d;  // truncates toward zero
  r = a - q * d;
  if (r < 0) {
    if (d > 0) {
      q -= 1;
      r += d;
    } else {
      q += 1;
      r -= d;
    }
  }
}

}  // namespace selfsim
