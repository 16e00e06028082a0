#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace selfsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-composable path endpoints or a triple violating s(alpha) = g.s(beta).
class CompositionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SemanticError : public Error {
 public:
  SemanticError(const std::string& msg, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Germ comparison could not be decided within the configured bound.
class EvaluationUndecided : public Error {
 public:
  using Error::Error;
};

// Instance outside the supported fragment (infinite orbit, unknown F_u, ...).
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

// Mixing elements built over different algebras or rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string message) {
    violations.push_back({std::move(code), std::move(message)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  bool mentions(const std::string& needle) const;
};

}  // namespace selfsim
