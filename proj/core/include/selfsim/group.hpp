#pragma once

#include "selfsim/error.hpp"
#include "selfsim/numbers.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace selfsim {

// Integer value for Z; element index for finite groups.
class GroupElem {
 public:
  GroupElem() = default;
  explicit GroupElem(BigInt v) : value_(std::move(v)) {}
  explicit GroupElem(long long v) : value_(v) {}

  const BigInt& value() const { return value_; }
  std::size_t index() const { return value_.convert_to<std::size_t>(); }

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigInt value_{0};
};

class Group {
 public:
  enum class Kind { IntegersZ, Finite };
  static constexpr std::size_t kMissing = static_cast<std::size_t>(-1);

  static Group integers();
  // table[a][b] is the index of a*b, or kMissing.
  static Group finite(std::vector<std::string> names,
                      std::vector<std::vector<std::size_t>> table);

  Kind kind() const { return kind_; }
  bool is_integers() const { return kind_ == Kind::IntegersZ; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_trivial() const { return is_finite() && order() == 1; }

  std::size_t order() const;  // finite groups only
  std::vector<GroupElem> elements() const;  // finite groups only
  const std::vector<std::string>& names() const;
  std::size_t raw_product(std::size_t a, std::size_t b) const;

  GroupElem identity() const;
  bool is_identity(const GroupElem& g) const;
  GroupElem mul(const GroupElem& a, const GroupElem& b) const;
  GroupElem inverse(const GroupElem& a) const;
  bool contains(const GroupElem& g) const;

  std::string format(const GroupElem& g) const;
  std::optional<GroupElem> parse(std::string_view text) const;
  GroupElem elem(std::string_view text) const;  // throws SemanticError

 private:
  struct FiniteData {
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table;
    std::optional<std::size_t> identity;
    std::vector<std::size_t> inverse;  // kMissing when absent
  };

  Kind kind_ = Kind::IntegersZ;
  std::shared_ptr<const FiniteData> data_;

  friend ValidationReport validate_group(const Group& g);
};

ValidationReport validate_group(const Group& g);

}  // namespace selfsim
