#include "selfsim/group.hpp"


namespace selfsim {

Group Group::integers() { return Group{}; }

Group Group::finite(std::vector<std::string> names,
                    std::vector<std::vector<std::size_t>> table) {
  auto d = std::make_shared<FiniteData>();
  const std::size_t n = names.size();
  table.resize(n);
  for (auto& row : table) row.resize(n, kMissing);
  d->names = std::move(names);
  d->table = std::move(table);

  for (std::size_t e = 0; e < n && !d->identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = d->table[e][x] == x && d->table[x][e] == x;
    if (ok) d->identity = e;
  }
  d->inverse.assign(n, kMissing);
  if (d->identity) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (d->table[a][b] == *d->identity && d->table[b][a] == *d->identity) {
          d->inverse[a] = b;
          break;
        }
  }
  Group g;
  g.kind_ = Kind::Finite;
  g.data_ = std::move(d);
  return g;
}

std::size_t Group::order() const {
  if (!is_finite()) throw UnsupportedInstance("order of an infinite group");
  return data_->names.size();
}

std::vector<GroupElem> Group::elements() const {
  std::vector<GroupElem> out;
  for (std::size_t i = 0; i < order(); ++i) out.emplace_back(static_cast<long long>(i));
  return out;
}

const std::vector<std::string>& Group::names() const {
  static const std::vector<std::string> none;
  return is_finite() ? data_->names : none;
}

std::size_t Group::raw_product(std::size_t a, std::size_t b) const {
  return data_->table.at(a).at(b);
}

GroupElem Group::identity() const {
  if (is_integers()) return GroupElem(0);
  if (!data_->identity) throw SemanticError("group table has no identity element");
  return GroupElem(static_cast<long long>(*data_->identity));
}

bool Group::is_identity(const GroupElem& g) const {
  if (is_integers()) return g.value() == 0;
  return data_->identity && g.index() == *data_->identity;
}

GroupElem Group::mul(const GroupElem& a, const GroupElem& b) const {
  if (is_integers()) return GroupElem(a.value() + b.value());
  std::size_t c = data_->table.at(a.index()).at(b.index());
  if (c == kMissing)
    throw SemanticError("product " + format(a) + "*" + format(b) + " is undefined");
  return GroupElem(static_cast<long long>(c));
}

GroupElem Group::inverse(const GroupElem& a) const {
  if (is_integers()) return GroupElem(BigInt(-a.value()));
  std::size_t c = data_->inverse.at(a.index());
  if (c == kMissing) throw SemanticError("no inverse for " + format(a));
  return GroupElem(static_cast<long long>(c));
}

bool Group::contains(const GroupElem& g) const {
  if (is_integers()) return true;
  return g.value() >= 0 && g.value() < data_->names.size();
}

std::string Group::format(const GroupElem& g) const {
  if (is_integers()) return g.value().str();
  return data_->names.at(g.index());
}

std::optional<GroupElem> Group::parse(std::string_view text) const {
  if (is_integers()) {
    std::string_view digits = text;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
    if (digits.empty()) return std::nullopt;
    for (char c : digits)
      if (c < '0' || c > '9') return std::nullopt;
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    return GroupElem(BigInt(s));
  }
  for (std::size_t i = 0; i < data_->names.size(); ++i)
    if (data_->names[i] == text) return GroupElem(static_cast<long long>(i));
  return std::nullopt;
}

GroupElem Group::elem(std::string_view text) const {
  if (auto g = parse(text)) return *g;
  throw SemanticError("'" + std::string(text) + "' is not an element of the group");
}

ValidationReport validate_group(const Group& g) {
  ValidationReport rep;
  if (g.is_integers()) return rep;
  const auto& d = *g.data_;
  const std::size_t n = d.names.size();
  if (n == 0) {
    rep.add("empty-group", "finite group has no elements");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d.names[i] == d.names[j]) rep.add("duplicate-element", "element '" + d.names[i] + "' declared twice");
  bool closed = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d.table[a][b] == Group::kMissing || d.table[a][b] >= n) {
        rep.add("not-closed", "product " + d.names[a] + "*" + d.names[b] + " missing from table");
        closed = false;
      }
  if (!closed) return rep;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (d.table[d.table[a][b]][c] != d.table[a][d.table[b][c]]) {
          rep.add("not-associative", "(" + d.names[a] + "*" + d.names[b] + ")*" + d.names[c] +
                                         " differs from " + d.names[a] + "*(" + d.names[b] +
                                         "*" + d.names[c] + ")");
          return rep;
        }
  if (!d.identity) {
    rep.add("no-identity", "table has no identity element");
    return rep;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (d.inverse[a] == Group::kMissing) rep.add("no-inverse", "no inverse for " + d.names[a]);
  return rep;
}

}  // namespace selfsim
