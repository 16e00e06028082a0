#pragma once

#include "selfsim/evpath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace selfsim {

// Strongly fixed structure of Z(w): whether some infinite path from w is not
// strongly fixed, and the set F_w of minimal strongly fixed paths with range w.
struct FixedStructure {
  enum class Kind {
    SomePathNotFixed,  // witness in `unfixed`
    AllFixedFinite,    // every x in Z(w) strongly fixed; F_w finite and listed
    Undetermined,
  };
  Kind kind = Kind::Undetermined;
  VertexId vertex;
  std::optional<EvPath> unfixed;
  std::vector<Path> minimal;      // sorted by length, then lexicographically
  bool minimal_complete = false;  // `minimal` is all of F_w
  bool cylinders_disjoint = true;
  std::string note;
};

// enum_cap bounds the number of listed members of F_w.
FixedStructure analyze_fixed(const SelfSimilarAction& act, VertexId w,
                             std::size_t enum_cap = 100000);

// Some g != e strongly fixes a. Unsupported for generic Z actions.
bool is_strongly_fixed(const SelfSimilarAction& act, const Path& a);

}  // namespace selfsim
