#pragma once

#include "selfsim/katsura.hpp"

#include <string>
#include <vector>

namespace selfsim {

struct HausdorffOptions {
  long l_bound = 16;           // Katsura sweep over 0 < |l| <= l_bound
  std::size_t max_len = 0;     // 0 means 2N + 8
};

struct HausdorffVerdict {
  enum class Kind { Hausdorff, NonHausdorff, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<GroupElem> g;  // NonHausdorff witness element
  std::optional<VertexId> vertex;
  std::optional<InfiniteFamily> family;
  std::vector<Path> first_members;
  std::vector<std::string> report;
};

std::string_view to_string(HausdorffVerdict::Kind k);

// Finitely many minimal strongly fixed paths for every (g, v).
HausdorffVerdict decide_hausdorff(const SelfSimilarAction& act, const HausdorffOptions& opt = {});

HausdorffVerdict katsura_is_hausdorff(const SelfSimilarAction& act, long l_bound, std::size_t max_len);
HausdorffVerdict finite_is_hausdorff(const SelfSimilarAction& act);

// Finite groups: stem cycle^k exit family of minimal paths strongly fixed by g
// with range v, found from the (vertex, cocycle) automaton; nullopt if finite.
std::optional<InfiniteFamily> finite_infinite_family(const SelfSimilarAction& act, const GroupElem& g,
                                                    VertexId v);

// Any action: minimal strongly fixed paths of length < max_len by direct search.
// Finite groups get an exact verdict from the automaton; Z stops at ExhaustedAtDepth.
FixedPathVerdict bounded_fixed_paths(const SelfSimilarAction& act, VertexId v, const GroupElem& g,
                                     std::size_t max_len, std::size_t list_cap = 10000);

}  // namespace selfsim
