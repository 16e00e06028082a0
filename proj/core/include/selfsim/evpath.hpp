#pragma once

#include "selfsim/action.hpp"

#include <optional>
#include <string>

namespace selfsim {

// Eventually periodic infinite path transient.cycle.cycle...
// Normal form: primitive cycle, transient not ending in the cycle's last edge.
class EvPath {
 public:
  // Requires cycle nonempty, r(cycle) == s(cycle) == s(transient).
  static EvPath make(const Graph& g, const Path& transient, const Path& cycle);

  const Path& transient() const { return transient_; }
  const Path& cycle() const { return cycle_; }
  VertexId range() const { return transient_.range(); }

  EdgeId edge_at(std::size_t i) const;
  Path prefix(const Graph& g, std::size_t n) const;
  EvPath drop(const Graph& g, std::size_t n) const;
  EvPath prepend(const Graph& g, const Path& mu) const;
  bool in_cylinder(const Path& beta) const;

  // g.x, or nullopt if the cocycle along the cycle does not recur within max_laps.
  std::optional<EvPath> act(const SelfSimilarAction& act, const GroupElem& g,
                            std::size_t max_laps = 4096) const;

  std::string format(const Graph& g) const;

  friend bool operator==(const EvPath&, const EvPath&) = default;
  friend auto operator<=>(const EvPath& a, const EvPath& b) {
    if (auto c = a.transient_ <=> b.transient_; c != 0) return c;
    return a.cycle_ <=> b.cycle_;
  }

 private:
  Path transient_;
  Path cycle_;
};

// Simple cycles (no repeated vertex) of length <= max_len based at v.
std::vector<Path> simple_cycles_at(const Graph& g, VertexId v, std::size_t max_len);

// Some eventually periodic path with range v (greedy walk until a vertex repeats).
EvPath some_lasso(const Graph& g, VertexId v);

}  // namespace selfsim
