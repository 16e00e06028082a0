#pragma once

#include "selfsim/graph.hpp"
#include "selfsim/group.hpp"
#include "selfsim/katsura_spec.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace selfsim {

// sigma_g on vertices and edges plus phi(g, .) on edges.
struct ElementTable {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
  std::vector<GroupElem> cocycle;
};

struct EdgeImage {
  EdgeId edge;
  GroupElem cocycle;
};

// Tables are per element for finite groups and {gen 1, gen -1} for Z.
class SelfSimilarAction {
 public:
  SelfSimilarAction(Graph graph, Group group, std::vector<ElementTable> tables);

  SelfSimilarAction(const SelfSimilarAction&) = delete;
  SelfSimilarAction& operator=(const SelfSimilarAction&) = delete;

  const Graph& graph() const { return graph_; }
  const Group& group() const { return group_; }
  const std::vector<ElementTable>& tables() const { return tables_; }

  VertexId act(const GroupElem& g, VertexId v) const;
  EdgeImage act(const GroupElem& g, EdgeId e) const;
  // (g.a, phi(g, a)); a vertex path gives (g.v, g).
  std::pair<Path, GroupElem> act_path(const GroupElem& g, const Path& a) const;
  Path act_on(const GroupElem& g, const Path& a) const { return act_path(g, a).first; }
  GroupElem cocycle(const GroupElem& g, const Path& a) const { return act_path(g, a).second; }

  // g.a == a and phi(g, a) == e_G.
  bool strongly_fixes(const GroupElem& g, const Path& a) const;

  const KatsuraData* katsura() const { return katsura_ ? &*katsura_ : nullptr; }
  void attach_katsura(KatsuraData data) { katsura_ = std::move(data); }

 private:
  const ElementTable& level(bool negative, std::size_t k) const;

  Graph graph_;
  Group group_;
  std::vector<ElementTable> tables_;
  std::optional<KatsuraData> katsura_;

  // Z only: tables for +2^k and -2^k. The first kEagerLevels are built in the
  // constructor and never mutated; larger exponents grow under the mutex.
  static constexpr std::size_t kEagerLevels = 64;
  std::vector<ElementTable> pos_eager_;
  std::vector<ElementTable> neg_eager_;
  mutable std::mutex levels_mutex_;
  mutable std::deque<ElementTable> pos_extra_;
  mutable std::deque<ElementTable> neg_extra_;
};

using ActionPtr = std::shared_ptr<const SelfSimilarAction>;

ValidationReport validate_action(const SelfSimilarAction& act);

// Identity action of the trivial group {e}.
std::shared_ptr<SelfSimilarAction> trivial_action(Graph graph);

}  // namespace selfsim
