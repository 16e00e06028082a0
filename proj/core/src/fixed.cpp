#include "selfsim/fixed.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace selfsim {

namespace {

using State = std::pair<VertexId, std::vector<std::size_t>>;  // (vertex, alive cocycle values)

struct Step {
  EdgeId edge;
  State next;
  bool emits;
};

// Abstracts the strong-fixedness automaton: Katsura (state = vertex, emit on a
// B-zero edge) and finite groups (state = vertex plus set of alive cocycles).
class Automaton {
 public:
  explicit Automaton(const SelfSimilarAction& act) : act_(act) {}

  State start(VertexId w) const {
    std::vector<std::size_t> h;
    if (act_.group().is_finite()) {
      std::size_t id = act_.group().identity().index();
      for (std::size_t i = 0; i < act_.group().order(); ++i)
        if (i != id) h.push_back(i);
    }
    return {w, h};
  }

  std::vector<Step> steps(const State& s) const {
    std::vector<Step> out;
    const Graph& G = act_.graph();
    for (EdgeId e : G.edges_into(s.first)) {
      if (const KatsuraData* k = act_.katsura()) {
        const auto& ke = k->edges[e.index];
        bool zero = k->spec.B[ke.i][ke.j] == 0;
        out.push_back({e, {G.source(e), {}}, zero});
        continue;
      }
      const Group& grp = act_.group();
      std::set<std::size_t> next;
      for (std::size_t h : s.second) {
        EdgeImage im = act_.act(GroupElem(static_cast<long long>(h)), e);
        if (im.edge == e) next.insert(im.cocycle.index());
      }
      bool emits = next.count(grp.identity().index()) > 0;
      out.push_back({e, {G.source(e), {next.begin(), next.end()}}, emits});
    }
    return out;
  }

 private:
  const SelfSimilarAction& act_;
};

}  // namespace

FixedStructure analyze_fixed(const SelfSimilarAction& act, VertexId w, std::size_t enum_cap) {
  FixedStructure out;
  out.vertex = w;
  const Graph& G = act.graph();
  if (act.group().is_integers() && !act.katsura()) {
    out.note = "strong fixedness is not decidable here for a generic Z action";
    return out;
  }
  Automaton aut(act);

  // Look for a reachable cycle of non-emitting transitions (iterative DFS).
  std::map<State, int> color;  // 1 = on stack, 2 = done
  struct Frame {
    State state;
    std::vector<Step> steps;
    std::size_t next = 0;
    std::optional<EdgeId> via;
  };
  std::vector<Frame> stack;
  State s0 = aut.start(w);
  stack.push_back({s0, aut.steps(s0), 0, std::nullopt});
  color[s0] = 1;
  while (!stack.empty() && !out.unfixed) {
    Frame& f = stack.back();
    if (f.next == f.steps.size()) {
      color[f.state] = 2;
      stack.pop_back();
      continue;
    }
    const Step& st = f.steps[f.next++];
    if (st.emits) continue;
    auto it = color.find(st.next);
    if (it == color.end()) {
      color[st.next] = 1;
      State ns = st.next;
      stack.push_back({ns, aut.steps(ns), 0, st.edge});
    } else if (it->second == 1) {
      std::size_t k = 0;
      while (stack[k].state != st.next) ++k;
      std::vector<EdgeId> stem, cyc;
      for (std::size_t i = 1; i <= k; ++i) stem.push_back(*stack[i].via);
      for (std::size_t i = k + 1; i < stack.size(); ++i) cyc.push_back(*stack[i].via);
      cyc.push_back(st.edge);
      Path sp = stem.empty() ? Path::vertex(w) : G.path(std::move(stem));
      out.unfixed = EvPath::make(G, sp, G.path(std::move(cyc)));
    }
  }

  // Enumerate emitting paths (members of F_w) by bounded DFS.
  std::vector<EdgeId> path;
  bool truncated = false;
  // F_w may be infinite when some path is not fixed; list only a short sample then.
  std::size_t depth_bound = out.unfixed ? G.num_vertices() + 2 : static_cast<std::size_t>(-1);
  if (out.unfixed) enum_cap = std::min<std::size_t>(enum_cap, 64);
  auto rec = [&](auto&& self, const State& s) -> void {
    if (truncated) return;
    for (const Step& st : aut.steps(s)) {
      path.push_back(st.edge);
      if (st.emits) {
        out.minimal.push_back(G.path(path));
        if (out.minimal.size() >= enum_cap) truncated = true;
      } else if (path.size() < depth_bound) {
        self(self, st.next);
      } else {
        truncated = true;
      }
      path.pop_back();
      if (truncated) return;
    }
  };
  rec(rec, s0);
  std::sort(out.minimal.begin(), out.minimal.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });

  for (std::size_t i = 0; i < out.minimal.size() && out.cylinders_disjoint; ++i)
    for (std::size_t j = i + 1; j < out.minimal.size(); ++j)
      if (cylinder_relation(out.minimal[i], out.minimal[j]) != CylinderRelation::Disjoint) {
        out.cylinders_disjoint = false;
        break;
      }

  if (out.unfixed) {
    out.kind = FixedStructure::Kind::SomePathNotFixed;
    out.minimal_complete = false;
    out.note = "infinite path " + out.unfixed->format(G) + " is not strongly fixed";
  } else if (truncated) {
    out.kind = FixedStructure::Kind::Undetermined;
    out.note = "minimal strongly fixed paths exceed the enumeration cap";
  } else {
    out.kind = FixedStructure::Kind::AllFixedFinite;
    out.minimal_complete = true;
    out.note = "every infinite path is strongly fixed; " + std::to_string(out.minimal.size()) +
               " minimal strongly fixed paths";
  }
  return out;
}

bool is_strongly_fixed(const SelfSimilarAction& act, const Path& a) {
  if (a.is_vertex()) return false;
  if (const KatsuraData* k = act.katsura()) {
    for (EdgeId e : a.edges()) {
      const auto& ke = k->edges[e.index];
      if (k->spec.B[ke.i][ke.j] == 0) return true;
    }
    return false;
  }
  const Group& grp = act.group();
  if (!grp.is_finite()) throw UnsupportedInstance("strong fixedness for a generic Z action");
  for (const GroupElem& g : grp.elements())
    if (!grp.is_identity(g) && act.strongly_fixes(g, a)) return true;
  return false;
}

}  // namespace selfsim
