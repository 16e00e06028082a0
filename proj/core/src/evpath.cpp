#include "selfsim/evpath.hpp"

#include <map>
#include <set>

namespace selfsim {

EvPath EvPath::make(const Graph& g, const Path& transient, const Path& cycle) {
  if (cycle.is_vertex()) throw CompositionError("eventually periodic path needs a nonempty cycle");
  if (cycle.range() != cycle.source())
    throw CompositionError("cycle " + g.format(cycle) + " is not closed");
  if (transient.source() != cycle.range())
    throw CompositionError("transient " + g.format(transient) + " does not end where cycle " +
                           g.format(cycle) + " starts");
  std::vector<EdgeId> c = cycle.edges();
  const std::size_t n = c.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = c[i] == c[i - p];
    if (periodic) {
      c.resize(p);
      break;
    }
  }
  std::vector<EdgeId> t = transient.edges();
  while (!t.empty() && t.back() == c.back()) {
    c.insert(c.begin(), c.back());
    c.pop_back();
    t.pop_back();
  }
  EvPath x;
  x.cycle_ = g.path(std::move(c));
  x.transient_ = t.empty() ? Path::vertex(x.cycle_.range()) : g.path(std::move(t));
  return x;
}

EdgeId EvPath::edge_at(std::size_t i) const {
  if (i < transient_.length()) return transient_[i];
  return cycle_[(i - transient_.length()) % cycle_.length()];
}

Path EvPath::prefix(const Graph& g, std::size_t n) const {
  if (n == 0) return Path::vertex(range());
  std::vector<EdgeId> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edges.push_back(edge_at(i));
  return g.path(std::move(edges));
}

EvPath EvPath::drop(const Graph& g, std::size_t n) const {
  if (n <= transient_.length()) return make(g, g.suffix_after(transient_, n), cycle_);
  std::size_t k = (n - transient_.length()) % cycle_.length();
  std::vector<EdgeId> c(cycle_.edges().begin() + k, cycle_.edges().end());
  c.insert(c.end(), cycle_.edges().begin(), cycle_.edges().begin() + k);
  Path cyc = g.path(std::move(c));
  return make(g, Path::vertex(cyc.range()), cyc);
}

EvPath EvPath::prepend(const Graph& g, const Path& mu) const {
  return make(g, g.concat(mu, transient_), cycle_);
}

bool EvPath::in_cylinder(const Path& beta) const {
  if (beta.range() != range()) return false;
  for (std::size_t i = 0; i < beta.length(); ++i)
    if (beta[i] != edge_at(i)) return false;
  return true;
}

std::optional<EvPath> EvPath::act(const SelfSimilarAction& A, const GroupElem& g,
                                  std::size_t max_laps) const {
  const Graph& G = A.graph();
  auto [t2, h] = A.act_path(g, transient_);
  // Walk the cycle until the cocycle at a lap boundary recurs.
  std::map<GroupElem, std::size_t> seen;
  std::vector<Path> laps;
  for (std::size_t lap = 0; lap < max_laps; ++lap) {
    auto [it, fresh] = seen.emplace(h, lap);
    if (!fresh) {
      std::size_t start = it->second;
      Path head = t2;
      for (std::size_t i = 0; i < start; ++i) head = G.concat(head, laps[i]);
      Path cyc = laps[start];
      for (std::size_t i = start + 1; i < laps.size(); ++i) cyc = G.concat(cyc, laps[i]);
      return make(G, head, cyc);
    }
    auto [img, next] = A.act_path(h, cycle_);
    laps.push_back(std::move(img));
    h = std::move(next);
  }
  return std::nullopt;
}

std::string EvPath::format(const Graph& g) const {
  std::string out;
  if (!transient_.is_vertex()) out = g.format(transient_) + " ";
  return out + "(" + g.format(cycle_) + ")^inf";
}

std::vector<Path> simple_cycles_at(const Graph& g, VertexId v, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<EdgeId> stack;
  std::vector<bool> on_path(g.num_vertices(), false);
  on_path[v.index] = true;
  auto rec = [&](auto&& self, VertexId cur) -> void {
    if (stack.size() >= max_len) return;
    for (EdgeId e : g.edges_into(cur)) {
      VertexId s = g.source(e);
      stack.push_back(e);
      if (s == v)
        out.push_back(g.path(stack));
      else if (!on_path[s.index]) {
        on_path[s.index] = true;
        self(self, s);
        on_path[s.index] = false;
      }
      stack.pop_back();
    }
  };
  rec(rec, v);
  return out;
}

EvPath some_lasso(const Graph& g, VertexId v) {
  std::vector<EdgeId> walk;
  std::map<VertexId, std::size_t> pos{{v, 0}};
  VertexId cur = v;
  for (;;) {
    auto in = g.edges_into(cur);
    if (in.empty()) throw UnsupportedInstance("vertex " + g.vertex_name(cur) + " is a source");
    EdgeId e = in.front();
    walk.push_back(e);
    cur = g.source(e);
    auto [it, fresh] = pos.emplace(cur, walk.size());
    if (!fresh) {
      std::size_t k = it->second;
      std::vector<EdgeId> t(walk.begin(), walk.begin() + k);
      std::vector<EdgeId> c(walk.begin() + k, walk.end());
      Path tp = t.empty() ? Path::vertex(v) : g.path(std::move(t));
      return EvPath::make(g, tp, g.path(std::move(c)));
    }
  }
}

}  // namespace selfsim
