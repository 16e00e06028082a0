#include "selfsim/graph.hpp"

#include <algorithm>

namespace selfsim {

bool Path::is_prefix_of(const Path& other) const {
  if (range_ != other.range_ || edges_.size() > other.edges_.size()) return false;
  return std::equal(edges_.begin(), edges_.end(), other.edges_.begin());
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  auto c = std::lexicographical_compare_three_way(
      a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end());
  if (c != 0) return c;
  return a.range_ <=> b.range_;
}

VertexId Graph::add_vertex(std::string name) {
  VertexId id{static_cast<std::uint32_t>(vertex_names_.size())};
  if (!vertex_index_.emplace(name, id).second) duplicate_vertices_.push_back(name);
  vertex_names_.push_back(std::move(name));
  into_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(std::string name, VertexId range, VertexId source) {
  if (!contains(range) || !contains(source))
    throw CompositionError("edge '" + name + "' references an unknown vertex");
  EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  if (!edge_index_.emplace(name, id).second) duplicate_edges_.push_back(name);
  edges_.push_back({std::move(name), range, source});
  into_[range.index].push_back(id);
  return id;
}

std::span<const EdgeId> Graph::edges_into(VertexId v) const {
  return into_.at(v.index);
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < vertex_names_.size(); ++i) out.push_back({i});
  return out;
}

std::vector<EdgeId> Graph::edge_ids() const {
  std::vector<EdgeId> out;
  for (std::uint32_t i = 0; i < edges_.size(); ++i) out.push_back({i});
  return out;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex_by_name(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw SemanticError("unknown vertex '" + std::string(name) + "'");
}

EdgeId Graph::edge_by_name(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw SemanticError("unknown edge '" + std::string(name) + "'");
}

Path Graph::path(std::vector<EdgeId> edges) const {
  if (edges.empty()) throw CompositionError("empty edge list needs an explicit vertex");
  for (auto e : edges)
    if (!contains(e)) throw CompositionError("unknown edge id " + std::to_string(e.index));
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    VertexId s = source(edges[i]);
    VertexId r = range(edges[i + 1]);
    if (s != r)
      throw CompositionError("cannot compose " + edge_name(edges[i]) + "." +
                             edge_name(edges[i + 1]) + ": source " + vertex_name(s) +
                             " differs from range " + vertex_name(r));
  }
  VertexId r = range(edges.front());
  VertexId s = source(edges.back());
  return Path(std::move(edges), r, s);
}

Path Graph::path(std::initializer_list<std::string_view> edge_names) const {
  std::vector<EdgeId> ids;
  for (auto n : edge_names) ids.push_back(edge_by_name(n));
  return path(std::move(ids));
}

Path Graph::vertex_path(VertexId v) const {
  if (!contains(v)) throw CompositionError("unknown vertex id " + std::to_string(v.index));
  return Path::vertex(v);
}

Path Graph::concat(const Path& a, const Path& b) const {
  if (a.source() != b.range())
    throw CompositionError("cannot concatenate: source " + vertex_name(a.source()) +
                           " of left path differs from range " + vertex_name(b.range()) +
                           " of right path");
  if (a.is_vertex()) return b;
  if (b.is_vertex()) return a;
  std::vector<EdgeId> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return Path(std::move(edges), a.range(), b.source());
}

Path Graph::prefix(const Path& a, std::size_t n) const {
  if (n == 0) return Path::vertex(a.range());
  if (n >= a.length()) return a;
  std::vector<EdgeId> edges(a.edges().begin(), a.edges().begin() + n);
  VertexId s = source(edges.back());
  return Path(std::move(edges), a.range(), s);
}

Path Graph::suffix_after(const Path& a, std::size_t n) const {
  if (n == 0) return a;
  if (n >= a.length()) return Path::vertex(a.source());
  std::vector<EdgeId> edges(a.edges().begin() + n, a.edges().end());
  VertexId r = range(edges.front());
  return Path(std::move(edges), r, a.source());
}

std::vector<Path> Graph::extend_paths(VertexId v, std::size_t n) const {
  if (!contains(v)) throw SemanticError("unknown vertex id " + std::to_string(v.index));
  std::vector<Path> frontier{Path::vertex(v)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (EdgeId e : edges_into(p.source())) {
        std::vector<EdgeId> edges = p.edges();
        edges.push_back(e);
        next.push_back(Path(std::move(edges), v, source(e)));
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

std::string Graph::format(const Path& p) const {
  if (p.is_vertex()) return vertex_name(p.range());
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += '.';
    out += edge_name(p[i]);
  }
  return out;
}

ValidationReport validate_graph(const Graph& g) {
  ValidationReport rep;
  for (const auto& n : g.duplicate_vertices_)
    rep.add("duplicate-vertex", "vertex id '" + n + "' declared more than once");
  for (const auto& n : g.duplicate_edges_)
    rep.add("duplicate-edge", "edge id '" + n + "' declared more than once");
  for (auto v : g.vertices())
    if (g.edges_into(v).empty())
      rep.add("no-sources", "no sources violated: vertex " + g.vertex_name(v) +
                                " receives no edges");
  return rep;
}

CylinderRelation cylinder_relation(const Path& a, const Path& b) {
  if (a == b) return CylinderRelation::Equal;
  if (a.is_prefix_of(b)) return CylinderRelation::LeftPrefixOfRight;
  if (b.is_prefix_of(a)) return CylinderRelation::RightPrefixOfLeft;
  return CylinderRelation::Disjoint;
}

std::string_view to_string(CylinderRelation r) {
  switch (r) {
    case CylinderRelation::Disjoint: return "Disjoint";
    case CylinderRelation::LeftPrefixOfRight: return "LeftPrefixOfRight";
    case CylinderRelation::RightPrefixOfLeft: return "RightPrefixOfLeft";
    case CylinderRelation::Equal: return "Equal";
  }
  return "?";
}

}  // namespace selfsim
