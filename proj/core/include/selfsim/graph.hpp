#pragma once

#include "selfsim/error.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace selfsim {

struct VertexId {
  std::uint32_t index = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  std::uint32_t index = 0;
  auto operator<=>(const EdgeId&) const = default;
};

// Edge sequence read right to left: s(edges[i]) == r(edges[i+1]).
// A vertex is the empty sequence together with range == source.
class Path {
 public:
  Path() = default;
  static Path vertex(VertexId v) { return Path({}, v, v); }

  std::size_t length() const { return edges_.size(); }
  bool is_vertex() const { return edges_.empty(); }
  VertexId range() const { return range_; }
  VertexId source() const { return source_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  EdgeId operator[](std::size_t i) const { return edges_[i]; }

  bool is_prefix_of(const Path& other) const;

  friend bool operator==(const Path&, const Path&) = default;
  // Lexicographic on edge ids; vertex paths break ties by vertex id.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);

 private:
  friend class Graph;
  Path(std::vector<EdgeId> edges, VertexId range, VertexId source)
      : edges_(std::move(edges)), range_(range), source_(source) {}

  std::vector<EdgeId> edges_;
  VertexId range_{};
  VertexId source_{};
};

struct EdgeRecord {
  std::string name;
  VertexId range;
  VertexId source;
};

class Graph {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId range, VertexId source);

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v.index); }
  const std::string& edge_name(EdgeId e) const { return edges_.at(e.index).name; }
  VertexId range(EdgeId e) const { return edges_.at(e.index).range; }
  VertexId source(EdgeId e) const { return edges_.at(e.index).source; }
  const EdgeRecord& edge(EdgeId e) const { return edges_.at(e.index); }

  // vE^1, in insertion order.
  std::span<const EdgeId> edges_into(VertexId v) const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edge_ids() const;

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  VertexId vertex_by_name(std::string_view name) const;
  EdgeId edge_by_name(std::string_view name) const;

  bool contains(VertexId v) const { return v.index < vertex_names_.size(); }
  bool contains(EdgeId e) const { return e.index < edges_.size(); }

  Path path(std::vector<EdgeId> edges) const;
  Path path(std::initializer_list<std::string_view> edge_names) const;
  Path edge_path(EdgeId e) const { return path(std::vector<EdgeId>{e}); }
  Path vertex_path(VertexId v) const;

  Path concat(const Path& a, const Path& b) const;
  Path prefix(const Path& a, std::size_t n) const;
  Path suffix_after(const Path& a, std::size_t n) const;

  // vE^n.
  std::vector<Path> extend_paths(VertexId v, std::size_t n) const;

  std::string format(const Path& p) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<EdgeId>> into_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::string> duplicate_vertices_;
  std::vector<std::string> duplicate_edges_;

  friend ValidationReport validate_graph(const Graph& g);
};

ValidationReport validate_graph(const Graph& g);

enum class CylinderRelation { Disjoint, LeftPrefixOfRight, RightPrefixOfLeft, Equal };

CylinderRelation cylinder_relation(const Path& a, const Path& b);

std::string_view to_string(CylinderRelation r);

}  // namespace selfsim
