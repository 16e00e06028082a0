#include "selfsim/action.hpp"

#include <algorithm>

namespace selfsim {

namespace {

bool well_shaped(const Graph& g, const ElementTable& t) {
  if (t.vertex_map.size() != g.num_vertices() || t.edge_map.size() != g.num_edges() ||
      t.cocycle.size() != g.num_edges())
    return false;
  for (auto v : t.vertex_map)
    if (!g.contains(v)) return false;
  for (auto e : t.edge_map)
    if (!g.contains(e)) return false;
  return true;
}

// Table of a+b from tables of a and b (Z, additive):
// sigma_{a+b} = sigma_a o sigma_b, phi(a+b, e) = phi(a, b.e) + phi(b, e).
ElementTable compose(const ElementTable& a, const ElementTable& b) {
  ElementTable out;
  out.vertex_map.resize(b.vertex_map.size());
  for (std::size_t v = 0; v < b.vertex_map.size(); ++v)
    out.vertex_map[v] = a.vertex_map[b.vertex_map[v].index];
  out.edge_map.resize(b.edge_map.size());
  out.cocycle.resize(b.edge_map.size());
  for (std::size_t e = 0; e < b.edge_map.size(); ++e) {
    EdgeId be = b.edge_map[e];
    out.edge_map[e] = a.edge_map[be.index];
    out.cocycle[e] = GroupElem(a.cocycle[be.index].value() + b.cocycle[e].value());
  }
  return out;
}

std::size_t highest_bit(const BigInt& m) { return boost::multiprecision::msb(m); }

}  // namespace

SelfSimilarAction::SelfSimilarAction(Graph graph, Group group, std::vector<ElementTable> tables)
    : graph_(std::move(graph)), group_(std::move(group)), tables_(std::move(tables)) {
  if (group_.is_integers() && tables_.size() == 2 && well_shaped(graph_, tables_[0]) &&
      well_shaped(graph_, tables_[1])) {
    pos_eager_.push_back(tables_[0]);
    neg_eager_.push_back(tables_[1]);
    for (std::size_t k = 1; k < kEagerLevels; ++k) {
      pos_eager_.push_back(compose(pos_eager_.back(), pos_eager_.back()));
      neg_eager_.push_back(compose(neg_eager_.back(), neg_eager_.back()));
    }
  }
}

const ElementTable& SelfSimilarAction::level(bool negative, std::size_t k) const {
  const auto& eager = negative ? neg_eager_ : pos_eager_;
  if (eager.empty()) throw SemanticError("generator action required: gen 1 and gen -1 tables");
  if (k < eager.size()) return eager[k];
  std::lock_guard lock(levels_mutex_);
  auto& extra = negative ? neg_extra_ : pos_extra_;
  while (kEagerLevels + extra.size() <= k) {
    const ElementTable& prev = extra.empty() ? eager.back() : extra.back();
    extra.push_back(compose(prev, prev));
  }
  return extra[k - kEagerLevels];
}

VertexId SelfSimilarAction::act(const GroupElem& g, VertexId v) const {
  if (group_.is_finite()) return tables_.at(g.index()).vertex_map.at(v.index);
  const BigInt& m = g.value();
  if (m == 0) return v;
  bool neg = m < 0;
  BigInt mag = neg ? BigInt(-m) : m;
  std::size_t top = highest_bit(mag);
  for (std::size_t k = 0; k <= top; ++k)
    if (boost::multiprecision::bit_test(mag, k)) v = level(neg, k).vertex_map[v.index];
  return v;
}

EdgeImage SelfSimilarAction::act(const GroupElem& g, EdgeId e) const {
  if (group_.is_finite()) {
    const auto& t = tables_.at(g.index());
    return {t.edge_map.at(e.index), t.cocycle.at(e.index)};
  }
  const BigInt& m = g.value();
  if (m == 0) return {e, GroupElem(0)};
  bool neg = m < 0;
  BigInt mag = neg ? BigInt(-m) : m;
  BigInt c = 0;
  std::size_t top = highest_bit(mag);
  for (std::size_t k = 0; k <= top; ++k) {
    if (!boost::multiprecision::bit_test(mag, k)) continue;
    const ElementTable& t = level(neg, k);
    c += t.cocycle[e.index].value();
    e = t.edge_map[e.index];
  }
  return {e, GroupElem(std::move(c))};
}

std::pair<Path, GroupElem> SelfSimilarAction::act_path(const GroupElem& g, const Path& a) const {
  if (a.is_vertex()) return {Path::vertex(act(g, a.range())), g};
  std::vector<EdgeId> out;
  out.reserve(a.length());
  GroupElem h = g;
  for (EdgeId e : a.edges()) {
    EdgeImage im = act(h, e);
    out.push_back(im.edge);
    h = std::move(im.cocycle);
  }
  return {graph_.path(std::move(out)), h};
}

bool SelfSimilarAction::strongly_fixes(const GroupElem& g, const Path& a) const {
  auto [b, h] = act_path(g, a);
  return b == a && group_.is_identity(h);
}

namespace {

void check_automorphism(const Graph& g, const ElementTable& t, const std::string& label,
                        ValidationReport& rep) {
  std::vector<bool> hit_v(g.num_vertices()), hit_e(g.num_edges());
  for (auto v : t.vertex_map) hit_v[v.index] = true;
  for (auto e : t.edge_map) hit_e[e.index] = true;
  if (std::find(hit_v.begin(), hit_v.end(), false) != hit_v.end())
    rep.add("automorphism", label + ": vertex map is not a permutation");
  if (std::find(hit_e.begin(), hit_e.end(), false) != hit_e.end())
    rep.add("automorphism", label + ": edge map is not a permutation");
  for (auto e : g.edge_ids()) {
    EdgeId ge = t.edge_map[e.index];
    if (g.range(ge) != t.vertex_map[g.range(e).index])
      rep.add("automorphism", label + ": range not preserved at edge " + g.edge_name(e));
    if (g.source(ge) != t.vertex_map[g.source(e).index])
      rep.add("automorphism", label + ": source not preserved at edge " + g.edge_name(e));
  }
}

}  // namespace

ValidationReport validate_action(const SelfSimilarAction& act) {
  ValidationReport rep;
  const Graph& G = act.graph();
  const Group& grp = act.group();
  const auto& tables = act.tables();

  if (grp.is_integers()) {
    if (tables.size() != 2) {
      rep.add("generator-missing", "generator action required: gen 1 and gen -1 tables");
      return rep;
    }
    const char* labels[2] = {"gen 1", "gen -1"};
    for (int k = 0; k < 2; ++k)
      if (!well_shaped(G, tables[k])) {
        rep.add("incomplete-table", std::string(labels[k]) + ": table incomplete or out of range");
        return rep;
      }
    for (int k = 0; k < 2; ++k) check_automorphism(G, tables[k], labels[k], rep);
    if (!rep.ok()) return rep;
    // gen -1 must invert gen 1, with cocycles summing to 0 (phi(0, .) = 0).
    for (int k = 0; k < 2; ++k) {
      const auto& a = tables[k];
      const auto& b = tables[1 - k];
      for (auto v : G.vertices())
        if (a.vertex_map[b.vertex_map[v.index].index] != v)
          rep.add("inverse", std::string(labels[k]) + " does not invert " + labels[1 - k] +
                                 " at vertex " + G.vertex_name(v));
      for (auto e : G.edge_ids()) {
        EdgeId be = b.edge_map[e.index];
        if (a.edge_map[be.index] != e)
          rep.add("inverse", std::string(labels[k]) + " does not invert " + labels[1 - k] +
                                 " at edge " + G.edge_name(e));
        else if (a.cocycle[be.index].value() + b.cocycle[e.index].value() != 0)
          rep.add("cocycle", "cocycle identity fails for " + std::string(labels[k]) + "+" +
                                 labels[1 - k] + " at edge " + G.edge_name(e));
      }
    }
    if (!rep.ok()) return rep;
    // phi(g, e).v == g.v for generators; induction extends it to all of Z.
    for (int k = 0; k < 2; ++k) {
      GroupElem g(k == 0 ? 1 : -1);
      for (auto e : G.edge_ids())
        for (auto v : G.vertices())
          if (act.act(tables[k].cocycle[e.index], v) != tables[k].vertex_map[v.index]) {
            rep.add("vertex-compatibility", std::string(labels[k]) + ": phi(g," + G.edge_name(e) +
                                                ").v != g.v at vertex " + G.vertex_name(v));
            break;
          }
    }
    return rep;
  }

  if (auto grep = validate_group(grp); !grep.ok()) {
    rep.merge(grep);
    return rep;
  }
  const std::size_t n = grp.order();
  if (tables.size() != n) {
    rep.add("incomplete-table", "finite group action needs one table per element");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!well_shaped(G, tables[i])) {
      rep.add("incomplete-table", "element " + grp.names()[i] + ": table incomplete or out of range");
      return rep;
    }
    for (const auto& c : tables[i].cocycle)
      if (!grp.contains(c)) {
        rep.add("incomplete-table", "element " + grp.names()[i] + ": cocycle value outside the group");
        return rep;
      }
  }
  for (std::size_t i = 0; i < n; ++i) check_automorphism(G, tables[i], "element " + grp.names()[i], rep);
  if (!rep.ok()) return rep;

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = grp.raw_product(a, b);
      const auto& ta = tables[a];
      const auto& tb = tables[b];
      const auto& tab = tables[ab];
      std::string lbl = grp.names()[a] + "*" + grp.names()[b];
      for (auto v : G.vertices())
        if (ta.vertex_map[tb.vertex_map[v.index].index] != tab.vertex_map[v.index]) {
          rep.add("composition", "sigma_" + grp.names()[a] + " o sigma_" + grp.names()[b] +
                                     " != sigma_" + grp.names()[ab] + " at vertex " + G.vertex_name(v));
          break;
        }
      for (auto e : G.edge_ids()) {
        EdgeId be = tb.edge_map[e.index];
        if (ta.edge_map[be.index] != tab.edge_map[e.index]) {
          rep.add("composition", "sigma_" + grp.names()[a] + " o sigma_" + grp.names()[b] +
                                     " != sigma_" + grp.names()[ab] + " at edge " + G.edge_name(e));
          break;
        }
        // phi(ab, e) = phi(a, b.e) phi(b, e)
        GroupElem rhs = grp.mul(ta.cocycle[be.index], tb.cocycle[e.index]);
        if (rhs != tab.cocycle[e.index]) {
          rep.add("cocycle", "cocycle identity fails for " + lbl + " at edge " + G.edge_name(e));
          break;
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (auto e : G.edge_ids()) {
      const GroupElem& c = tables[a].cocycle[e.index];
      for (auto v : G.vertices())
        if (tables[c.index()].vertex_map[v.index] != tables[a].vertex_map[v.index]) {
          rep.add("vertex-compatibility", "element " + grp.names()[a] + ": phi(g," + G.edge_name(e) +
                                              ").v != g.v at vertex " + G.vertex_name(v));
          break;
        }
    }
  return rep;
}

std::shared_ptr<SelfSimilarAction> trivial_action(Graph graph) {
  ElementTable t;
  t.vertex_map = graph.vertices();
  t.edge_map = graph.edge_ids();
  t.cocycle.assign(graph.num_edges(), GroupElem(0));
  Group g = Group::finite({"e"}, {{0}});
  return std::make_shared<SelfSimilarAction>(std::move(graph), std::move(g),
                                             std::vector<ElementTable>{std::move(t)});
}

}  // namespace selfsim
