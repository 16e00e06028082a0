#include "selfsim/diagonal.hpp"

#include "selfsim/error.hpp"
#include "selfsim/zero.hpp"

#include <algorithm>
#include <map>

namespace selfsim {

bool DiagonalStructure::ok() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const OrbitBlock& b) { return b.units_ok && b.star_ok && b.group_law_ok; });
}

namespace {

void orbit_of(const SelfSimilarAction& act, OrbitBlock& blk) {
  const Group& grp = act.group();
  const VertexId v = blk.rep;
  if (grp.is_finite()) {
    std::map<VertexId, GroupElem> seen{{v, grp.identity()}};
    blk.orbit.push_back(v);
    blk.transversal.push_back(grp.identity());
    for (const GroupElem& g : grp.elements()) {
      VertexId w = act.act(g, v);
      if (w == v) blk.stabilizer.push_back(g);
      if (seen.emplace(w, g).second) {
        blk.orbit.push_back(w);
        blk.transversal.push_back(g);
      }
    }
    return;
  }
  // Z: follow sigma_1 until it returns to v.
  const std::size_t cap = act.graph().num_vertices();
  VertexId w = v;
  for (long k = 0;; ++k) {
    if (k > 0 && w == v) {
      blk.period = BigInt(k);
      return;
    }
    if (static_cast<std::size_t>(k) >= cap)
      throw UnsupportedInstance("infinite orbit at vertex " + act.graph().vertex_name(v));
    blk.orbit.push_back(w);
    blk.transversal.push_back(GroupElem(k));
    w = act.act(GroupElem(1), w);
  }
}

Element w_element(const Algebra& alg, const OrbitBlock& blk, const GroupElem& g) {
  const Group& grp = alg.group();
  Element sum = alg.zero();
  for (std::size_t a = 0; a < blk.orbit.size(); ++a) {
    const GroupElem& gw = blk.transversal[a];
    sum += alg.p(blk.orbit[a], grp.mul(grp.mul(gw, g), grp.inverse(gw)));
  }
  return sum;
}

}  // namespace

DiagonalStructure diagonal_report(const Algebra& alg, const std::vector<VertexId>& reps,
                                  long window) {
  const SelfSimilarAction& act = alg.action();
  const Graph& G = act.graph();
  const Group& grp = act.group();
  DiagonalStructure out;

  std::vector<VertexId> todo = reps;
  if (todo.empty()) {
    std::vector<bool> covered(G.num_vertices(), false);
    for (auto v : G.vertices()) {
      if (covered[v.index]) continue;
      OrbitBlock probe;
      probe.rep = v;
      orbit_of(act, probe);
      for (auto w : probe.orbit) covered[w.index] = true;
      todo.push_back(v);
    }
  }

  std::string ring = alg.ring().name();
  for (VertexId v : todo) {
    OrbitBlock blk;
    blk.rep = v;
    orbit_of(act, blk);
    const std::size_t n = blk.orbit.size();

    blk.units.assign(n, {});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        blk.units[a].push_back(
            alg.p(blk.orbit[a], grp.mul(blk.transversal[a], grp.inverse(blk.transversal[b]))));

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!certified_equal(alg.star(blk.units[a][b]), blk.units[b][a])) {
          blk.star_ok = false;
          blk.failures.push_back("star of e_{" + G.vertex_name(blk.orbit[a]) + "," +
                                 G.vertex_name(blk.orbit[b]) + "}");
        }
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d) {
            Element lhs = blk.units[a][b] * blk.units[c][d];
            Element rhs = b == c ? blk.units[a][d] : alg.zero();
            if (!certified_equal(lhs, rhs)) {
              blk.units_ok = false;
              blk.failures.push_back("e_{" + G.vertex_name(blk.orbit[a]) + "," +
                                     G.vertex_name(blk.orbit[b]) + "} e_{" +
                                     G.vertex_name(blk.orbit[c]) + "," +
                                     G.vertex_name(blk.orbit[d]) + "}");
            }
          }
      }

    std::vector<GroupElem> law;  // elements the group law is checked on
    if (blk.period) {
      blk.w_generators = {GroupElem(*blk.period)};
      for (long k = -window; k <= window; ++k) law.push_back(GroupElem(BigInt(k) * *blk.period));
    } else {
      blk.w_generators = blk.stabilizer;
      law = blk.stabilizer;
    }
    for (const auto& g : blk.w_generators) blk.w_elements.push_back(w_element(alg, blk, g));
    for (const auto& g : law)
      for (const auto& h : law) {
        Element lhs = w_element(alg, blk, g) * w_element(alg, blk, h);
        if (!certified_equal(lhs, w_element(alg, blk, grp.mul(g, h)))) {
          blk.group_law_ok = false;
          blk.failures.push_back("W^" + grp.format(g) + " W^" + grp.format(h));
        }
      }

    bool trivial_stab = blk.period ? false : blk.stabilizer.size() == 1;
    std::string inner = trivial_stab ? ring : "W_" + G.vertex_name(v);
    blk.summary = n == 1 ? inner : "M_" + std::to_string(n) + "(" + inner + ")";
    out.summary += (out.summary.empty() ? "" : " + ") + blk.summary;
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

}  // namespace selfsim
