#include "selfsim/hausdorff.hpp"

#include "selfsim/evpath.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace selfsim {

std::string_view to_string(HausdorffVerdict::Kind k) {
  switch (k) {
    case HausdorffVerdict::Kind::Hausdorff: return "Hausdorff";
    case HausdorffVerdict::Kind::NonHausdorff: return "NonHausdorff";
    case HausdorffVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::vector<BigInt> prime_factors(BigInt n) {
  std::vector<BigInt> out;
  if (n < 0) n = -n;
  for (BigInt p = 2; p * p <= n && p < 1000000; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long valuation(BigInt n, const BigInt& p) {
  if (n < 0) n = -n;
  long v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

HausdorffVerdict katsura_is_hausdorff(const SelfSimilarAction& act, long l_bound, std::size_t max_len) {
  const KatsuraData* kd = act.katsura();
  if (!kd) throw UnsupportedInstance("action was not built from Katsura matrices");
  const Graph& G = act.graph();
  const std::size_t N = G.num_vertices();
  HausdorffVerdict out;

  for (long mag = 1; mag <= l_bound; ++mag)
    for (long sign : {1L, -1L})
      for (auto v : G.vertices()) {
        BigInt l(sign * mag);
        FixedPathVerdict fp = minimal_fixed_paths(act, v, l, max_len, 16);
        if (fp.kind == FixedPathVerdict::Kind::Infinite) {
          out.kind = HausdorffVerdict::Kind::NonHausdorff;
          out.g = GroupElem(l);
          out.vertex = v;
          out.family = fp.family;
          out.first_members = fp.paths;
          if (out.first_members.size() > 3) out.first_members.resize(3);
          out.report.push_back("infinitely many minimal strongly fixed paths for l=" + l.str() +
                               " with range " + G.vertex_name(v));
          return out;
        }
      }

  // Structural check over the B-nonzero subgraph (walk direction: range -> source).
  const auto& A = kd->spec.A;
  const auto& B = kd->spec.B;
  auto ij = [&](EdgeId e) { return std::make_pair(kd->edges[e.index].i, kd->edges[e.index].j); };
  std::vector<std::vector<bool>> reach(N, std::vector<bool>(N, false));
  for (auto e : G.edge_ids()) {
    auto [i, j] = ij(e);
    if (B[i][j] != 0) reach[i][j] = true;
  }
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        if (reach[a][k] && reach[k][b]) reach[a][b] = true;
  std::vector<bool> can_exit(N, false);
  for (auto e : G.edge_ids()) {
    auto [i, j] = ij(e);
    if (B[i][j] == 0) can_exit[i] = true;
  }
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (reach[a][b] && can_exit[b]) can_exit[a] = true;

  std::vector<bool> assigned(N, false);
  bool unresolved = false;
  for (std::size_t a = 0; a < N; ++a) {
    if (assigned[a] || !reach[a][a]) continue;
    std::vector<std::size_t> scc;
    for (std::size_t b = 0; b < N; ++b)
      if (reach[a][b] && reach[b][a]) {
        scc.push_back(b);
        assigned[b] = true;
      }
    if (!can_exit[a]) continue;
    std::set<std::size_t> in(scc.begin(), scc.end());
    std::vector<EdgeId> inner;
    std::set<BigInt> primes;
    for (auto e : G.edge_ids()) {
      auto [i, j] = ij(e);
      if (B[i][j] != 0 && in.count(i) && in.count(j)) {
        inner.push_back(e);
        for (const auto& p : prime_factors(A[i][j])) primes.insert(p);
      }
    }
    // Need a prime p with v_p(rho) < 0 on every cycle of the component.
    const long n = static_cast<long>(scc.size());
    std::map<std::size_t, std::size_t> local;
    for (std::size_t t = 0; t < scc.size(); ++t) local[scc[t]] = t;
    std::optional<BigInt> good;
    for (const BigInt& p : primes) {
      const long NEG = std::numeric_limits<long>::min() / 4;
      std::vector<std::vector<long>> d(scc.size(), std::vector<long>(scc.size(), NEG));
      for (EdgeId e : inner) {
        auto [i, j] = ij(e);
        long w = (n + 1) * (valuation(B[i][j], p) - valuation(A[i][j], p)) + 1;
        long& slot = d[local[i]][local[j]];
        slot = std::max(slot, w);
      }
      for (std::size_t k = 0; k < scc.size(); ++k)
        for (std::size_t x = 0; x < scc.size(); ++x)
          for (std::size_t y = 0; y < scc.size(); ++y)
            if (d[x][k] > NEG && d[k][y] > NEG) d[x][y] = std::max(d[x][y], d[x][k] + d[k][y]);
      bool nonneg_cycle = false;
      for (std::size_t x = 0; x < scc.size(); ++x)
        if (d[x][x] > 0) nonneg_cycle = true;
      if (!nonneg_cycle) {
        good = p;
        break;
      }
    }
    std::string names;
    for (auto b : scc) names += (names.empty() ? "" : " ") + G.vertex_name(VertexId{static_cast<std::uint32_t>(b)});
    if (good) {
      out.report.push_back("component {" + names + "}: every cycle ratio has negative " + good->str() +
                           "-adic valuation");
      continue;
    }
    unresolved = true;
    out.report.push_back("component {" + names + "} reaches a B-zero edge and has no prime bounding its cycles");
    for (auto b : scc) {
      VertexId v{static_cast<std::uint32_t>(b)};
      for (const Path& c : simple_cycles_at(G, v, scc.size())) {
        bool inside = std::all_of(c.edges().begin(), c.edges().end(), [&](EdgeId e) {
          auto [i, j] = ij(e);
          return B[i][j] != 0 && in.count(i) && in.count(j);
        });
        if (!inside || c.range().index != *std::min_element(scc.begin(), scc.end())) continue;
        Rational rho = 1;
        for (EdgeId e : c.edges()) {
          auto [i, j] = ij(e);
          rho *= Rational(B[i][j], A[i][j]);
        }
        out.report.push_back("  cycle " + G.format(c) + " ratio " + to_string(rho));
      }
    }
  }
  if (unresolved) {
    out.kind = HausdorffVerdict::Kind::Unknown;
    out.report.insert(out.report.begin(), "no infinite family for 0 < |l| <= " + std::to_string(l_bound) +
                                              " within length " + std::to_string(max_len));
    return out;
  }
  out.kind = HausdorffVerdict::Kind::Hausdorff;
  if (out.report.empty())
    out.report.push_back("no cycle of B-nonzero edges can reach a B-zero edge");
  return out;
}

std::optional<InfiniteFamily> finite_infinite_family(const SelfSimilarAction& act, const GroupElem& g,
                                                    VertexId v) {
  const Graph& G = act.graph();
  const Group& grp = act.group();
  if (!grp.is_finite()) throw UnsupportedInstance("finite_infinite_family needs a finite group");
  using State = std::pair<std::uint32_t, std::size_t>;  // (vertex, current cocycle)
  struct Step {
    EdgeId e;
    State to;
    bool emits;
  };
  auto steps = [&](const State& s) {
    std::vector<Step> r;
    GroupElem h(static_cast<long long>(s.second));
    for (EdgeId e : G.edges_into(VertexId{s.first})) {
      EdgeImage im = act.act(h, e);
      if (im.edge != e) continue;
      r.push_back({e, {G.source(e).index, im.cocycle.index()}, grp.is_identity(im.cocycle)});
    }
    return r;
  };
  if (grp.is_identity(g)) return std::nullopt;

  // Non-emitting transitions from (v, g), with BFS parent links for the stem.
  State s0{v.index, g.index()};
  std::map<State, std::pair<State, EdgeId>> parent;
  std::vector<State> order{s0};
  std::set<State> seen{s0};
  std::map<State, std::vector<Step>> adj;
  for (std::size_t q = 0; q < order.size(); ++q) {
    adj[order[q]] = steps(order[q]);
    for (const Step& st : adj[order[q]])
      if (!st.emits && seen.insert(st.to).second) {
        parent[st.to] = {order[q], st.e};
        order.push_back(st.to);
      }
  }
  // States that can still reach an emission, with a shortest-found exit.
  std::set<State> live;
  std::map<State, std::vector<EdgeId>> exit_from;
  for (bool changed = true; changed;) {
    changed = false;
    for (const State& s : order) {
      if (live.count(s)) continue;
      for (const Step& st : adj[s]) {
        if (st.emits) {
          exit_from[s] = {st.e};
        } else if (live.count(st.to)) {
          std::vector<EdgeId> p{st.e};
          p.insert(p.end(), exit_from[st.to].begin(), exit_from[st.to].end());
          exit_from[s] = p;
        } else {
          continue;
        }
        live.insert(s);
        changed = true;
        break;
      }
    }
  }
  // A cycle through live states gives infinitely many minimal paths.
  for (const State& s : order) {
    if (!live.count(s)) continue;
    std::map<State, std::pair<State, EdgeId>> par;
    std::deque<State> dq{s};
    std::set<State> vis{s};
    std::optional<std::vector<EdgeId>> cyc;
    while (!dq.empty() && !cyc) {
      State cur = dq.front();
      dq.pop_front();
      for (const Step& st : adj[cur]) {
        if (st.emits || !live.count(st.to)) continue;
        if (st.to == s) {
          std::vector<EdgeId> c{st.e};
          for (State x = cur; x != s; x = par[x].first) c.push_back(par[x].second);
          std::reverse(c.begin(), c.end());
          cyc = c;
          break;
        }
        if (vis.insert(st.to).second) {
          par[st.to] = {cur, st.e};
          dq.push_back(st.to);
        }
      }
    }
    if (!cyc) continue;
    std::vector<EdgeId> stem;
    for (State x = s; x != s0; x = parent[x].first) stem.push_back(parent[x].second);
    std::reverse(stem.begin(), stem.end());
    InfiniteFamily f;
    f.stem = stem.empty() ? Path::vertex(v) : G.path(stem);
    f.cycle = G.path(*cyc);
    f.exit = G.path(exit_from[s]);
    return f;
  }
  return std::nullopt;
}

HausdorffVerdict finite_is_hausdorff(const SelfSimilarAction& act) {
  const Graph& G = act.graph();
  const Group& grp = act.group();
  HausdorffVerdict out;
  for (const GroupElem& g : grp.elements())
    for (auto v : G.vertices()) {
      auto f = finite_infinite_family(act, g, v);
      if (!f) continue;
      out.kind = HausdorffVerdict::Kind::NonHausdorff;
      out.g = g;
      out.vertex = v;
      out.family = f;
      for (std::size_t k = 0; k < 3; ++k) out.first_members.push_back(family_member(G, *f, k));
      out.report.push_back("infinitely many minimal strongly fixed paths for g=" + grp.format(g) +
                           " with range " + G.vertex_name(v));
      return out;
    }
  out.kind = HausdorffVerdict::Kind::Hausdorff;
  out.report.push_back("finitely many minimal strongly fixed paths for every element and vertex");
  return out;
}

FixedPathVerdict bounded_fixed_paths(const SelfSimilarAction& act, VertexId v, const GroupElem& g,
                                     std::size_t max_len, std::size_t list_cap) {
  const Graph& G = act.graph();
  const Group& grp = act.group();
  FixedPathVerdict out;
  out.depth = max_len;
  if (grp.is_identity(g)) return out;  // minimal paths need g != e
  bool frontier = false;
  std::vector<EdgeId> path;
  // h = phi(g, path so far); every prefix is fixed by g.
  auto rec = [&](auto&& self, VertexId cur, const GroupElem& h) -> void {
    for (EdgeId e : G.edges_into(cur)) {
      EdgeImage im = act.act(h, e);
      if (im.edge != e) continue;
      path.push_back(e);
      if (grp.is_identity(im.cocycle)) {
        if (path.size() < max_len) {
          if (out.paths.size() < list_cap) out.paths.push_back(G.path(path));
          else out.listing_truncated = true;
        }
      } else if (path.size() + 1 < max_len) {
        self(self, G.source(e), im.cocycle);
      } else {
        frontier = true;
      }
      path.pop_back();
    }
  };
  rec(rec, v, g);
  std::sort(out.paths.begin(), out.paths.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  if (grp.is_finite()) {
    out.family = finite_infinite_family(act, g, v);
    if (out.family) out.kind = FixedPathVerdict::Kind::Infinite;
    else out.kind = FixedPathVerdict::Kind::Finite;
    return out;
  }
  out.kind = frontier ? FixedPathVerdict::Kind::ExhaustedAtDepth : FixedPathVerdict::Kind::Finite;
  return out;
}

HausdorffVerdict decide_hausdorff(const SelfSimilarAction& act, const HausdorffOptions& opt) {
  if (act.katsura()) {
    std::size_t len = opt.max_len ? opt.max_len : 2 * act.graph().num_vertices() + 8;
    return katsura_is_hausdorff(act, opt.l_bound, len);
  }
  if (act.group().is_finite()) return finite_is_hausdorff(act);
  HausdorffVerdict out;
  out.report.push_back("no decision procedure for a Z action without Katsura data");
  return out;
}

}  // namespace selfsim
