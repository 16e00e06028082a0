#include "selfsim/katsura.hpp"
#include "selfsim/zero.hpp"

#include <algorithm>

namespace selfsim {

ValidationReport validate_katsura_spec(const KatsuraSpec& spec) {
  ValidationReport rep;
  const std::size_t N = spec.N;
  if (N == 0) rep.add("katsura-shape", "N must be positive");
  if (spec.A.size() != N || spec.B.size() != N) rep.add("katsura-shape", "A and B must have N rows");
  for (const auto& row : spec.A)
    if (row.size() != N) rep.add("katsura-shape", "A must be N x N");
  for (const auto& row : spec.B)
    if (row.size() != N) rep.add("katsura-shape", "B must be N x N");
  if (!rep.ok()) return rep;
  if (!spec.vertex_names.empty() && spec.vertex_names.size() != N)
    rep.add("katsura-shape", "vertex name list must have N entries");
  for (std::size_t i = 0; i < N; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < N; ++j) {
      if (spec.A[i][j] < 0)
        rep.add("katsura-negative", "A[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] is negative");
      sum += spec.A[i][j];
    }
    if (sum <= 0) rep.add("katsura-zero-row", "zero row in A at row " + std::to_string(i + 1));
  }
  return rep;
}

std::pair<BigInt, BigInt> katsura_divide(const KatsuraSpec& spec, std::size_t i, std::size_t j,
                                         const BigInt& n, const BigInt& m) {
  BigInt k, nhat;
  floor_divmod(m * spec.B[i][j] + n, spec.A[i][j], k, nhat);
  return {nhat, k};
}

std::shared_ptr<SelfSimilarAction> build_triple(const KatsuraSpec& spec, const KatsuraEdgeNames& names) {
  ValidationReport rep = validate_katsura_spec(spec);
  if (!rep.ok()) throw SemanticError(rep.violations.front().message);
  const std::size_t N = spec.N;
  Graph G;
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < N; ++i)
    vs.push_back(G.add_vertex(spec.vertex_names.empty() ? "v" + std::to_string(i + 1)
                                                       : spec.vertex_names[i]));
  KatsuraData data;
  data.spec = spec;
  std::map<std::tuple<std::size_t, std::size_t, BigInt>, EdgeId> index;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (BigInt n = 0; n < spec.A[i][j]; ++n) {
        auto key = std::make_tuple(i, j, n);
        auto it = names.find(key);
        std::string name = it != names.end() ? it->second
                                             : "e_" + G.vertex_name(vs[i]) + "_" + G.vertex_name(vs[j]) +
                                                   "_" + n.str();
        EdgeId e = G.add_edge(name, vs[i], vs[j]);
        index[key] = e;
        data.edges.push_back({i, j, n});
      }
  std::vector<ElementTable> tables(2);
  for (int k = 0; k < 2; ++k) {
    BigInt m = k == 0 ? 1 : -1;
    tables[k].vertex_map = G.vertices();
    for (const auto& ke : data.edges) {
      auto [nhat, q] = katsura_divide(spec, ke.i, ke.j, ke.n, m);
      tables[k].edge_map.push_back(index.at({ke.i, ke.j, nhat}));
      tables[k].cocycle.emplace_back(q);
    }
  }
  auto act = std::make_shared<SelfSimilarAction>(std::move(G), Group::integers(), std::move(tables));
  act->attach_katsura(std::move(data));
  return act;
}

namespace {

const KatsuraData& require_katsura(const SelfSimilarAction& act) {
  if (!act.katsura()) throw UnsupportedInstance("action was not built from Katsura matrices");
  return *act.katsura();
}

Rational edge_ratio(const KatsuraData& k, EdgeId e) {
  const auto& ke = k.edges[e.index];
  return Rational(k.spec.B[ke.i][ke.j], k.spec.A[ke.i][ke.j]);
}

bool b_zero(const KatsuraData& k, EdgeId e) {
  const auto& ke = k.edges[e.index];
  return k.spec.B[ke.i][ke.j] == 0;
}

// can_exit[v]: a B-zero edge is reachable from v through B-nonzero edges.
std::vector<bool> exit_reachability(const SelfSimilarAction& act, const KatsuraData& k) {
  const Graph& G = act.graph();
  std::vector<bool> can(G.num_vertices(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto v : G.vertices()) {
      if (can[v.index]) continue;
      for (EdgeId e : G.edges_into(v))
        if (b_zero(k, e) || can[G.source(e).index]) {
          can[v.index] = true;
          changed = true;
          break;
        }
    }
  }
  return can;
}

bool is_member(const SelfSimilarAction& act, const Path& p, const BigInt& l) {
  auto K = k_sequence(act, p, l);
  for (std::size_t j = 0; j + 1 < K.size(); ++j)
    if (!is_integral(K[j]) || K[j] == 0) return false;
  return K.back() == 0;
}

}  // namespace

std::vector<Rational> k_sequence(const SelfSimilarAction& act, const Path& a, const BigInt& l) {
  const KatsuraData& k = require_katsura(act);
  if (l == 0) throw SemanticError("l = 0 is not allowed: strongly fixed requires a nontrivial element");
  if (a.is_vertex()) throw SemanticError("K-sequence needs a nonempty path");
  std::vector<Rational> out;
  Rational K(l);
  for (EdgeId e : a.edges()) {
    K *= edge_ratio(k, e);
    out.push_back(K);
  }
  return out;
}

Path family_member(const Graph& g, const InfiniteFamily& f, std::size_t k) {
  Path p = f.stem;
  for (std::size_t i = 0; i < k; ++i) p = g.concat(p, f.cycle);
  return g.concat(p, f.exit);
}

std::string_view to_string(FixedPathVerdict::Kind k) {
  switch (k) {
    case FixedPathVerdict::Kind::Finite: return "Finite";
    case FixedPathVerdict::Kind::Infinite: return "Infinite";
    case FixedPathVerdict::Kind::ExhaustedAtDepth: return "ExhaustedAtDepth";
  }
  return "?";
}

FixedPathVerdict minimal_fixed_paths(const SelfSimilarAction& act, VertexId i, const BigInt& l,
                                     std::size_t max_len, std::size_t list_cap) {
  const KatsuraData& k = require_katsura(act);
  const Graph& G = act.graph();
  if (!G.contains(i)) throw SemanticError("unknown vertex id " + std::to_string(i.index));
  if (l == 0) throw SemanticError("l = 0 is not allowed: strongly fixed requires a nontrivial element");
  const std::vector<bool> can_exit = exit_reachability(act, k);

  FixedPathVerdict out;
  out.depth = max_len;

  // Phase 1: certificate search with exact K; positions hold (vertex, K) after p edges.
  struct Frame {
    VertexId v;
    Rational K;
    std::vector<std::vector<EdgeId>> loops;  // exact recurrences returning here
    std::optional<std::vector<EdgeId>> exit; // an emission below, relative to here
  };
  std::vector<Frame> stack{{i, Rational(l), {}, std::nullopt}};
  std::vector<EdgeId> edges;
  bool frontier = false;

  auto make_family = [&](std::size_t a, std::size_t b, std::vector<EdgeId> exit) {
    InfiniteFamily f;
    std::vector<EdgeId> stem(edges.begin(), edges.begin() + a);
    std::vector<EdgeId> cyc(edges.begin() + a, edges.begin() + b);
    f.stem = stem.empty() ? Path::vertex(i) : G.path(stem);
    f.cycle = G.path(cyc);
    f.exit = G.path(std::move(exit));
    f.k_min = is_member(act, family_member(G, f, 0), l) ? 0 : 1;
    return f;
  };

  auto rec = [&](auto&& self) -> void {
    if (out.family) return;
    VertexId c = stack.back().v;
    Rational K = stack.back().K;
    for (EdgeId e : G.edges_into(c)) {
      Rational K2 = K * edge_ratio(k, e);
      if (!is_integral(K2)) continue;
      edges.push_back(e);
      if (K2 == 0) {
        for (std::size_t p = 0; p < stack.size(); ++p)
          if (!stack[p].exit) stack[p].exit = std::vector<EdgeId>(edges.begin() + p, edges.end());
        // Divisibility certificate: positions a < b on one vertex with K_a | K_b.
        for (std::size_t b = 1; b < stack.size() && !out.family; ++b)
          for (std::size_t a = 0; a < b; ++a)
            if (stack[a].v == stack[b].v) {
              Rational r = stack[b].K / stack[a].K;
              if (is_integral(r) && r != 0) {
                out.family = make_family(a, b, std::vector<EdgeId>(edges.begin() + b, edges.end()));
                break;
              }
            }
      } else if (can_exit[G.source(e).index]) {
        auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) {
          return f.v == G.source(e) && f.K == K2;
        });
        if (it != stack.end()) {
          std::size_t a = static_cast<std::size_t>(it - stack.begin());
          it->loops.emplace_back(edges.begin() + a, edges.end());
        } else if (edges.size() >= max_len) {
          frontier = true;
        } else {
          stack.push_back({G.source(e), K2, {}, std::nullopt});
          self(self);
          Frame done = std::move(stack.back());
          stack.pop_back();
          // The popped frame sits after `edges`; its loops and exit are relative to it.
          if (!out.family && done.exit && !done.loops.empty()) {
            InfiniteFamily f;
            f.stem = G.path(edges);
            f.cycle = G.path(done.loops.front());
            f.exit = G.path(*done.exit);
            out.family = f;
          }
        }
      }
      edges.pop_back();
      if (out.family) return;
    }
  };
  rec(rec);
  // Loops registered at the root itself.
  if (!out.family && stack.front().exit && !stack.front().loops.empty()) {
    InfiniteFamily f;
    f.stem = Path::vertex(i);
    f.cycle = G.path(stack.front().loops.front());
    f.exit = G.path(*stack.front().exit);
    out.family = f;
  }

  // Phase 2: list members of length < max_len.
  std::vector<EdgeId> path;
  auto list = [&](auto&& self, VertexId c, const Rational& K) -> void {
    for (EdgeId e : G.edges_into(c)) {
      if (out.paths.size() >= list_cap) {
        out.listing_truncated = true;
        return;
      }
      Rational K2 = K * edge_ratio(k, e);
      if (!is_integral(K2)) continue;
      path.push_back(e);
      if (K2 == 0) {
        if (path.size() < max_len) out.paths.push_back(G.path(path));
      } else if (path.size() + 1 < max_len && can_exit[G.source(e).index]) {
        self(self, G.source(e), K2);
      }
      path.pop_back();
    }
  };
  list(list, i, Rational(l));
  std::sort(out.paths.begin(), out.paths.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });

  if (out.family)
    out.kind = FixedPathVerdict::Kind::Infinite;
  else if (frontier)
    out.kind = FixedPathVerdict::Kind::ExhaustedAtDepth;
  else
    out.kind = FixedPathVerdict::Kind::Finite;
  return out;
}

namespace {

struct FamilyGens {
  const Algebra& alg;
  const KatsuraData& k;
  std::map<std::tuple<std::size_t, std::size_t, BigInt>, EdgeId> index;

  FamilyGens(const Algebra& a, const KatsuraData& kd) : alg(a), k(kd) {
    for (std::uint32_t e = 0; e < k.edges.size(); ++e)
      index[{k.edges[e].i, k.edges[e].j, k.edges[e].n}] = EdgeId{e};
  }
  Element Q(std::size_t i) const { return alg.p(VertexId{static_cast<std::uint32_t>(i)}, GroupElem(0)); }
  Element U(std::size_t i) const { return alg.p(VertexId{static_cast<std::uint32_t>(i)}, GroupElem(1)); }
  // S_ijm = s_{e_ijn, q} with m = n + q A_ij.
  Element S(std::size_t i, std::size_t j, const BigInt& m) const {
    BigInt q, n;
    floor_divmod(m, k.spec.A[i][j], q, n);
    return alg.s(index.at({i, j, n}), GroupElem(q));
  }
};

}  // namespace

ValidationReport katsura_family_check(const Algebra& alg, long window) {
  const KatsuraData& k = require_katsura(alg.action());
  const std::size_t N = k.spec.N;
  const auto& A = k.spec.A;
  const auto& B = k.spec.B;
  FamilyGens gen(alg, k);
  ValidationReport rep;
  auto check = [&](const std::string& code, const std::string& what, const Element& lhs, const Element& rhs) {
    if (!certified_equal(lhs, rhs)) rep.add(code, what + ": " + alg.format(lhs) + " != " + alg.format(rhs));
  };
  auto nm = [](std::size_t i, std::size_t j, const BigInt& m) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + m.str() + ")";
  };

  for (std::size_t i = 0; i < N; ++i) {
    Element Q = gen.Q(i), U = gen.U(i);
    check("projection", "Q_k^2 = Q_k at k=" + std::to_string(i + 1), Q * Q, Q);
    check("projection", "Q_k* = Q_k at k=" + std::to_string(i + 1), adj(Q), Q);
    for (std::size_t j = 0; j < N; ++j)
      if (j != i) check("orthogonal", "Q_k Q_l = 0 at " + std::to_string(i + 1) + "," + std::to_string(j + 1), Q * gen.Q(j), alg.zero());
    check("partial-unitary", "U_k U_k* = Q_k at k=" + std::to_string(i + 1), U * adj(U), Q);
    check("partial-unitary", "U_k* U_k = Q_k at k=" + std::to_string(i + 1), adj(U) * U, Q);
  }
  for (std::size_t i = 0; i < N; ++i) {
    Element sum = alg.zero();
    for (std::size_t j = 0; j < N; ++j) {
      if (A[i][j] <= 0) continue;
      for (long mm = -window; mm <= window; ++mm) {
        BigInt m(mm);
        Element S = gen.S(i, j, m);
        check("dagger-i", "S_ijm U_j = S_ij(m+A_ij) at " + nm(i, j, m), S * gen.U(j), gen.S(i, j, m + A[i][j]));
        check("dagger-i", "U_i S_ijm = S_ij(m+B_ij) at " + nm(i, j, m), gen.U(i) * S, gen.S(i, j, m + B[i][j]));
        check("dagger-ii", "S_ijm* S_ijm = Q_j at " + nm(i, j, m), adj(S) * S, gen.Q(j));
        for (std::size_t j2 = 0; j2 < N; ++j2)
          if (j2 != j && A[i][j2] > 0)
            check("extra-orthogonality", "S_ijn* S_ij'n = 0 at " + nm(i, j, m) + " j'=" + std::to_string(j2 + 1),
                  adj(S) * gen.S(i, j2, m), alg.zero());
      }
      for (BigInt n = 1; n <= A[i][j]; ++n) {
        Element S = gen.S(i, j, n);
        sum += S * adj(S);
        for (BigInt n2 = n + 1; n2 <= A[i][j]; ++n2)
          check("extra-orthogonality", "S_ijn* S_ijn' = 0 at " + nm(i, j, n) + " n'=" + n2.str(),
                adj(S) * gen.S(i, j, n2), alg.zero());
      }
    }
    check("dagger-iii", "Q_i = sum S_ijn S_ijn* at i=" + std::to_string(i + 1), gen.Q(i), sum);
  }
  return rep;
}

}  // namespace selfsim
