#include "selfsim/zero.hpp"

#include <map>
#include <stdexcept>

namespace selfsim {

namespace {

using Kind = ZeroVerdict::Kind;

struct Candidate {
  STriple triple;
  EvPath x;
};

class BlockDecider {
 public:
  BlockDecider(const SelfSimilarAction& act, const Ring& ring) : act_(act), ring_(ring) {}

  const FixedStructure& at(VertexId w) {
    auto it = cache_.find(w);
    if (it == cache_.end()) it = cache_.emplace(w, analyze_fixed(act_, w)).first;
    return it->second;
  }

  // Returns true when decided; sets `witness` when the block is nonzero.
  bool decide(const Path& alpha, const Path& beta,
              const std::vector<std::pair<GroupElem, Rational>>& block,
              std::optional<Candidate>& witness) {
    const Graph& G = act_.graph();
    const Group& grp = act_.group();
    VertexId w = alpha.source();
    const FixedStructure& fs = at(w);
    switch (fs.kind) {
      case FixedStructure::Kind::SomePathNotFixed: {
        // p_{w,g} are linearly independent: any nonzero coefficient is visible
        // at [(alpha,g,beta), beta (g^-1 . x0)].
        const GroupElem& g = block.front().first;
        std::optional<EvPath> z;
        if (act_.katsura() || grp.is_trivial())
          z = *fs.unfixed;
        else
          z = fs.unfixed->act(act_, grp.inverse(g));
        if (!z) return false;
        witness = Candidate{STriple::unchecked(alpha, g, beta), z->prepend(G, beta)};
        return true;
      }
      case FixedStructure::Kind::AllFixedFinite: {
        if (!fs.cylinders_disjoint) return false;
        // p_{w,m} = sum_gamma p_{U(m,gamma)}; U(m,gamma) = U(n,gamma) iff
        // gamma is strongly fixed by n m^-1, and distinct units are disjoint.
        for (const Path& gamma : fs.minimal) {
          std::vector<bool> used(block.size(), false);
          for (std::size_t i = 0; i < block.size(); ++i) {
            if (used[i]) continue;
            Rational sum = 0;
            for (std::size_t j = i; j < block.size(); ++j) {
              if (used[j]) continue;
              GroupElem q = grp.mul(block[j].first, grp.inverse(block[i].first));
              if (j == i || act_.strongly_fixes(q, gamma)) {
                used[j] = true;
                sum += block[j].second;
              }
            }
            if (!ring_.is_zero(ring_.normalize(sum))) {
              const GroupElem& m = block[i].first;
              Path mg = act_.act_on(grp.inverse(m), gamma);
              EvPath tail = some_lasso(G, mg.source()).prepend(G, mg);
              witness = Candidate{STriple::unchecked(alpha, m, beta), tail.prepend(G, beta)};
              return true;
            }
          }
        }
        return true;
      }
      case FixedStructure::Kind::Undetermined:
        return false;
    }
    return false;
  }

 private:
  const SelfSimilarAction& act_;
  const Ring& ring_;
  std::map<VertexId, FixedStructure> cache_;
};

ZeroVerdict scan(const SteinbergFn& f, const ZeroOptions& opt, ZeroVerdict v) {
  const Ring& ring = f.algebra().ring();
  for (const GermPoint& p : germ_test_set(f, opt.depth, opt.max_germs)) {
    ++v.germs_checked;
    Rational val;
    try {
      val = fn_eval(f, p, opt.germ);
    } catch (const EvaluationUndecided&) {
      ++v.germs_undecided;
      continue;
    }
    if (!ring.is_zero(val)) {
      v.kind = Kind::NonZero;
      v.witness = p;
      v.witness_value = val;
      return v;
    }
  }
  return v;
}

}  // namespace

ZeroVerdict elem_is_zero(const Element& a, const ZeroOptions& opt) {
  const Algebra& alg = a.algebra();
  const SelfSimilarAction& act = alg.action();
  const Ring& ring = alg.ring();
  ZeroVerdict v;
  v.route = act.katsura() ? "katsura route" : "graded reduction";
  if (a.empty()) {
    v.kind = Kind::Zero;
    v.route = "formal";
    v.detail = "no terms";
    return v;
  }

  BlockDecider decider(act, ring);
  bool decided = true;
  std::optional<Candidate> witness;
  for (const auto& [d, part] : alg.grade_decompose(a)) {
    std::size_t m2 = 0;
    for (const auto& [t, c] : part.terms()) m2 = std::max(m2, t.beta().length());
    Element X = alg.expand_to_depth(part, static_cast<std::size_t>(static_cast<long>(m2) + d), m2);
    std::map<std::pair<Path, Path>, std::vector<std::pair<GroupElem, Rational>>> blocks;
    for (const auto& [t, c] : X.terms()) blocks[{t.alpha(), t.beta()}].emplace_back(t.g(), c);
    for (const auto& [key, block] : blocks) {
      if (!decider.decide(key.first, key.second, block, witness)) decided = false;
      if (witness) break;
    }
    if (witness) break;
  }

  SteinbergFn f = pi_map(a);
  if (witness) {
    GermPoint p{witness->triple, witness->x};
    Rational val = fn_eval(f, p, opt.germ);
    if (ring.is_zero(val))
      throw std::logic_error("nonzero block witness " + format_germ(act, p) + " evaluates to 0");
    v.kind = Kind::NonZero;
    v.witness = p;
    v.witness_value = val;
    v.detail = "diagonal block is nonzero";
    return v;
  }
  if (decided) {
    v.kind = Kind::Zero;
    v.detail = "every diagonal block vanishes";
    if (opt.cross_check) {
      ZeroVerdict s = scan(f, opt, v);
      if (s.nonzero())
        throw std::logic_error("certified zero contradicted at " + format_germ(act, *s.witness));
      v.germs_checked = s.germs_checked;
      v.germs_undecided = s.germs_undecided;
    }
    return v;
  }
  v.route = "germ evaluation";
  v.detail = "no completeness condition verified; evaluated on the germ test set";
  return scan(f, opt, v);
}

ZeroVerdict fn_is_zero(const SteinbergFn& f, const ZeroOptions& opt) {
  return elem_is_zero(f.formal(), opt);
}

bool certified_equal(const Element& a, const Element& b, const ZeroOptions& opt) {
  if (a == b) return true;
  return elem_is_zero(a - b, opt).zero();
}

std::string_view to_string(ZeroVerdict::Kind k) {
  switch (k) {
    case Kind::Zero: return "Zero";
    case Kind::NonZero: return "NonZero";
    case Kind::ZeroUpToDepth: return "ZeroUpToDepth";
  }
  return "?";
}

}  // namespace selfsim
