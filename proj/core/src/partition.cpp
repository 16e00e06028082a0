#include "selfsim/partition.hpp"

#include "selfsim/error.hpp"
#include "selfsim/zero.hpp"

namespace selfsim {

PartitionReport partition_units(const Algebra& alg, VertexId u, const std::vector<GroupElem>& ms,
                                std::size_t enum_cap) {
  const SelfSimilarAction& act = alg.action();
  const Graph& G = act.graph();
  const Group& grp = act.group();
  PartitionReport rep;
  rep.u = u;
  rep.ms = ms;
  if (grp.is_trivial()) {
    rep.applicable = false;
    rep.note = "trivial group: no strongly fixed paths, F_u is empty";
    return rep;
  }
  FixedStructure fs = analyze_fixed(act, u, enum_cap);
  if (fs.kind != FixedStructure::Kind::AllFixedFinite || !fs.minimal_complete)
    throw UnsupportedInstance("minimal strongly fixed paths with range " + G.vertex_name(u) +
                              " are not a finite complete set" +
                              (fs.note.empty() ? "" : ": " + fs.note));
  if (!fs.cylinders_disjoint)
    throw UnsupportedInstance("cylinders of minimal strongly fixed paths at " + G.vertex_name(u) +
                              " overlap");
  rep.minimal = fs.minimal;
  rep.classes.resize(rep.minimal.size());

  for (std::size_t gi = 0; gi < rep.minimal.size(); ++gi) {
    const Path& gamma = rep.minimal[gi];
    auto& cls = rep.classes[gi];
    for (const GroupElem& m : ms) {
      GroupElem minv = grp.inverse(m);
      auto [img, phi] = act.act_path(minv, gamma);
      PartitionUnit unit;
      unit.m = m;
      unit.gamma = gi;
      unit.triple = STriple(act, gamma, grp.inverse(phi), img);
      unit.p_U = alg.term(unit.triple);
      // m ~ n iff gamma is strongly fixed by n m^-1 (a right coset relation).
      std::size_t c = 0;
      for (; c < cls.size(); ++c)
        if (act.strongly_fixes(grp.mul(cls[c].front(), minv), gamma)) break;
      if (c == cls.size()) cls.emplace_back();
      cls[c].push_back(m);
      unit.cls = c;
      rep.units.push_back(std::move(unit));
    }
  }

  for (std::size_t i = 0; i < rep.units.size(); ++i)
    for (std::size_t j = i + 1; j < rep.units.size(); ++j) {
      const auto& a = rep.units[i];
      const auto& b = rep.units[j];
      if (a.gamma == b.gamma && a.cls == b.cls && !certified_equal(a.p_U, b.p_U))
        rep.class_elements_equal = false;
    }

  for (const GroupElem& m : ms) {
    Element sum = alg.zero();
    for (const auto& unit : rep.units)
      if (unit.m == m) sum += unit.p_U;
    rep.identity_holds.push_back(certified_equal(alg.p(u, m), sum));
  }
  return rep;
}

std::vector<std::vector<Rational>> class_coefficients(const PartitionReport& rep,
                                                      const std::vector<Rational>& coeffs) {
  if (coeffs.size() != rep.ms.size())
    throw Error("class_coefficients: expected " + std::to_string(rep.ms.size()) + " coefficients");
  std::vector<std::vector<Rational>> out(rep.classes.size());
  for (std::size_t g = 0; g < rep.classes.size(); ++g) out[g].assign(rep.classes[g].size(), 0);
  for (const auto& unit : rep.units) {
    std::size_t k = 0;
    while (!(rep.ms[k] == unit.m)) ++k;
    out[unit.gamma][unit.cls] += coeffs[k];
  }
  return out;
}

}  // namespace selfsim
