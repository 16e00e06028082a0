#pragma once

#include "selfsim/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace selfsim {

// One orbit G.v of the vertex action and its block of the diagonal subalgebra.
struct OrbitBlock {
  VertexId rep;
  std::vector<VertexId> orbit;
  std::vector<GroupElem> transversal;  // g_w . v = w, g_v = e
  // Z: Stab_v = period * Z. Finite: the listed elements.
  std::optional<BigInt> period;
  std::vector<GroupElem> stabilizer;
  // units[a][b] = e_{w_a, w_b} = p_{w_a, g_a g_b^-1}
  std::vector<std::vector<Element>> units;
  // W_v^g = sum_w p_{w, g_w g g_w^-1} for the reported generators g
  std::vector<GroupElem> w_generators;
  std::vector<Element> w_elements;
  bool units_ok = true;       // e_{w,w'} e_{u,u'} = delta_{w',u} e_{w,u'}
  bool star_ok = true;        // e_{w,w'}^* = e_{w',w}
  bool group_law_ok = true;   // W^g W^h = W^{gh}
  std::vector<std::string> failures;
  std::string summary;        // e.g. "M_2(R)"
};

struct DiagonalStructure {
  std::vector<OrbitBlock> blocks;
  std::string summary;
  bool ok() const;
};

// reps empty means one block per orbit. Z group laws are checked on
// multiples k * period with |k| <= window.
DiagonalStructure diagonal_report(const Algebra& alg, const std::vector<VertexId>& reps = {},
                                  long window = 2);

}  // namespace selfsim
