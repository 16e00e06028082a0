#pragma once

#include "selfsim/algebra.hpp"
#include "selfsim/fixed.hpp"

#include <string>
#include <vector>

namespace selfsim {

// The unit U_(m, gamma) for m in ms and gamma in F_u, with triple
// (gamma, phi(m^-1, gamma)^-1, m^-1.gamma) and p_U its algebra element.
struct PartitionUnit {
  GroupElem m;
  std::size_t gamma = 0;  // index into PartitionReport::minimal
  STriple triple;
  Element p_U;
  std::size_t cls = 0;    // index into PartitionReport::classes[gamma]
};

struct PartitionReport {
  bool applicable = true;
  std::string note;
  VertexId u;
  std::vector<Path> minimal;  // F_u
  std::vector<GroupElem> ms;
  std::vector<PartitionUnit> units;
  // classes[gamma][c] lists the m with equal units for that gamma
  std::vector<std::vector<std::vector<GroupElem>>> classes;
  // p_{u,m} = sum_gamma p_U, certified per m
  std::vector<bool> identity_holds;
  // Equal-class units have certified equal p_U
  bool class_elements_equal = true;
};

// Throws UnsupportedInstance when F_u is infinite, undetermined, or has
// overlapping cylinders. A trivial group gives applicable = false.
PartitionReport partition_units(const Algebra& alg, VertexId u, const std::vector<GroupElem>& ms,
                                std::size_t enum_cap = 100000);

// Coefficient of sum_m c_m p_{u,m} on each class, keyed like classes.
std::vector<std::vector<Rational>> class_coefficients(const PartitionReport& rep,
                                                      const std::vector<Rational>& coeffs);

}  // namespace selfsim
