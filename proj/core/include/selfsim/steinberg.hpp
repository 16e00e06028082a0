#pragma once

#include "selfsim/algebra.hpp"
#include "selfsim/germ.hpp"

#include <vector>

namespace selfsim {

// sum c_s 1_{Theta_s}, stored with the same keys as the spanning form.
class SteinbergFn {
 public:
  explicit SteinbergFn(Element formal) : formal_(std::move(formal)) {}

  const Algebra& algebra() const { return formal_.algebra(); }
  const Element::Terms& terms() const { return formal_.terms(); }
  const Element& formal() const { return formal_; }

  SteinbergFn operator+(const SteinbergFn& o) const { return SteinbergFn(formal_ + o.formal_); }
  SteinbergFn operator-(const SteinbergFn& o) const { return SteinbergFn(formal_ - o.formal_); }
  // 1_{Theta_s} 1_{Theta_t} = 1_{Theta_{st}}
  SteinbergFn operator*(const SteinbergFn& o) const { return SteinbergFn(formal_ * o.formal_); }
  SteinbergFn star() const { return SteinbergFn(adj(formal_)); }

 private:
  Element formal_;
};

SteinbergFn pi_map(const Element& a);
// 1_{Theta_s}
SteinbergFn indicator(const Algebra& alg, const STriple& s, const Rational& c = 1);

// Sum of c_t over terms t whose bisection contains [p.s, p.x].
// Throws EvaluationUndecided naming the offending term.
Rational fn_eval(const SteinbergFn& f, const GermPoint& p, const GermOptions& opt = {});

// For every term (alpha,g,beta): germs [(alpha,g,beta), beta mu rho^inf] with
// |mu| + |rho| <= depth, rho a simple cycle. Deduplicated, deterministic order.
std::vector<GermPoint> germ_test_set(const SteinbergFn& f, std::size_t depth,
                                     std::size_t max_points = 20000);
// Points x = beta mu rho^inf for a single cylinder.
std::vector<EvPath> cylinder_test_points(const Graph& g, const Path& beta, std::size_t depth,
                                         std::size_t max_points = 20000);

}  // namespace selfsim
