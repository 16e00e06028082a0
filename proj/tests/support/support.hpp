#pragma once

#include "selfsim/algebra.hpp"
#include "selfsim/cli/spec_file.hpp"
#include "selfsim/steinberg.hpp"

#include <optional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace selfsim::testing {

// Spec files shipped in specs/.
cli::SpecFile load_fixture(const std::string& name);
std::vector<std::string> fixture_names();

// Deterministic generators; every suite seeds its own stream.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  long between(long lo, long hi);  // inclusive
  bool coin() { return between(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(between(0, static_cast<long>(v.size()) - 1))];
  }

  GroupElem group_elem(const Group& grp, long z_range = 4);
  VertexId vertex(const Graph& g);
  // Uniform walk of the given length with range v.
  Path path_from(const Graph& g, VertexId v, std::size_t len);
  Path path(const Graph& g, std::size_t max_len);
  // (alpha, g, beta) with |alpha|, |beta| <= max_len.
  STriple triple(const SelfSimilarAction& act, std::size_t max_len, long z_range = 4);
  // Exact-degree triple: |alpha| - |beta| == degree.
  STriple triple_of_degree(const SelfSimilarAction& act, long degree, std::size_t max_beta,
                           long z_range = 4);
  Element element(const Algebra& alg, std::size_t terms, std::size_t max_len, long coeff = 3,
                  long z_range = 4);
  // Row-finite, no sources, at most max_v vertices and max_e edges.
  Graph graph(std::size_t max_v, std::size_t max_e);

 private:
  std::mt19937_64 rng_;
};

// Leavitt path algebra over Q computed by rewriting words in x_e, y_e, p_v
// with p_v p_w = delta p_v, p_r(e) x_e = x_e p_s(e) = x_e,
// p_s(e) y_e = y_e p_r(e) = y_e and y_e x_f = delta p_s(e).
// Monomials are kept as words, never as (alpha, beta) pairs.
class LeavittOracle {
 public:
  explicit LeavittOracle(const Graph& g) : g_(g) {}

  struct Letter {
    enum Kind { P, X, Y } kind;
    std::uint32_t id;
    auto operator<=>(const Letter&) const = default;
  };
  using Word = std::vector<Letter>;
  using Poly = std::map<Word, long>;  // integer coefficients suffice for spanning terms

  // x_{alpha_1} ... x_{alpha_n} y_{beta_m} ... y_{beta_1}, or p_v for a vertex pair.
  Word monomial(const Path& alpha, const Path& beta) const;
  Poly multiply(const Poly& a, const Poly& b) const;
  // Reduced form of a word, nullopt when it is zero.
  std::optional<Word> reduce_word(const Word& w) const;
  std::optional<Word> multiply_words(const Word& a, const Word& b) const;
  // Reduce to words of the form x...x y...y or a single p_v; zero words dropped.
  Poly reduce(const Word& w) const;
  // Element of the algebra (trivial group) as a polynomial of monomials;
  // throws std::domain_error on a non-integer coefficient.
  Poly from_element(const Element& a) const;

 private:
  std::optional<Word> reduce_concat(const Word& w1, const Word& w2) const;

  const Graph& g_;
};

// (F * G)([s, x]) = sum over germs eta with source x of F(gamma eta^-1) G(eta),
// where the eta range over the germs [t, x] of G's terms, merged by germ_eq.
Rational convolve_at(const SteinbergFn& F, const SteinbergFn& G, const GermPoint& p);

// t . x for x in Z(beta of t).
EvPath act_triple(const SelfSimilarAction& act, const STriple& t, const EvPath& x);

}  // namespace selfsim::testing
