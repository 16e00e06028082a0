#pragma once

#include "selfsim/action.hpp"
#include "selfsim/algebra.hpp"
#include "selfsim/katsura_spec.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace selfsim {

ValidationReport validate_katsura_spec(const KatsuraSpec& spec);

// Edge names keyed by (i, j, n); missing entries default to e_<r>_<s>_<n>.
using KatsuraEdgeNames = std::map<std::tuple<std::size_t, std::size_t, BigInt>, std::string>;

// Throws SemanticError when the spec is invalid (zero row in A, negative A, shape).
std::shared_ptr<SelfSimilarAction> build_triple(const KatsuraSpec& spec,
                                                const KatsuraEdgeNames& names = {});

// Direct Euclidean division m B_ij + n = k A_ij + n_hat: (n_hat, k).
std::pair<BigInt, BigInt> katsura_divide(const KatsuraSpec& spec, std::size_t i, std::size_t j,
                                         const BigInt& n, const BigInt& m);

// K_j = l prod B / prod A along a, exactly. Throws on l = 0 or a vertex path.
std::vector<Rational> k_sequence(const SelfSimilarAction& act, const Path& a, const BigInt& l);

// stem cycle^k exit is a minimal strongly fixed path for every k >= k_min.
struct InfiniteFamily {
  Path stem;
  Path cycle;
  Path exit;
  std::size_t k_min = 0;
};

Path family_member(const Graph& g, const InfiniteFamily& f, std::size_t k);

struct FixedPathVerdict {
  enum class Kind { Finite, Infinite, ExhaustedAtDepth };
  Kind kind = Kind::Finite;
  std::vector<Path> paths;  // members of length < max_len, sorted
  std::optional<InfiniteFamily> family;
  std::size_t depth = 0;
  bool listing_truncated = false;
};

std::string_view to_string(FixedPathVerdict::Kind k);

// Minimal strongly fixed paths for l with range v_i.
FixedPathVerdict minimal_fixed_paths(const SelfSimilarAction& act, VertexId i, const BigInt& l,
                                     std::size_t max_len, std::size_t list_cap = 10000);

// Q_k, U_k, S_ijm relations and the extra orthogonality relations for |m| <= window.
ValidationReport katsura_family_check(const Algebra& alg, long window = 4);

}  // namespace selfsim
