#pragma once

// Proper (k,l)-colorings and the bivariate chromatic polynomial chi_G(k, l).

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "signedchroma/graph.hpp"
#include "signedchroma/polynomial.hpp"

namespace signedchroma {

/// A color is a signed integer c with |c| <= k, or a symmetric zero 0_m
/// (1 <= m <= l-1), which is its own negative.
struct Color {
  int value = 0;
  bool symmetric_zero = false;

  [[nodiscard]] constexpr Color negated() const { return symmetric_zero ? *this : Color{-value, false}; }
  friend constexpr bool operator==(const Color&, const Color&) = default;
};

/// Colors of v_1..v_n; v_0 is 0 and v_{-i} = -f(v_i) implicitly.
using Coloring = std::vector<Color>;

inline Color color_of(const Coloring& f, int vertex) {
  if (vertex == 0) return {};
  const Color c = f[static_cast<std::size_t>(std::abs(vertex) - 1)];
  return vertex > 0 ? c : c.negated();
}

inline bool is_proper(const SymmetricGraph& g, const Coloring& f) {
  if (f.size() != static_cast<std::size_t>(g.pairs())) return false;
  for (const Edge& e : g.edges()) {
    if (color_of(f, e.u) == color_of(f, e.v)) return false;
  }
  return true;
}

namespace detail {

/// Colors are encoded as ints: -k..k are signed colors, k+m encodes 0_m.
template <class Counter>
class ColoringCounter {
 public:
  ColoringCounter(const SymmetricGraph& g, int k, int l) : k_(k), palette_(2 * k + l), n_(g.pairs()) {
    // Edges checked when their largest |index| endpoint is assigned.
    back_edges_.resize(static_cast<std::size_t>(n_) + 1);
    for (const Edge& e : g.edges()) {
      const int top = std::max(std::abs(e.u), std::abs(e.v));
      back_edges_[static_cast<std::size_t>(top)].push_back(e);
    }
    colors_.assign(static_cast<std::size_t>(n_) + 1, 0);
  }

  Counter run() { return descend(1); }

 private:
  [[nodiscard]] int color(int vertex) const {
    if (vertex == 0) return 0;
    const int c = colors_[static_cast<std::size_t>(std::abs(vertex))];
    if (vertex > 0 || c > k_) return c;
    return -c;
  }

  [[nodiscard]] bool consistent(int index) const {
    for (const Edge& e : back_edges_[static_cast<std::size_t>(index)]) {
      if (color(e.u) == color(e.v)) return false;
    }
    return true;
  }

  Counter descend(int index) {
    if (index > n_) return Counter(1);
    Counter total(0);
    for (int code = 0; code < palette_; ++code) {
      colors_[static_cast<std::size_t>(index)] = code - k_;
      if (consistent(index)) total += descend(index + 1);
    }
    return total;
  }

  int k_;
  int palette_;
  int n_;
  std::vector<std::vector<Edge>> back_edges_;
  std::vector<int> colors_;
};

}  // namespace detail

/// Number of proper (k,l)-colorings, by exhaustive search over indices 1..n
/// in increasing order with prefix pruning.
inline Integer count_proper_colorings(const SymmetricGraph& g, int k, int l) {
  if (k < 0 || l < 1) throw PreconditionError("colorings need k >= 0 and l >= 1");
  const Integer bound = detail::power(Integer(2 * k + l), g.pairs());
  if (bound <= std::numeric_limits<std::uint64_t>::max()) {
    return Integer(detail::ColoringCounter<std::uint64_t>(g, k, l).run());
  }
  return detail::ColoringCounter<Integer>(g, k, l).run();
}

/// (2k+l)^a (2k+l-1)^b (2k)^c for a graph without contractible edges.
inline BivariatePolynomial base_case_factorization(const SymmetricGraph& g) {
  if (!contractible_edges(g).empty()) {
    throw PreconditionError("base case factorization requires a graph without contractible edges");
  }
  const BivariatePolynomial k = BivariatePolynomial::k();
  const BivariatePolynomial l = BivariatePolynomial::l();
  BivariatePolynomial out = 1;
  for (int i = 1; i <= g.pairs(); ++i) {
    if (g.has_edge(i, -i)) {
      out *= 2 * k;
    } else if (g.has_edge(0, i)) {
      out *= 2 * k + l - 1;
    } else {
      out *= 2 * k + l;
    }
  }
  return out;
}

enum class ChromaticMethod { deletion_contraction, interpolation };

namespace detail {

inline BivariatePolynomial deletion_contraction(const SymmetricGraph& g,
                                                std::map<SymmetricGraph, BivariatePolynomial>& memo) {
  if (const auto it = memo.find(g); it != memo.end()) return it->second;
  const auto contractible = contractible_edges(g);
  BivariatePolynomial result;
  if (contractible.empty()) {
    result = base_case_factorization(g);
  } else {
    const Edge& e = contractible.front();
    result = deletion_contraction(delete_edge_pair(g, e), memo) - deletion_contraction(contract(g, e), memo);
  }
  memo.emplace(g, result);
  return result;
}

}  // namespace detail

inline BivariatePolynomial chromatic_polynomial(const SymmetricGraph& g,
                                                ChromaticMethod method = ChromaticMethod::deletion_contraction) {
  if (method == ChromaticMethod::deletion_contraction) {
    std::map<SymmetricGraph, BivariatePolynomial> memo;
    return detail::deletion_contraction(g, memo);
  }
  const int n = g.pairs();
  std::vector<BivariateSample> samples;
  for (int k = 1; k <= n + 1; ++k) {
    for (int l = 1; l <= n + 1; ++l) samples.push_back({k, l, count_proper_colorings(g, k, l)});
  }
  return interpolate_bivariate(samples, n);
}

/// (-1)^n p(k, l).
inline Integer signed_evaluation(const BivariatePolynomial& p, int n, const Integer& k, const Integer& l) {
  const Integer value = p.evaluate(k, l);
  return n % 2 == 0 ? value : Integer(-value);
}

struct MainInvariant {
  Integer acyc_eval;     ///< (-1)^n chi_G(-1, 1)
  Integer classes_eval;  ///< (-1)^n chi_G(-1, 2)
};

inline MainInvariant main_invariant(const SymmetricGraph& g) {
  const auto chi = chromatic_polynomial(g);
  return {signed_evaluation(chi, g.pairs(), -1, 1), signed_evaluation(chi, g.pairs(), -1, 2)};
}

/// Sum over independent I (avoiding S) of (-1)^{|I|} * acyc_counter(G - I).
template <class AcycCounter>
Integer alternating_acyc_sum(const FrozenGraph& gamma, AcycCounter&& acyc_counter) {
  Integer total = 0;
  for (const IndexSet& indices : independent_index_sets(gamma)) {
    const Integer term = acyc_counter(delete_index_set(gamma.graph, indices));
    if (indices.size() % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Sum over independent I of chi_{G-I}(k, 1); equals chi_G(k, 2).
inline Integer independent_split_count(const SymmetricGraph& g, int k) {
  Integer total = 0;
  for (const IndexSet& indices : independent_index_sets(FrozenGraph(g))) {
    total += count_proper_colorings(delete_index_set(g, indices), k, 1);
  }
  return total;
}

}  // namespace signedchroma
