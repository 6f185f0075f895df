#pragma once

// Symmetric graphs on vertices v_{-n}..v_n, the signed-graph correspondence,
// and the graph surgeries (edge-pair deletion, contraction, index deletion).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <initializer_list>
#include <utility>
#include <vector>

#include "signedchroma/errors.hpp"

namespace signedchroma {

using IndexSet = std::set<int>;

/// Undirected edge {u, v}, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  [[nodiscard]] constexpr Edge mirror() const { return Edge(-u, -v); }
  [[nodiscard]] constexpr bool self_mirrored() const { return u == -v; }
  [[nodiscard]] constexpr bool touches(int x) const { return u == x || v == x; }
  [[nodiscard]] constexpr int other(int x) const { return u == x ? v : u; }

  /// Member of {e, -e} whose endpoint of largest absolute value is positive.
  [[nodiscard]] constexpr Edge representative() const {
    return std::abs(u) > std::abs(v) ? mirror() : *this;
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonical order of orbit representatives: by the positive endpoint, then
/// by |other endpoint|, positive before negative.
struct OrbitOrder {
  [[nodiscard]] constexpr bool operator()(const Edge& a, const Edge& b) const {
    const auto key = [](const Edge& e) {
      return std::tuple(e.v, std::abs(e.u), e.u < 0);
    };
    return key(a) < key(b);
  }
};

inline std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

class SymmetricGraph {
 public:
  SymmetricGraph() { rebuild(); }
  explicit SymmetricGraph(int pairs) : n_(pairs) {
    if (pairs < 0) throw PreconditionError("number of vertex pairs must be nonnegative");
    rebuild();
  }

  /// Builds the symmetric closure of `edges`; duplicates are merged.
  SymmetricGraph(int pairs, std::span<const Edge> edges) : n_(pairs) {
    if (pairs < 0) throw PreconditionError("number of vertex pairs must be nonnegative");
    for (const Edge& e : edges) {
      if (e.u == e.v) {
        throw PreconditionError("loop edge " + to_string(e) + " is not allowed");
      }
      if (std::abs(e.u) > n_ || std::abs(e.v) > n_) {
        throw PreconditionError("edge " + to_string(e) + " out of range for n=" +
                                std::to_string(n_));
      }
      edges_.push_back(e);
      edges_.push_back(e.mirror());
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    rebuild();
  }

  SymmetricGraph(int pairs, std::initializer_list<std::pair<int, int>> edges)
      : SymmetricGraph(pairs, to_edges(edges)) {}

  [[nodiscard]] int pairs() const { return n_; }
  [[nodiscard]] int vertex_count() const { return 2 * n_ + 1; }

  /// All edges, mirrors included, sorted.
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  /// One representative per mirror orbit, in OrbitOrder.
  [[nodiscard]] const std::vector<Edge>& orbits() const { return orbits_; }

  [[nodiscard]] bool has_edge(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }
  [[nodiscard]] bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Index into orbits() of the orbit containing e; -1 if e is absent.
  [[nodiscard]] int orbit_index(const Edge& e) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return edge_orbit_[static_cast<std::size_t>(it - edges_.begin())];
  }

  [[nodiscard]] const std::vector<int>& neighbors(int vertex) const {
    return adjacency_[static_cast<std::size_t>(vertex + n_)];
  }
  [[nodiscard]] bool is_isolated(int vertex) const { return neighbors(vertex).empty(); }

  /// Canonical one-line description, e.g. "n=2;{-1,-2}..." with orbit representatives.
  [[nodiscard]] std::string digest() const {
    std::string out = "n=" + std::to_string(n_);
    for (const Edge& e : orbits_) out += ";" + to_string(e);
    return out;
  }

  friend bool operator==(const SymmetricGraph& a, const SymmetricGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const SymmetricGraph& a, const SymmetricGraph& b) {
    return std::tie(a.n_, a.edges_) < std::tie(b.n_, b.edges_);
  }

 private:
  static std::vector<Edge> to_edges(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Edge> out;
    out.reserve(list.size());
    for (const auto& [a, b] : list) out.emplace_back(a, b);
    return out;
  }

  void rebuild() {
    orbits_.clear();
    for (const Edge& e : edges_) {
      if (e.representative() == e) orbits_.push_back(e);
    }
    std::sort(orbits_.begin(), orbits_.end(), OrbitOrder{});
    edge_orbit_.assign(edges_.size(), -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge rep = edges_[i].representative();
      const auto it = std::lower_bound(orbits_.begin(), orbits_.end(), rep, OrbitOrder{});
      edge_orbit_[i] = static_cast<int>(it - orbits_.begin());
    }
    adjacency_.assign(static_cast<std::size_t>(vertex_count()), {});
    for (const Edge& e : edges_) {
      adjacency_[static_cast<std::size_t>(e.u + n_)].push_back(e.v);
      adjacency_[static_cast<std::size_t>(e.v + n_)].push_back(e.u);
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Edge> orbits_;
  std::vector<int> edge_orbit_;
  std::vector<std::vector<int>> adjacency_;
};

/// A symmetric graph together with frozen pair indices S ⊆ {1..n}.
struct FrozenGraph {
  SymmetricGraph graph;
  IndexSet frozen;

  FrozenGraph() = default;
  explicit FrozenGraph(SymmetricGraph g, IndexSet s = {}) : graph(std::move(g)), frozen(std::move(s)) {
    for (int i : frozen) {
      if (i < 1 || i > graph.pairs()) {
        throw PreconditionError("frozen index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(graph.pairs()));
      }
    }
  }

  [[nodiscard]] bool is_frozen_index(int i) const { return frozen.contains(i); }
  [[nodiscard]] bool is_frozen_vertex(int v) const { return v != 0 && frozen.contains(std::abs(v)); }

  friend bool operator==(const FrozenGraph&, const FrozenGraph&) = default;
};

/// Signed graph on vertices u_1..u_m. Links are stored as (min, max).
struct SignedGraph {
  int m = 0;
  std::set<std::pair<int, int>> positive_links;
  std::set<std::pair<int, int>> negative_links;
  std::set<int> negative_loops;
  std::set<int> half_edges;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

inline void check_signed(const SignedGraph& s) {
  if (s.m < 0) throw PreconditionError("signed graph vertex count must be nonnegative");
  const auto in_range = [&](int i) { return i >= 1 && i <= s.m; };
  for (const auto* links : {&s.positive_links, &s.negative_links}) {
    for (const auto& [a, b] : *links) {
      if (!in_range(a) || !in_range(b) || a >= b) {
        throw PreconditionError("invalid link " + std::to_string(a) + "-" + std::to_string(b));
      }
    }
  }
  for (const auto* singles : {&s.negative_loops, &s.half_edges}) {
    for (int i : *singles) {
      if (!in_range(i)) throw PreconditionError("vertex index " + std::to_string(i) + " out of range");
    }
  }
}

/// Maps old pair index (0..n) to its index after deleting `removed`; 0 for removed pairs.
inline std::vector<int> relabel_after_deletion(int n, const IndexSet& removed) {
  std::vector<int> map(static_cast<std::size_t>(n) + 1, 0);
  int next = 1;
  for (int i = 1; i <= n; ++i) {
    if (!removed.contains(i)) map[static_cast<std::size_t>(i)] = next++;
  }
  return map;
}

inline int relabel_vertex(const std::vector<int>& map, int v) {
  const int image = map[static_cast<std::size_t>(std::abs(v))];
  return v < 0 ? -image : image;
}

}  // namespace detail

inline SymmetricGraph signed_to_symmetric(const SignedGraph& s) {
  detail::check_signed(s);
  std::vector<Edge> edges;
  for (const auto& [i, j] : s.positive_links) edges.emplace_back(i, j);
  for (const auto& [i, j] : s.negative_links) edges.emplace_back(i, -j);
  for (int i : s.negative_loops) edges.emplace_back(i, -i);
  for (int i : s.half_edges) edges.emplace_back(0, i);
  return SymmetricGraph(s.m, edges);
}

inline SignedGraph symmetric_to_signed(const SymmetricGraph& g) {
  SignedGraph s;
  s.m = g.pairs();
  for (const Edge& e : g.orbits()) {
    if (e.u == 0) {
      s.half_edges.insert(e.v);
    } else if (e.self_mirrored()) {
      s.negative_loops.insert(e.v);
    } else if (e.u > 0) {
      s.positive_links.emplace(e.u, e.v);
    } else {
      s.negative_links.emplace(std::min(-e.u, e.v), std::max(-e.u, e.v));
    }
  }
  return s;
}

/// v_i is connected to v_{-i} or to a frozen vertex, for every i != 0.
inline bool is_weakly_connected(const FrozenGraph& gamma) {
  const SymmetricGraph& g = gamma.graph;
  const int n = g.pairs();
  detail::DisjointSets sets(static_cast<std::size_t>(g.vertex_count()));
  const auto slot = [n](int v) { return static_cast<std::size_t>(v + n); };
  for (const Edge& e : g.edges()) sets.unite(slot(e.u), slot(e.v));
  std::vector<bool> anchored(static_cast<std::size_t>(g.vertex_count()), false);
  for (int i : gamma.frozen) {
    anchored[sets.find(slot(i))] = true;
    anchored[sets.find(slot(-i))] = true;
  }
  for (int i = 1; i <= n; ++i) {
    const std::size_t root = sets.find(slot(i));
    if (root != sets.find(slot(-i)) && !anchored[root]) return false;
  }
  return true;
}

inline bool is_weakly_connected(const SymmetricGraph& g) { return is_weakly_connected(FrozenGraph(g)); }

inline bool is_contractible(const Edge& e) {
  return e.u != 0 && e.v != 0 && !e.self_mirrored();
}

/// Contractible edges, one representative per mirror orbit, in orbit order.
inline std::vector<Edge> contractible_edges(const SymmetricGraph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.orbits()) {
    if (is_contractible(e)) out.push_back(e);
  }
  return out;
}

/// G/e: merges the endpoints of e and of -e. The endpoint with smaller |index|
/// survives; remaining pairs are compacted.
inline SymmetricGraph contract(const SymmetricGraph& g, const Edge& e) {
  if (!is_contractible(e)) throw PreconditionError("edge " + to_string(e) + " is not contractible");
  if (!g.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " is not in the graph");
  const int absorbed = std::abs(e.u) > std::abs(e.v) ? e.u : e.v;
  const int survivor = e.other(absorbed);
  const auto map = detail::relabel_after_deletion(g.pairs(), IndexSet{std::abs(absorbed)});
  const auto image = [&](int v) {
    if (v == absorbed) v = survivor;
    if (v == -absorbed) v = -survivor;
    return detail::relabel_vertex(map, v);
  };
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    const int a = image(f.u);
    const int b = image(f.v);
    if (a != b) edges.emplace_back(a, b);
  }
  return SymmetricGraph(g.pairs() - 1, edges);
}

/// G - e: removes e and -e.
inline SymmetricGraph delete_edge_pair(const SymmetricGraph& g, const Edge& e) {
  if (!g.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " is not in the graph");
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f != e && f != e.mirror()) edges.push_back(f);
  }
  return SymmetricGraph(g.pairs(), edges);
}

/// G - I: removes v_i, v_{-i} for i in I and relabels the remaining pairs contiguously.
inline SymmetricGraph delete_index_set(const SymmetricGraph& g, const IndexSet& removed) {
  for (int i : removed) {
    if (i < 1 || i > g.pairs()) {
      throw PreconditionError("index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(g.pairs()));
    }
  }
  const auto map = detail::relabel_after_deletion(g.pairs(), removed);
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (removed.contains(std::abs(f.u)) || removed.contains(std::abs(f.v))) continue;
    edges.emplace_back(detail::relabel_vertex(map, f.u), detail::relabel_vertex(map, f.v));
  }
  return SymmetricGraph(g.pairs() - static_cast<int>(removed.size()), edges);
}

/// N(i): indices |j| of nonzero neighbours of v_i or v_{-i}, excluding i.
inline IndexSet neighbor_index_set(const SymmetricGraph& g, int i) {
  if (i < 1 || i > g.pairs()) {
    throw PreconditionError("index " + std::to_string(i) + " out of range 1.." + std::to_string(g.pairs()));
  }
  IndexSet out;
  for (int side : {i, -i}) {
    for (int w : g.neighbors(side)) {
      if (w != 0 && std::abs(w) != i) out.insert(std::abs(w));
    }
  }
  return out;
}

/// True iff V(I) = {v_i, v_{-i} : i in I} is an independent vertex set.
inline bool is_independent_index_set(const SymmetricGraph& g, const IndexSet& indices) {
  for (int i : indices) {
    for (int side : {i, -i}) {
      for (int w : g.neighbors(side)) {
        if (w != 0 && indices.contains(std::abs(w))) return false;
      }
    }
  }
  return true;
}

/// Every independent I ⊆ {1..n} \ S, ordered by size then lexicographically.
inline std::vector<IndexSet> independent_index_sets(const FrozenGraph& gamma) {
  std::vector<int> free;
  for (int i = 1; i <= gamma.graph.pairs(); ++i) {
    if (!gamma.is_frozen_index(i)) free.push_back(i);
  }
  if (free.size() >= 63) throw PreconditionError("too many free indices to enumerate subsets");
  std::vector<IndexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    IndexSet subset;
    for (std::size_t b = 0; b < free.size(); ++b) {
      if ((mask >> b) & 1U) subset.insert(free[b]);
    }
    if (is_independent_index_set(gamma.graph, subset)) out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Γ_i = (G, S ∪ {i}).
inline FrozenGraph freezing_at(const FrozenGraph& gamma, int i) {
  IndexSet s = gamma.frozen;
  s.insert(i);
  return FrozenGraph(gamma.graph, std::move(s));
}

/// Γ - i = (G - i, S ∪ N(i)), with indices relabeled after removing pair i.
inline FrozenGraph deletion_at(const FrozenGraph& gamma, int i) {
  IndexSet s = gamma.frozen;
  for (int j : neighbor_index_set(gamma.graph, i)) s.insert(j);
  s.erase(i);
  const auto map = detail::relabel_after_deletion(gamma.graph.pairs(), IndexSet{i});
  IndexSet relabeled;
  for (int j : s) relabeled.insert(map[static_cast<std::size_t>(j)]);
  return FrozenGraph(delete_index_set(gamma.graph, IndexSet{i}), std::move(relabeled));
}

}  // namespace signedchroma
