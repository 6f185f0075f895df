#pragma once

// Symmetric acyclic orientations, (S-)flip equivalence classes, and the
// height-function machinery on a flip class.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "signedchroma/graph.hpp"
#include "signedchroma/linalg.hpp"

namespace signedchroma {

/// One direction bit per edge orbit of a graph: bit o set means the orbit
/// representative {u < v} is directed u -> v (and its mirror -v -> -u).
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<bool> forward) : forward_(std::move(forward)) {}

  [[nodiscard]] const std::vector<bool>& bits() const { return forward_; }
  [[nodiscard]] std::size_t size() const { return forward_.size(); }
  [[nodiscard]] bool forward(std::size_t orbit) const { return forward_[orbit]; }
  void toggle(std::size_t orbit) { forward_[orbit] = !forward_[orbit]; }

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend bool operator<(const Orientation& a, const Orientation& b) { return a.forward_ < b.forward_; }

 private:
  std::vector<bool> forward_;
};

struct OrientationHash {
  std::size_t operator()(const Orientation& w) const { return std::hash<std::vector<bool>>{}(w.bits()); }
};

/// (tail, head)
using DirectedEdge = std::pair<int, int>;

inline int tail_of(const SymmetricGraph& g, const Orientation& w, const Edge& e) {
  const int o = g.orbit_index(e);
  if (o < 0) throw PreconditionError("edge " + to_string(e) + " is not in the graph");
  const Edge& rep = g.orbits()[static_cast<std::size_t>(o)];
  const int rep_tail = w.forward(static_cast<std::size_t>(o)) ? rep.u : rep.v;
  if (e == rep) return rep_tail;
  return -rep.other(rep_tail);
}

/// True iff w directs the edge {from, to} as from -> to.
inline bool points(const SymmetricGraph& g, const Orientation& w, int from, int to) {
  return tail_of(g, w, Edge(from, to)) == from;
}

inline std::vector<DirectedEdge> directed_edges(const SymmetricGraph& g, const Orientation& w) {
  std::vector<DirectedEdge> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    const int t = tail_of(g, w, e);
    out.emplace_back(t, e.other(t));
  }
  return out;
}

inline bool is_source(const SymmetricGraph& g, const Orientation& w, int v) {
  return std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](int x) { return points(g, w, v, x); });
}

inline bool is_sink(const SymmetricGraph& g, const Orientation& w, int v) {
  return std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](int x) { return points(g, w, x, v); });
}

/// Kahn's algorithm over all 2n+1 vertices.
inline bool is_acyclic(const SymmetricGraph& g, const Orientation& w) {
  if (w.size() != g.orbits().size()) return false;
  const int n = g.pairs();
  std::vector<int> indegree(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& [t, h] : directed_edges(g, w)) {
    out[static_cast<std::size_t>(t + n)].push_back(h);
    ++indegree[static_cast<std::size_t>(h + n)];
  }
  std::vector<int> ready;
  for (int v = -n; v <= n; ++v) {
    if (indegree[static_cast<std::size_t>(v + n)] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int h : out[static_cast<std::size_t>(v + n)]) {
      if (--indegree[static_cast<std::size_t>(h + n)] == 0) ready.push_back(h);
    }
  }
  return seen == g.vertex_count();
}

/// Acyc(G) in lexicographic order of the orbit direction bits.
inline std::vector<Orientation> enumerate_orientations(const SymmetricGraph& g) {
  const int n = g.pairs();
  const auto& orbits = g.orbits();
  const auto slot = [n](int v) { return static_cast<std::size_t>(v + n); };
  std::vector<std::vector<int>> successors(static_cast<std::size_t>(g.vertex_count()));
  std::vector<bool> bits(orbits.size(), false);
  std::vector<Orientation> out;
  std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()));
  std::vector<int> stack;

  const auto reaches = [&](int from, int to) {
    std::fill(visited.begin(), visited.end(), 0);
    stack.assign(1, from);
    visited[slot(from)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (int x : successors[slot(v)]) {
        if (!visited[slot(x)]) {
          visited[slot(x)] = 1;
          stack.push_back(x);
        }
      }
    }
    return false;
  };

  // A new cycle must pass through tail->head or its mirror; by symmetry of the
  // partial orientation both cases reduce to head reaching tail.
  const std::function<void(std::size_t)> assign = [&](std::size_t o) {
    if (o == orbits.size()) {
      out.emplace_back(bits);
      return;
    }
    const Edge& rep = orbits[o];
    for (bool dir : {false, true}) {
      const int tail = dir ? rep.u : rep.v;
      const int head = rep.other(tail);
      successors[slot(tail)].push_back(head);
      if (!rep.self_mirrored()) successors[slot(-head)].push_back(-tail);
      if (!reaches(head, tail)) {
        bits[o] = dir;
        assign(o + 1);
      }
      if (!rep.self_mirrored()) successors[slot(-head)].pop_back();
      successors[slot(tail)].pop_back();
    }
  };
  assign(0);
  return out;
}

/// The orientation obtained by reversing every edge at v_i and v_{-i}.
inline Orientation flip_at(const SymmetricGraph& g, Orientation w, int i) {
  for (int x : g.neighbors(i)) w.toggle(static_cast<std::size_t>(g.orbit_index(Edge(i, x))));
  return w;
}

/// True iff (v_i, v_{-i}) is a free, non-adjacent source-sink pair of w with
/// at least one incident edge.
inline bool is_flippable(const FrozenGraph& gamma, const Orientation& w, int i) {
  const SymmetricGraph& g = gamma.graph;
  if (gamma.is_frozen_index(i) || g.has_edge(i, -i) || g.is_isolated(i)) return false;
  return is_source(g, w, i) || is_sink(g, w, i);
}

struct Flip {
  int index = 0;       ///< pair index i of the flipped pair (v_i, v_{-i})
  Orientation result;  ///< orientation after the flip

  friend bool operator==(const Flip&, const Flip&) = default;
};

/// Every S-flip available in w, by increasing pair index.
inline std::vector<Flip> flip_targets(const FrozenGraph& gamma, const Orientation& w) {
  std::vector<Flip> out;
  for (int i = 1; i <= gamma.graph.pairs(); ++i) {
    if (is_flippable(gamma, w, i)) out.push_back({i, flip_at(gamma.graph, w, i)});
  }
  return out;
}

/// Acyc(G) partitioned into ~_S classes. Class ids follow first appearance
/// in the canonical orientation order.
struct FlipClasses {
  std::vector<Orientation> orientations;
  std::vector<int> class_of;
  int class_count = 0;

  [[nodiscard]] std::optional<std::size_t> index_of(const Orientation& w) const {
    const auto it = lookup.find(w);
    if (it == lookup.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] std::vector<std::vector<Orientation>> components() const {
    std::vector<std::vector<Orientation>> out(static_cast<std::size_t>(class_count));
    for (std::size_t i = 0; i < orientations.size(); ++i) {
      out[static_cast<std::size_t>(class_of[i])].push_back(orientations[i]);
    }
    return out;
  }

  std::unordered_map<Orientation, std::size_t, OrientationHash> lookup;
};

inline FlipClasses flip_classes(const FrozenGraph& gamma, std::vector<Orientation> orientations) {
  FlipClasses out;
  out.orientations = std::move(orientations);
  for (std::size_t i = 0; i < out.orientations.size(); ++i) out.lookup.emplace(out.orientations[i], i);
  detail::DisjointSets sets(out.orientations.size());
  for (std::size_t i = 0; i < out.orientations.size(); ++i) {
    for (const Flip& f : flip_targets(gamma, out.orientations[i])) {
      const auto j = out.lookup.find(f.result);
      if (j == out.lookup.end()) throw ConsistencyError("flip produced an orientation outside Acyc(G)");
      sets.unite(i, j->second);
    }
  }
  std::unordered_map<std::size_t, int> ids;
  out.class_of.resize(out.orientations.size());
  for (std::size_t i = 0; i < out.orientations.size(); ++i) {
    const auto [it, inserted] = ids.try_emplace(sets.find(i), out.class_count);
    if (inserted) ++out.class_count;
    out.class_of[i] = it->second;
  }
  return out;
}

inline FlipClasses flip_classes(const FrozenGraph& gamma) {
  return flip_classes(gamma, enumerate_orientations(gamma.graph));
}

struct FreezingDeletion {
  std::size_t lhs = 0;          ///< |Acyc(G)/~_S|
  std::size_t rhs_frozen = 0;   ///< |Acyc(G)/~_{S ∪ {i}}|
  std::size_t rhs_deleted = 0;  ///< |Acyc(G - i)/~_{S ∪ N(i)}|
  bool holds = false;
};

inline bool is_admissible_index(const FrozenGraph& gamma, int i) {
  return i >= 1 && i <= gamma.graph.pairs() && !gamma.is_frozen_index(i) && !gamma.graph.has_edge(i, -i);
}

inline FreezingDeletion freezing_deletion_check(const FrozenGraph& gamma, int i) {
  if (!is_admissible_index(gamma, i)) {
    throw PreconditionError("index " + std::to_string(i) + " must be free and not adjacent to its mirror");
  }
  if (!is_weakly_connected(gamma)) throw PreconditionError("frozen graph is not weakly connected");
  const auto orientations = enumerate_orientations(gamma.graph);
  FreezingDeletion out;
  out.lhs = static_cast<std::size_t>(flip_classes(gamma, orientations).class_count);
  out.rhs_frozen = static_cast<std::size_t>(flip_classes(freezing_at(gamma, i), orientations).class_count);
  out.rhs_deleted = static_cast<std::size_t>(flip_classes(deletion_at(gamma, i)).class_count);
  out.holds = out.lhs + out.rhs_deleted == out.rhs_frozen;
  return out;
}

/// Forward minus backward edges of w along `walk` (a vertex sequence). The
/// walk must be closed, or start and end at frozen vertices.
inline int circulation(const FrozenGraph& gamma, const Orientation& w, std::span<const int> walk) {
  if (walk.size() < 2) throw PreconditionError("a cycle needs at least one edge");
  const bool closed = walk.front() == walk.back();
  const bool between_frozen = gamma.is_frozen_vertex(walk.front()) && gamma.is_frozen_vertex(walk.back());
  if (!closed && !between_frozen) throw PreconditionError("walk is neither closed nor between frozen vertices");
  int total = 0;
  for (std::size_t t = 0; t + 1 < walk.size(); ++t) {
    if (!gamma.graph.has_edge(walk[t], walk[t + 1])) {
      throw PreconditionError("walk step " + std::to_string(walk[t]) + "->" + std::to_string(walk[t + 1]) +
                              " is not an edge");
    }
    total += points(gamma.graph, w, walk[t], walk[t + 1]) ? 1 : -1;
  }
  return total;
}

/// f_C: for every directed edge, the fraction of orientations in the class that contain it.
using EdgeFrequency = std::map<DirectedEdge, Rational>;

inline EdgeFrequency component_edge_frequency(const SymmetricGraph& g, std::span<const Orientation> component) {
  if (component.empty()) throw PreconditionError("component is empty");
  EdgeFrequency freq;
  for (const Edge& e : g.edges()) {
    freq[{e.u, e.v}] = 0;
    freq[{e.v, e.u}] = 0;
  }
  for (const Orientation& w : component) {
    for (const DirectedEdge& d : directed_edges(g, w)) freq[d] += 1;
  }
  const Rational size(static_cast<long long>(component.size()));
  for (auto& [edge, value] : freq) value /= size;
  return freq;
}

/// Exact vertex potential h_w on v_{-n}..v_n.
class HeightFunction {
 public:
  HeightFunction() = default;
  HeightFunction(int pairs, std::vector<Rational> values) : n_(pairs), values_(std::move(values)) {}

  [[nodiscard]] int pairs() const { return n_; }
  [[nodiscard]] const Rational& operator()(int vertex) const { return values_[static_cast<std::size_t>(vertex + n_)]; }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> values_;
};

/// h(u) - h(v) for the edge {u, v} under w, given the class frequencies.
inline Rational height_step(const SymmetricGraph& g, const EdgeFrequency& freq, const Orientation& w, int u, int v) {
  const Rational& f = freq.at({u, v});
  return points(g, w, u, v) ? Rational(1 - f) : Rational(-f);
}

/// Integrates height steps along breadth-first trees rooted at v_0 and the
/// frozen vertices; components without such an anchor are fixed by
/// h(v_i) + h(v_{-i}) = 0. Every edge and the antisymmetry are verified.
inline HeightFunction height_function(const FrozenGraph& gamma, const EdgeFrequency& freq, const Orientation& w) {
  const SymmetricGraph& g = gamma.graph;
  if (!is_weakly_connected(gamma)) throw PreconditionError("frozen graph is not weakly connected");
  const int n = g.pairs();
  const auto slot = [n](int v) { return static_cast<std::size_t>(v + n); };
  std::vector<std::optional<Rational>> h(static_cast<std::size_t>(g.vertex_count()));

  const auto spread = [&](std::vector<int> frontier, std::vector<std::optional<Rational>>& values) {
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const int u = frontier[head];
      for (int x : g.neighbors(u)) {
        if (values[slot(x)]) continue;
        values[slot(x)] = *values[slot(u)] - height_step(g, freq, w, u, x);
        frontier.push_back(x);
      }
    }
    return frontier;
  };

  std::vector<int> anchors{0};
  h[slot(0)] = Rational(0);
  for (int i : gamma.frozen) {
    for (int v : {i, -i}) {
      h[slot(v)] = Rational(0);
      anchors.push_back(v);
    }
  }
  spread(anchors, h);

  for (int i = 1; i <= n; ++i) {
    if (h[slot(i)]) continue;
    std::vector<std::optional<Rational>> relative(static_cast<std::size_t>(g.vertex_count()));
    relative[slot(i)] = Rational(0);
    const auto reached = spread({i}, relative);
    if (!relative[slot(-i)]) throw ConsistencyError("unanchored component without its mirror vertex");
    const Rational offset = -(*relative[slot(-i)]) / 2;
    for (int v : reached) h[slot(v)] = *relative[slot(v)] + offset;
  }

  std::vector<Rational> values;
  values.reserve(h.size());
  for (auto& x : h) values.push_back(std::move(*x));
  HeightFunction out(n, std::move(values));

  for (const Edge& e : g.edges()) {
    if (out(e.u) - out(e.v) != height_step(g, freq, w, e.u, e.v)) {
      throw ConsistencyError("height function is inconsistent on edge " + to_string(e));
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (out(i) + out(-i) != 0) throw ConsistencyError("height function is not antisymmetric");
  }
  return out;
}

inline HeightFunction height_function(const FrozenGraph& gamma, std::span<const Orientation> component,
                                      const Orientation& w) {
  if (std::find(component.begin(), component.end(), w) == component.end()) {
    throw PreconditionError("orientation is not in the component");
  }
  return height_function(gamma, component_edge_frequency(gamma.graph, component), w);
}

/// Flip path from `from` to `to` inside one class: repeatedly flips the
/// height-differing vertex of maximal height (smallest index on ties), from
/// whichever end it is a source of.
/// `freq` must be the edge frequency of the class containing both ends.
inline std::vector<Flip> flip_path(const FrozenGraph& gamma, const EdgeFrequency& freq, const Orientation& from,
                                   const Orientation& to) {
  const SymmetricGraph& g = gamma.graph;
  Orientation front = from;
  Orientation back = to;
  std::vector<Flip> forward;
  std::vector<Flip> backward;
  // Each flip lowers sum |h_front - h_back| by 2, and every height lies in (-n, n).
  const std::size_t limit = static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(g.vertex_count()) + 1;
  while (forward.size() + backward.size() <= limit) {
    const HeightFunction hf = height_function(gamma, freq, front);
    const HeightFunction hb = height_function(gamma, freq, back);
    if (hf == hb) {
      if (front != back) throw ConsistencyError("distinct orientations share a height function");
      std::vector<Flip> path = std::move(forward);
      for (auto it = backward.rbegin(); it != backward.rend(); ++it) path.push_back(std::move(*it));
      return path;
    }
    std::optional<int> pick;
    Rational best;
    for (int v = -g.pairs(); v <= g.pairs(); ++v) {
      if (hf(v) == hb(v)) continue;
      const Rational top = std::max(hf(v), hb(v));
      if (!pick || top > best) {
        pick = v;
        best = top;
      }
    }
    const int v = *pick;
    const int i = std::abs(v);
    Orientation& side = hf(v) > hb(v) ? front : back;
    if (!is_source(g, side, v) || !is_flippable(gamma, side, i)) {
      throw ConsistencyError("maximal height-differing vertex is not a flippable source");
    }
    if (&side == &front) {
      front = flip_at(g, front, i);
      forward.push_back({i, front});
    } else {
      backward.push_back({i, back});
      back = flip_at(g, back, i);
    }
  }
  throw ConsistencyError("flip path descent did not terminate");
}

inline std::vector<Flip> flip_path(const FrozenGraph& gamma, std::span<const Orientation> component,
                                   const Orientation& from, const Orientation& to) {
  const auto contains = [&](const Orientation& w) {
    return std::find(component.begin(), component.end(), w) != component.end();
  };
  if (!contains(from) || !contains(to)) throw PreconditionError("orientations are in different classes");
  return flip_path(gamma, component_edge_frequency(gamma.graph, component), from, to);
}

// ---------------------------------------------------------------------------
// Text form: comma-separated "tail>head" tokens, one per orbit representative.

inline std::string format_orientation(const SymmetricGraph& g, const Orientation& w) {
  std::string out;
  for (std::size_t o = 0; o < g.orbits().size(); ++o) {
    const Edge& rep = g.orbits()[o];
    const int t = w.forward(o) ? rep.u : rep.v;
    if (!out.empty()) out += ",";
    out += std::to_string(t) + ">" + std::to_string(rep.other(t));
  }
  return out;
}

/// Accepts any member of each orbit, in any order; every orbit must be given.
inline Orientation parse_orientation(const SymmetricGraph& g, std::string_view text) {
  std::vector<std::optional<bool>> bits(g.orbits().size());
  std::string token;
  std::stringstream stream{std::string(text)};
  while (std::getline(stream, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    const auto gt = token.find('>');
    int tail = 0;
    int head = 0;
    try {
      std::size_t used = 0;
      if (gt == std::string::npos) throw ParseError("");
      tail = std::stoi(token.substr(0, gt), &used);
      if (used != gt) throw ParseError("");
      head = std::stoi(token.substr(gt + 1), &used);
      if (used != token.size() - gt - 1) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("malformed orientation token '" + token + "'");
    }
    const Edge e(tail, head);
    const int o = g.orbit_index(e);
    if (o < 0) throw ParseError("orientation token '" + token + "' is not an edge");
    const Edge& rep = g.orbits()[static_cast<std::size_t>(o)];
    const int rep_tail = e == rep ? tail : -head;
    const bool dir = rep_tail == rep.u;
    auto& slot = bits[static_cast<std::size_t>(o)];
    if (slot && *slot != dir) throw ParseError("orientation token '" + token + "' contradicts an earlier token");
    slot = dir;
  }
  std::vector<bool> out;
  for (std::size_t o = 0; o < bits.size(); ++o) {
    if (!bits[o]) throw ParseError("orientation does not direct edge " + to_string(g.orbits()[o]));
    out.push_back(*bits[o]);
  }
  return Orientation(std::move(out));
}

}  // namespace signedchroma
