#pragma once

// Cross-checks every identity the library implements on one frozen graph, and
// a seeded random graph generator to drive it.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "signedchroma/chromatic.hpp"
#include "signedchroma/orientations.hpp"
#include "signedchroma/toric.hpp"

namespace signedchroma {

struct Check {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct VerificationReport {
  std::string graph_digest;
  IndexSet frozen;
  std::vector<Check> checks;
  std::optional<std::uint64_t> seed;
  std::int64_t elapsed_ms = 0;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
  }
  [[nodiscard]] const Check* find(std::string_view name) const {
    for (const Check& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

enum class VerifyDepth { fixed, exhaustive };

inline constexpr int default_max_pairs = 4;

/// SIGNEDCHROMA_MAX_N if set to a positive integer, else 4.
inline int configured_max_pairs() {
  if (const char* env = std::getenv("SIGNEDCHROMA_MAX_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  return default_max_pairs;
}

inline std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (int i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

namespace detail {

inline std::string show(const Integer& x) { return x.str(); }
inline std::string show(std::size_t x) { return std::to_string(x); }
inline std::string show(int x) { return std::to_string(x); }
inline std::string show(bool x) { return x ? "true" : "false"; }
inline std::string show(const std::string& x) { return x; }
inline std::string show(const char* x) { return x; }

class CheckList {
 public:
  template <class L, class R>
  void add(std::string name, const L& lhs, const R& rhs) {
    std::string l = show(lhs);
    std::string r = show(rhs);
    const bool holds = l == r;
    checks_.push_back({std::move(name), std::move(l), std::move(r), holds});
  }

  /// Runs body; an exception becomes a failed check instead of escaping.
  template <class Body>
  void guarded(const std::string& name, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      checks_.push_back({name, "error", e.what(), false});
    }
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

/// chi_G((q-2)/2, 2) as a polynomial in q, from its values at q = 2, 4, ..., 2n+2.
inline UnivariatePolynomial substituted_chromatic(const BivariatePolynomial& chi, int n) {
  std::vector<UnivariateSample> samples;
  for (int k = 0; k <= n; ++k) samples.push_back({2 * k + 2, chi.evaluate(k, 2)});
  return interpolate_univariate(samples, n);
}

inline std::vector<IndexSet> all_index_sets(int n) {
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    IndexSet s;
    for (int i = 1; i <= n; ++i) {
      if (mask & (1u << (i - 1))) s.insert(i);
    }
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
  return out;
}

/// Number of connected components of the flip graph restricted to `members`,
/// using only flips available in `gamma`.
inline std::vector<int> restricted_components(const FrozenGraph& gamma, const std::vector<Orientation>& members,
                                              int& count) {
  std::unordered_map<Orientation, std::size_t, OrientationHash> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);
  DisjointSets sets(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const Flip& f : flip_targets(gamma, members[i])) {
      if (const auto it = index.find(f.result); it != index.end()) sets.unite(i, it->second);
    }
  }
  std::map<std::size_t, int> ids;
  std::vector<int> out(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    out[i] = ids.try_emplace(sets.find(i), static_cast<int>(ids.size())).first->second;
  }
  count = static_cast<int>(ids.size());
  return out;
}

/// Violations of the six height-function properties on one class.
inline std::size_t height_violations(const FrozenGraph& gamma, const std::vector<Orientation>& members,
                                     const std::vector<HeightFunction>& heights) {
  const SymmetricGraph& g = gamma.graph;
  const int n = g.pairs();
  std::size_t bad = 0;
  std::unordered_map<Orientation, std::size_t, OrientationHash> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);
  std::set<std::vector<Rational>> distinct;
  for (std::size_t m = 0; m < members.size(); ++m) {
    const Orientation& w = members[m];
    const HeightFunction& h = heights[m];
    if (h(0) != 0) ++bad;
    for (int i : gamma.frozen) {
      if (h(i) != 0 || h(-i) != 0) ++bad;
    }
    for (int i = 1; i <= n; ++i) {
      if (h(i) + h(-i) != 0) ++bad;
    }
    for (const auto& [tail, head] : directed_edges(g, w)) {
      const Rational drop = h(tail) - h(head);
      if (drop < 0 || drop >= 1) ++bad;
      if ((drop == 0) != (h(tail) == 0 && h(head) == 0)) ++bad;
    }
    for (const Flip& f : flip_targets(gamma, w)) {
      const auto it = index.find(f.result);
      if (it == index.end()) {
        ++bad;
        continue;
      }
      const HeightFunction& after = heights[it->second];
      const int source = is_source(g, w, f.index) ? f.index : -f.index;
      for (int v = -n; v <= n; ++v) {
        const Rational expected = v == source ? 1 : v == -source ? -1 : 0;
        if (h(v) - after(v) != expected) ++bad;
      }
    }
    for (int v = -n; v <= n; ++v) {
      if (!is_integral(h(v) - heights.front()(v))) ++bad;
    }
    distinct.insert(h.values());
  }
  bad += members.size() - distinct.size();
  return bad;
}

/// True iff the path leads from `from` to `to` through valid S-flips, each at a
/// pair where the end heights differ, in at most Delta/2 steps.
inline bool flip_path_sound(const FrozenGraph& gamma, const EdgeFrequency& freq, const Orientation& from,
                            const Orientation& to, const HeightFunction& h_from, const HeightFunction& h_to) {
  const auto path = flip_path(gamma, freq, from, to);
  Orientation current = from;
  for (const Flip& step : path) {
    if (!is_flippable(gamma, current, step.index)) return false;
    if (flip_at(gamma.graph, current, step.index) != step.result) return false;
    if (h_from(step.index) == h_to(step.index)) return false;
    current = step.result;
  }
  Rational delta = 0;
  const int n = gamma.graph.pairs();
  for (int v = -n; v <= n; ++v) delta += abs(h_from(v) - h_to(v));
  return current == to && Rational(2 * path.size()) <= delta;
}

}  // namespace detail

/// Runs every applicable identity on gamma. Failures are recorded, not thrown.
inline VerificationReport verify_suite(const FrozenGraph& gamma, VerifyDepth depth = VerifyDepth::fixed,
                                       std::optional<int> max_pairs = std::nullopt) {
  const auto started = std::chrono::steady_clock::now();
  const SymmetricGraph& g = gamma.graph;
  const int n = g.pairs();
  const int bound = max_pairs.value_or(configured_max_pairs());
  if (n > bound) {
    throw PreconditionError("graph has " + std::to_string(n) + " pairs; the verification bound is " +
                            std::to_string(bound) + " (set SIGNEDCHROMA_MAX_N to raise it)");
  }
  VerificationReport report;
  report.graph_digest = g.digest();
  report.frozen = gamma.frozen;
  detail::CheckList checks;

  const auto orientations = enumerate_orientations(g);
  const auto acyc = [](const SymmetricGraph& h) { return Integer(enumerate_orientations(h).size()); };
  const BivariatePolynomial chi = chromatic_polynomial(g, ChromaticMethod::deletion_contraction);
  const MainInvariant invariant{signed_evaluation(chi, n, -1, 1), signed_evaluation(chi, n, -1, 2)};
  const bool weak = is_weakly_connected(g);
  const FlipClasses classes = flip_classes(FrozenGraph(g), orientations);

  checks.add("greene_zaslavsky", orientations.size(), invariant.acyc_eval);
  if (weak) {
    checks.add("main_theorem", static_cast<std::size_t>(classes.class_count), invariant.classes_eval);
  } else {
    checks.add("mainext_zero", 0, invariant.classes_eval);
  }
  checks.guarded("method_agreement", [&] {
    checks.add("method_agreement", chi.to_string(), chromatic_polynomial(g, ChromaticMethod::interpolation).to_string());
  });
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      checks.add("coloring_count[k=" + std::to_string(k) + ",l=" + std::to_string(l) + "]", chi.evaluate(k, l),
                 count_proper_colorings(g, k, l));
    }
  }
  for (const Edge& e : contractible_edges(g)) {
    const auto split = chromatic_polynomial(delete_edge_pair(g, e)) - chromatic_polynomial(contract(g, e));
    checks.add("deletion_contraction[e=" + to_string(e) + "]", chi.to_string(), split.to_string());
  }
  for (int k = 1; k <= 3; ++k) {
    checks.add("splitting[k=" + std::to_string(k) + "]", count_proper_colorings(g, k, 2),
               independent_split_count(g, k));
  }
  checks.add("alternating_sum", invariant.classes_eval, alternating_acyc_sum(FrozenGraph(g), acyc));

  // Frozen theorem and freezing-deletion over every frozen set that keeps the
  // graph weakly connected; the input set is reported under the plain name.
  std::vector<IndexSet> weak_sets;
  for (const IndexSet& s : detail::all_index_sets(n)) {
    if (is_weakly_connected(FrozenGraph(g, s))) weak_sets.push_back(s);
  }
  std::map<IndexSet, FlipClasses> frozen_classes;
  for (const IndexSet& s : weak_sets) {
    const FrozenGraph fg(g, s);
    frozen_classes.emplace(s, flip_classes(fg, orientations));
    const auto count = static_cast<std::size_t>(frozen_classes.at(s).class_count);
    const Integer alternating = alternating_acyc_sum(fg, acyc);
    if (s == gamma.frozen) checks.add("frozen_theorem", count, alternating);
    checks.add("frozen_theorem[S=" + format_index_set(s) + "]", count, alternating);
  }
  for (const IndexSet& s : weak_sets) {
    const FrozenGraph fg(g, s);
    for (int i = 1; i <= n; ++i) {
      if (!is_admissible_index(fg, i)) continue;
      const std::string name = "freezing_deletion[S=" + format_index_set(s) + ",i=" + std::to_string(i) + "]";
      checks.guarded(name, [&] {
        const auto r = freezing_deletion_check(fg, i);
        checks.add(name, r.lhs, Integer(r.rhs_frozen) - Integer(r.rhs_deleted));
      });
    }
  }

  const ToricArrangement arrangement = build_graphical_arrangement(g);
  checks.guarded("toric_char", [&] {
    checks.add("toric_char", toric_characteristic_polynomial(arrangement, graphical_modulus).to_string(),
               detail::substituted_chromatic(chi, n).to_string());
  });
  for (int q = 4; q <= 10; q += 2) {
    checks.add("lattice_bridge[q=" + std::to_string(q) + "]", lattice_point_count(arrangement, q),
               count_proper_colorings(g, (q - 2) / 2, 2));
  }
  checks.add("essentiality", is_essential(arrangement), weak);
  if (weak) {
    checks.guarded("chamber_class", [&] {
      checks.add("chamber_class", chamber_count(arrangement, graphical_modulus),
                 static_cast<std::size_t>(classes.class_count));
    });
    for (const Edge& e : contractible_edges(g)) {
      const std::string name = "deletion_restriction[e=" + to_string(e) + "]";
      checks.guarded(name, [&] {
        const SymmetricGraph deleted = delete_edge_pair(g, e);
        Integer rhs = chamber_count(build_graphical_arrangement(contract(g, e)), graphical_modulus);
        if (is_weakly_connected(deleted)) rhs += chamber_count(build_graphical_arrangement(deleted), graphical_modulus);
        checks.add(name, chamber_count(arrangement, graphical_modulus), rhs);
      });
    }
  }
  checks.add("roundtrip_signed", signed_to_symmetric(symmetric_to_signed(g)).digest(), g.digest());

  std::size_t witnessed = 0;
  std::size_t flip_cases = 0;
  std::size_t flip_ok = 0;
  const Rational epsilon(1, 4 * (n + 1));
  const Rational half(1, 2);
  for (const Orientation& w : orientations) {
    const TorusPoint x = witness_point(g, w);
    if (beta_map(g, x) == w) ++witnessed;
    for (int i = 1; i <= n; ++i) {
      if (!is_flippable(FrozenGraph(g), w, i)) continue;
      ++flip_cases;
      const bool source = is_source(g, w, i);
      TorusPoint before = x;
      TorusPoint after = x;
      before.coords[static_cast<std::size_t>(i - 1)] = source ? half - epsilon : epsilon - half;
      after.coords[static_cast<std::size_t>(i - 1)] = source ? epsilon - half : half - epsilon;
      if (beta_map(g, before) == w && beta_map(g, after) == flip_at(g, w, i)) ++flip_ok;
    }
  }
  checks.add("beta_witness", witnessed, orientations.size());
  checks.add("beta_flip", flip_ok, flip_cases);

  if (depth == VerifyDepth::exhaustive) {
    for (const IndexSet& s : weak_sets) {
      const FrozenGraph fg(g, s);
      const std::string tag = "[S=" + format_index_set(s) + "]";
      checks.guarded("heights" + tag, [&] {
        std::size_t height_bad = 0;
        std::size_t pairs_total = 0;
        std::size_t pairs_ok = 0;
        std::size_t goal_total = 0;
        std::size_t goal_ok = 0;
        std::size_t corollary_total = 0;
        std::size_t corollary_ok = 0;
        std::map<int, std::size_t> lifted_components;
        const FlipClasses& fc = frozen_classes.at(s);
        std::map<int, FlipClasses> frozen_more;
        for (int j = 1; j <= n; ++j) {
          if (is_admissible_index(fg, j)) frozen_more.emplace(j, flip_classes(freezing_at(fg, j), orientations));
        }
        for (const auto& members : fc.components()) {
          const EdgeFrequency freq = component_edge_frequency(g, members);
          std::vector<HeightFunction> heights;
          for (const Orientation& w : members) heights.push_back(height_function(fg, freq, w));
          height_bad += detail::height_violations(fg, members, heights);
          for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = 0; b < members.size(); ++b) {
              ++pairs_total;
              if (detail::flip_path_sound(fg, freq, members[a], members[b], heights[a], heights[b])) ++pairs_ok;
            }
          }
          for (const auto& [j, frozen_j] : frozen_more) {
            std::set<int> ids_j;
            for (const Orientation& w : members) ids_j.insert(frozen_j.class_of[*frozen_j.index_of(w)]);
            // Orientations of C with v_j a source, joined by flips that keep it one.
            std::vector<Orientation> lifted;
            std::vector<Rational> lifted_height;
            for (std::size_t m = 0; m < members.size(); ++m) {
              if (is_source(g, members[m], j)) {
                lifted.push_back(members[m]);
                lifted_height.push_back(heights[m](j));
              }
            }
            IndexSet blocked = s;
            blocked.insert(j);
            for (int x : neighbor_index_set(g, j)) blocked.insert(x);
            int lifted_count = 0;
            const auto lifted_ids = detail::restricted_components(FrozenGraph(g, blocked), lifted, lifted_count);
            lifted_components[j] += static_cast<std::size_t>(lifted_count);
            ++goal_total;
            if (ids_j.size() == static_cast<std::size_t>(lifted_count) + 1) ++goal_ok;
            for (std::size_t a = 0; a < members.size(); ++a) {
              for (std::size_t b = a + 1; b < members.size(); ++b) {
                ++corollary_total;
                const bool same = frozen_j.class_of[*frozen_j.index_of(members[a])] ==
                                  frozen_j.class_of[*frozen_j.index_of(members[b])];
                if (same == (heights[a](j) == heights[b](j))) ++corollary_ok;
              }
            }
            for (std::size_t a = 0; a < lifted.size(); ++a) {
              for (std::size_t b = a + 1; b < lifted.size(); ++b) {
                ++corollary_total;
                if ((lifted_ids[a] == lifted_ids[b]) == (lifted_height[a] == lifted_height[b])) ++corollary_ok;
              }
            }
          }
        }
        checks.add("height_properties" + tag, height_bad, 0);
        checks.add("flip_path" + tag, pairs_ok, pairs_total);
        checks.add("component_goal" + tag, goal_ok, goal_total);
        checks.add("height_corollaries" + tag, corollary_ok, corollary_total);
        for (const auto& [j, total] : lifted_components) {
          const auto deleted = deletion_at(fg, j);
          checks.add("deletion_lift" + tag.substr(0, tag.size() - 1) + ",j=" + std::to_string(j) + "]", total,
                     static_cast<std::size_t>(flip_classes(deleted).class_count));
        }
      });
    }
  }

  report.checks = checks.take();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  return report;
}

/// Each orbit of the complete symmetric graph on n pairs is kept independently
/// with probability num/den, drawn from mt19937_64(seed). With require_weak,
/// samples are redrawn from the same stream until weakly connected.
inline SymmetricGraph random_symmetric_graph(std::uint64_t seed, int n, long long num, long long den,
                                             bool require_weak, int max_attempts = 1000) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  if (den <= 0 || num < 0 || num > den) throw PreconditionError("edge probability must lie in [0, 1]");
  std::vector<Edge> all;
  for (int v = 1; v <= n; ++v) {
    for (int u = -v; u < v; ++u) all.emplace_back(u, v);
  }
  std::sort(all.begin(), all.end(), OrbitOrder{});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> draw(0, den - 1);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> kept;
    for (const Edge& e : all) {
      if (draw(rng) < num) kept.push_back(e);
    }
    SymmetricGraph g(n, kept);
    if (!require_weak || is_weakly_connected(g)) return g;
  }
  throw PreconditionError("no weakly connected sample after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace signedchroma
