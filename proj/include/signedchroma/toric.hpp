#pragma once

// Toric hyperplane arrangements in R^n / Z^n: the graphical arrangement of a
// symmetric graph, lattice-point counting, characteristic polynomials,
// chamber counts, and the point-to-orientation map.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "signedchroma/graph.hpp"
#include "signedchroma/linalg.hpp"
#include "signedchroma/orientations.hpp"
#include "signedchroma/polynomial.hpp"

namespace signedchroma {

/// {x : normal . x ≡ offset (mod 1)} with a primitive normal whose first
/// nonzero entry is positive and offset in [0, 1).
struct ToricHyperplane {
  std::vector<long long> normal;
  Rational offset;

  friend bool operator==(const ToricHyperplane&, const ToricHyperplane&) = default;
  friend bool operator<(const ToricHyperplane& a, const ToricHyperplane& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

namespace detail {

inline Rational fractional_part(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  Integer rem = num % den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

}  // namespace detail

/// The image in the torus of the affine hyperplane coefficients . x = rhs.
inline ToricHyperplane make_toric_hyperplane(std::vector<long long> coefficients, const Rational& rhs) {
  long long g = 0;
  for (long long c : coefficients) g = std::gcd(g, c);
  if (g == 0) throw PreconditionError("hyperplane normal must be nonzero");
  Rational offset = rhs / Rational(g);
  for (long long& c : coefficients) c /= g;
  const auto first = std::find_if(coefficients.begin(), coefficients.end(), [](long long c) { return c != 0; });
  if (*first < 0) {
    for (long long& c : coefficients) c = -c;
    offset = -offset;
  }
  return {std::move(coefficients), detail::fractional_part(offset)};
}

class ToricArrangement {
 public:
  explicit ToricArrangement(int dimension = 0) : dimension_(dimension) {
    if (dimension < 0) throw PreconditionError("dimension must be nonnegative");
  }
  ToricArrangement(int dimension, const std::vector<ToricHyperplane>& hyperplanes) : ToricArrangement(dimension) {
    for (const auto& h : hyperplanes) add(h);
  }

  /// Inserts h, keeping hyperplanes sorted and distinct.
  void add(ToricHyperplane h) {
    if (static_cast<int>(h.normal.size()) != dimension_) {
      throw PreconditionError("hyperplane normal length does not match dimension " + std::to_string(dimension_));
    }
    const auto it = std::lower_bound(hyperplanes_.begin(), hyperplanes_.end(), h);
    if (it == hyperplanes_.end() || *it != h) hyperplanes_.insert(it, std::move(h));
  }

  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] const std::vector<ToricHyperplane>& hyperplanes() const { return hyperplanes_; }

  friend bool operator==(const ToricArrangement&, const ToricArrangement&) = default;

 private:
  int dimension_ = 0;
  std::vector<ToricHyperplane> hyperplanes_;
};

/// B_tor(G): x_i - x_j, x_i + x_j, x_i for edges to v_0, and x_i = 0, 1/2 for
/// mirror edges {i, -i}.
inline ToricArrangement build_graphical_arrangement(const SymmetricGraph& g) {
  const int n = g.pairs();
  ToricArrangement out(n);
  const auto unit = [n](int i, int j = 0, long long sign = 0) {
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    if (j != 0) v[static_cast<std::size_t>(j - 1)] += sign;
    return v;
  };
  for (const Edge& e : g.orbits()) {
    // e.v > 0 and |e.u| <= e.v for orbit representatives
    if (e.u == 0) {
      out.add(make_toric_hyperplane(unit(e.v), 0));
    } else if (e.self_mirrored()) {
      out.add(make_toric_hyperplane(unit(e.v), 0));
      out.add(make_toric_hyperplane(unit(e.v), Rational(1, 2)));
    } else if (e.u > 0) {
      out.add(make_toric_hyperplane(unit(e.u, e.v, -1), 0));
    } else {
      out.add(make_toric_hyperplane(unit(-e.u, e.v, 1), 0));
    }
  }
  return out;
}

namespace detail {

inline RationalMatrix normal_matrix(const ToricArrangement& a) {
  RationalMatrix rows;
  for (const auto& h : a.hyperplanes()) {
    std::vector<Rational> row;
    for (long long c : h.normal) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Diagonal of the Smith normal form (nonzero invariant factors, in order).
inline std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m) {
  std::vector<Integer> out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool done = false;
    while (!done) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (!best || abs(m[i][j]) < abs(m[best->first][best->second]))) best = {{i, j}};
        }
      }
      if (!best) return out;
      std::swap(m[t], m[best->first]);
      for (auto& row : m) std::swap(row[t], row[best->second]);
      const Integer pivot = m[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer factor = m[i][t] / pivot;
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= factor * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer factor = m[t][j] / pivot;
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= factor * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block.
      done = true;
      for (std::size_t i = t + 1; i < rows && done; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % pivot != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            done = false;
            break;
          }
        }
      }
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / boost::multiprecision::gcd(a, b) * b);
}

}  // namespace detail

/// True iff the normals span R^n.
inline bool is_essential(const ToricArrangement& a) {
  return detail::rank(detail::normal_matrix(a), static_cast<std::size_t>(a.dimension())) ==
         static_cast<std::size_t>(a.dimension());
}

/// Default sample modulus: lcm of the offset denominators times the lcm, over
/// all linearly independent sets of normals, of their largest invariant factor.
inline long long default_modulus(const ToricArrangement& a) {
  Integer modulus = 1;
  for (const auto& h : a.hyperplanes()) modulus = detail::lcm(modulus, boost::multiprecision::denominator(h.offset));
  const auto& planes = a.hyperplanes();
  const std::size_t max_size = std::min(planes.size(), static_cast<std::size_t>(a.dimension()));
  std::vector<std::size_t> pick;
  Integer divisors = 1;
  const std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (!pick.empty()) {
      std::vector<std::vector<Integer>> m;
      for (std::size_t idx : pick) {
        std::vector<Integer> row;
        for (long long c : planes[idx].normal) row.emplace_back(c);
        m.push_back(std::move(row));
      }
      const auto invariants = detail::smith_invariants(m);
      if (invariants.size() < pick.size()) return;  // dependent; supersets are too
      divisors = detail::lcm(divisors, invariants.back());
    }
    if (pick.size() == max_size) return;
    for (std::size_t i = start; i < planes.size(); ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  modulus *= divisors;
  if (modulus > Integer(std::numeric_limits<long long>::max())) throw PreconditionError("default modulus overflows");
  return static_cast<long long>(modulus);
}

/// Points of (1/q Z)^n / Z^n off every hyperplane, by exhaustive enumeration.
inline Integer lattice_point_count(const ToricArrangement& a, long long q) {
  if (q < 1) throw PreconditionError("q must be positive");
  const std::size_t n = static_cast<std::size_t>(a.dimension());
  const auto& planes = a.hyperplanes();
  std::vector<long long> targets;
  for (const auto& h : planes) {
    const Rational scaled = h.offset * q;
    if (!detail::is_integral(scaled)) {
      throw PreconditionError("q=" + std::to_string(q) + " does not clear the offset denominators");
    }
    targets.push_back(static_cast<long long>(boost::multiprecision::numerator(scaled)));
  }
  std::vector<long long> coord(n, 0);
  std::vector<long long> dot(planes.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool avoids = true;
    for (std::size_t h = 0; h < planes.size() && avoids; ++h) {
      if ((dot[h] - targets[h]) % q == 0) avoids = false;
    }
    if (avoids) ++count;
    std::size_t j = 0;
    for (; j < n; ++j) {
      ++coord[j];
      for (std::size_t h = 0; h < planes.size(); ++h) dot[h] += planes[h].normal[j];
      if (coord[j] < q) break;
      coord[j] = 0;
      for (std::size_t h = 0; h < planes.size(); ++h) dot[h] -= planes[h].normal[j] * q;
    }
    if (j == n) break;
  }
  return Integer(count);
}

/// chi_H(q), interpolated from counts at q = modulus * t for t = 1..n+1 and
/// validated at t = n+2, n+3.
inline UnivariatePolynomial toric_characteristic_polynomial(const ToricArrangement& a,
                                                            std::optional<long long> modulus = std::nullopt) {
  const long long m = modulus.value_or(default_modulus(a));
  if (m < 1) throw PreconditionError("modulus must be positive");
  const int n = a.dimension();
  std::vector<UnivariateSample> samples;
  for (int t = 1; t <= n + 1; ++t) samples.push_back({m * t, lattice_point_count(a, m * t)});
  const auto chi = interpolate_univariate(samples, n);
  for (int t = n + 2; t <= n + 3; ++t) {
    const long long q = m * t;
    if (lattice_point_count(a, q) != chi.evaluate(q)) {
      throw PreconditionError("modulus " + std::to_string(m) + " does not give polynomial lattice counts (q=" +
                              std::to_string(q) + " disagrees); use a multiple");
    }
  }
  return chi;
}

/// |Cham| = (-1)^n chi_H(0) for essential arrangements.
inline Integer chamber_count(const ToricArrangement& a, std::optional<long long> modulus = std::nullopt) {
  if (!is_essential(a)) throw PreconditionError("chamber count requires an essential arrangement");
  const Integer constant = toric_characteristic_polynomial(a, modulus).coefficient(0);
  return a.dimension() % 2 == 0 ? constant : Integer(-constant);
}

/// Graphical arrangements always sample at even q.
inline constexpr long long graphical_modulus = 2;

/// Representative coordinates x_1..x_n, each in (-1/2, 1/2].
struct TorusPoint {
  std::vector<Rational> coords;

  [[nodiscard]] Rational at(int vertex) const {
    if (vertex == 0) return 0;
    const Rational& x = coords[static_cast<std::size_t>(std::abs(vertex) - 1)];
    return vertex > 0 ? x : Rational(-x);
  }
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

/// Directs each edge from the larger coordinate to the smaller, with x_0 = 0
/// and x_{-i} = -x_i.
inline Orientation beta_map(const SymmetricGraph& g, const TorusPoint& x) {
  if (x.coords.size() != static_cast<std::size_t>(g.pairs())) throw PreconditionError("point dimension mismatch");
  const Rational half(1, 2);
  for (const Rational& c : x.coords) {
    if (c >= half || c <= -half) throw PreconditionError("coordinates must lie strictly inside (-1/2, 1/2)");
  }
  std::vector<bool> bits;
  bits.reserve(g.orbits().size());
  for (const Edge& e : g.orbits()) {
    const Rational xu = x.at(e.u);
    const Rational xv = x.at(e.v);
    if (xu == xv) throw PreconditionError("point lies on the hyperplane of edge " + to_string(e));
    bits.push_back(xu > xv);
  }
  return Orientation(std::move(bits));
}

/// A point in the chamber of w: extracts a source and its mirror sink n times
/// and spaces the coordinates evenly in (-1/2, 1/2).
inline TorusPoint witness_point(const SymmetricGraph& g, const Orientation& w) {
  if (!is_acyclic(g, w)) throw PreconditionError("orientation is not a symmetric acyclic orientation of the graph");
  const int n = g.pairs();
  std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
  const auto slot = [n](int v) { return static_cast<std::size_t>(v + n); };
  TorusPoint x{std::vector<Rational>(static_cast<std::size_t>(n))};
  const auto is_remaining_source = [&](int v) {
    for (int y : g.neighbors(v)) {
      if (!removed[slot(y)] && points(g, w, y, v)) return false;
    }
    return true;
  };
  for (int t = 1; t <= n; ++t) {
    std::optional<int> source;
    for (int i = 1; i <= n && !source; ++i) {
      for (int v : {i, -i}) {
        if (!removed[slot(v)] && is_remaining_source(v)) {
          source = v;
          break;
        }
      }
    }
    if (!source) throw ConsistencyError("no source left while building a symmetric linear extension");
    const Rational value(n + 1 - t, 2 * (n + 1));
    x.coords[static_cast<std::size_t>(std::abs(*source) - 1)] = *source > 0 ? value : Rational(-value);
    removed[slot(*source)] = true;
    removed[slot(-*source)] = true;
  }
  return x;
}

}  // namespace signedchroma
