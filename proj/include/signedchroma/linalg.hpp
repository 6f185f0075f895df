#pragma once

// Exact rational linear algebra on small dense systems.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace signedchroma {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
inline std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix m, std::size_t columns) { return row_reduce(m, columns).size(); }

/// Solves A x = b exactly. Returns nullopt when the system is inconsistent or
/// the solution is not unique.
inline std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t columns = a.empty() ? 0 : a.front().size();
  RationalMatrix augmented = a;
  for (std::size_t r = 0; r < augmented.size(); ++r) augmented[r].push_back(b[r]);
  const auto pivots = row_reduce(augmented, columns + 1);
  if (!pivots.empty() && pivots.back() == columns) return std::nullopt;
  if (pivots.size() != columns) return std::nullopt;
  std::vector<Rational> x(columns);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = augmented[r][columns];
  return x;
}

inline bool is_integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

}  // namespace detail
}  // namespace signedchroma
