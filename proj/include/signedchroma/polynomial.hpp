#pragma once

// Exact integer-coefficient polynomials: bivariate in (k, l) for chromatic
// polynomials, univariate in q for toric characteristic polynomials.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "signedchroma/errors.hpp"
#include "signedchroma/linalg.hpp"

namespace signedchroma {

namespace detail {

inline Integer power(const Integer& base, int exponent) {
  Integer out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

/// Appends "c*vars" in canonical signed form; `first` controls the leading sign.
inline void append_term(std::string& out, const Integer& coefficient, const std::string& vars, bool first) {
  const bool negative = coefficient < 0;
  const Integer magnitude = negative ? Integer(-coefficient) : coefficient;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (vars.empty()) {
    out += magnitude.str();
  } else if (magnitude == 1) {
    out += vars;
  } else {
    out += magnitude.str() + "*" + vars;
  }
}

inline std::string variable_power(const char* name, int degree) {
  if (degree == 0) return {};
  if (degree == 1) return name;
  return std::string(name) + "^" + std::to_string(degree);
}

}  // namespace detail

/// Exponents (degree in k, degree in l).
struct Monomial {
  int k = 0;
  int l = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Total degree descending, then k-degree descending.
struct CanonicalMonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.k + a.l != b.k + b.l) return a.k + a.l > b.k + b.l;
    return a.k > b.k;
  }
};

class BivariatePolynomial {
 public:
  using Terms = std::map<Monomial, Integer, CanonicalMonomialOrder>;

  BivariatePolynomial() = default;
  BivariatePolynomial(Integer constant) { add_term({0, 0}, std::move(constant)); }  // NOLINT: implicit by design of ring literals
  BivariatePolynomial(int constant) : BivariatePolynomial(Integer(constant)) {}     // NOLINT

  static BivariatePolynomial k() { return monomial({1, 0}); }
  static BivariatePolynomial l() { return monomial({0, 1}); }
  static BivariatePolynomial monomial(Monomial m, Integer coefficient = 1) {
    BivariatePolynomial p;
    p.add_term(m, std::move(coefficient));
    return p;
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int total_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.k + terms_.begin()->first.l;
  }
  [[nodiscard]] Integer coefficient(Monomial m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  [[nodiscard]] Integer evaluate(const Integer& k, const Integer& l) const {
    Integer total = 0;
    for (const auto& [m, c] : terms_) total += c * detail::power(k, m.k) * detail::power(l, m.l);
    return total;
  }

  void add_term(Monomial m, Integer coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, std::move(coefficient));
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  BivariatePolynomial& operator-=(const BivariatePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator-(const BivariatePolynomial& a) { return BivariatePolynomial() - a; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term({ma.k + mb.k, ma.l + mb.l}, ca * cb);
    }
    return out;
  }
  BivariatePolynomial& operator*=(const BivariatePolynomial& other) { return *this = *this * other; }

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// e.g. "4*k^2 + 4*k*l + l^2 - 6*k - 2*l + 1"
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string vars = detail::variable_power("k", m.k);
      const std::string lpart = detail::variable_power("l", m.l);
      if (!vars.empty() && !lpart.empty()) vars += "*";
      vars += lpart;
      detail::append_term(out, c, vars, first);
      first = false;
    }
    return out;
  }

 private:
  Terms terms_;
};

class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Integer> ascending) : coefficients_(std::move(ascending)) { trim(); }
  UnivariatePolynomial(int constant) : coefficients_{Integer(constant)} { trim(); }  // NOLINT

  static UnivariatePolynomial q() { return UnivariatePolynomial({0, 1}); }

  /// Coefficients by ascending degree; empty for the zero polynomial.
  [[nodiscard]] const std::vector<Integer>& coefficients() const { return coefficients_; }
  [[nodiscard]] bool is_zero() const { return coefficients_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  [[nodiscard]] Integer coefficient(int degree) const {
    return degree >= 0 && static_cast<std::size_t>(degree) < coefficients_.size()
               ? coefficients_[static_cast<std::size_t>(degree)]
               : Integer(0);
  }

  [[nodiscard]] Integer evaluate(const Integer& x) const {
    Integer total = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) total = total * x + *it;
    return total;
  }

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Integer> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
    return UnivariatePolynomial(std::move(out));
  }
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a) {
    std::vector<Integer> out = a.coefficients_;
    for (auto& c : out) c = -c;
    return UnivariatePolynomial(std::move(out));
  }
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a + (-b); }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
    return UnivariatePolynomial(std::move(out));
  }

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  /// e.g. "q^2 - 3*q + 4"
  [[nodiscard]] std::string to_string() const {
    if (coefficients_.empty()) return "0";
    std::string out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
      const Integer& c = coefficients_[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      detail::append_term(out, c, detail::variable_power("q", d), first);
      first = false;
    }
    return out;
  }

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<Integer> coefficients_;
};

// ---------------------------------------------------------------------------
// Arity-generic surface, used where the variable count is only known at run time.

using Polynomial = std::variant<BivariatePolynomial, UnivariatePolynomial>;

enum class ArithOp { add, sub, mul };

inline Polynomial poly_arith(ArithOp op, const Polynomial& p, const Polynomial& r) {
  if (p.index() != r.index()) throw PreconditionError("polynomial arity mismatch");
  return std::visit(
      [&](const auto& a) -> Polynomial {
        using T = std::decay_t<decltype(a)>;
        const T& b = std::get<T>(r);
        switch (op) {
          case ArithOp::add: return a + b;
          case ArithOp::sub: return a - b;
          case ArithOp::mul: return a * b;
        }
        return T{};
      },
      p);
}

inline Integer poly_eval(const Polynomial& p, std::span<const Integer> point) {
  if (const auto* bi = std::get_if<BivariatePolynomial>(&p)) {
    if (point.size() != 2) throw PreconditionError("bivariate polynomial needs a point (k, l)");
    return bi->evaluate(point[0], point[1]);
  }
  if (point.size() != 1) throw PreconditionError("univariate polynomial needs a point (q)");
  return std::get<UnivariatePolynomial>(p).evaluate(point[0]);
}

inline std::string to_string(const Polynomial& p) {
  return std::visit([](const auto& x) { return x.to_string(); }, p);
}

// ---------------------------------------------------------------------------
// Interpolation.

struct BivariateSample {
  Integer k;
  Integer l;
  Integer value;
};

struct UnivariateSample {
  Integer q;
  Integer value;
};

namespace detail {

inline std::vector<Rational> checked_solve(const RationalMatrix& rows, const std::vector<Rational>& rhs) {
  auto solution = solve_unique(rows, rhs);
  if (!solution) throw ConsistencyError("interpolation samples are inconsistent with the degree bound");
  for (const Rational& c : *solution) {
    if (!is_integral(c)) throw ConsistencyError("interpolated polynomial has non-integer coefficients");
  }
  return *solution;
}

}  // namespace detail

/// Fits the unique polynomial supported on {k^a l^b : a + b <= bound}.
/// Samples must include the grid {1..bound+1}^2; extra samples are used as
/// additional equations and must agree exactly.
inline BivariatePolynomial interpolate_bivariate(std::span<const BivariateSample> samples, int total_degree_bound) {
  if (total_degree_bound < 0) throw PreconditionError("degree bound must be nonnegative");
  std::set<std::pair<Integer, Integer>> points;
  for (const auto& s : samples) points.emplace(s.k, s.l);
  for (int a = 1; a <= total_degree_bound + 1; ++a) {
    for (int b = 1; b <= total_degree_bound + 1; ++b) {
      if (!points.contains({Integer(a), Integer(b)})) {
        throw PreconditionError("samples must cover the grid {1.." + std::to_string(total_degree_bound + 1) + "}^2");
      }
    }
  }
  std::vector<Monomial> basis;
  for (int total = 0; total <= total_degree_bound; ++total) {
    for (int a = 0; a <= total; ++a) basis.push_back({a, total - a});
  }
  detail::RationalMatrix rows;
  std::vector<Rational> rhs;
  for (const auto& s : samples) {
    std::vector<Rational> row;
    row.reserve(basis.size());
    for (const Monomial& m : basis) row.emplace_back(detail::power(s.k, m.k) * detail::power(s.l, m.l));
    rows.push_back(std::move(row));
    rhs.emplace_back(s.value);
  }
  const auto solution = detail::checked_solve(rows, rhs);
  BivariatePolynomial out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], boost::multiprecision::numerator(solution[i]));
  return out;
}

inline UnivariatePolynomial interpolate_univariate(std::span<const UnivariateSample> samples, int degree_bound) {
  if (degree_bound < 0) throw PreconditionError("degree bound must be nonnegative");
  std::set<Integer> distinct;
  for (const auto& s : samples) distinct.insert(s.q);
  if (distinct.size() < static_cast<std::size_t>(degree_bound) + 1) {
    throw PreconditionError("need at least " + std::to_string(degree_bound + 1) + " distinct sample points");
  }
  detail::RationalMatrix rows;
  std::vector<Rational> rhs;
  for (const auto& s : samples) {
    std::vector<Rational> row;
    for (int d = 0; d <= degree_bound; ++d) row.emplace_back(detail::power(s.q, d));
    rows.push_back(std::move(row));
    rhs.emplace_back(s.value);
  }
  const auto solution = detail::checked_solve(rows, rhs);
  std::vector<Integer> coefficients;
  for (const auto& c : solution) coefficients.push_back(boost::multiprecision::numerator(c));
  return UnivariatePolynomial(std::move(coefficients));
}

}  // namespace signedchroma
