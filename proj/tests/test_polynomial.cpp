#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "signedchroma/polynomial.hpp"

using namespace signedchroma;

namespace {

const BivariatePolynomial k = BivariatePolynomial::k();
const BivariatePolynomial l = BivariatePolynomial::l();
const UnivariatePolynomial q = UnivariatePolynomial::q();

BivariatePolynomial random_bivariate(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  BivariatePolynomial p;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; a + b <= 2; ++b) p.add_term({a, b}, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("expanding the factored G-star polynomial", "[polynomial]") {
  const Polynomial product = poly_arith(ArithOp::add, poly_arith(ArithOp::mul, 2 * k + l - 1, l - 1),
                                        poly_arith(ArithOp::mul, 2 * k + l - 2, 2 * k));
  CHECK(to_string(product) == "4*k^2 + 4*k*l + l^2 - 6*k - 2*l + 1");
  const BivariatePolynomial p = std::get<BivariatePolynomial>(product);
  CHECK(std::get<BivariatePolynomial>(poly_arith(ArithOp::sub, p, p)).is_zero());
  CHECK(std::get<BivariatePolynomial>(poly_arith(ArithOp::mul, p, BivariatePolynomial(1))) == p);
}

TEST_CASE("arity mismatches are rejected", "[polynomial]") {
  CHECK_THROWS_AS(poly_arith(ArithOp::add, k, q), PreconditionError);
  const std::vector<Integer> one{Integer(1)};
  CHECK_THROWS_AS(poly_eval(k, one), PreconditionError);
  const std::vector<Integer> two{Integer(1), Integer(2)};
  CHECK_THROWS_AS(poly_eval(q, two), PreconditionError);
}

TEST_CASE("evaluation", "[polynomial]") {
  const BivariatePolynomial chi = 4 * k * k + 4 * k * l + l * l - 6 * k - 2 * l + 1;
  const std::vector<Integer> point{Integer(-1), Integer(2)};
  CHECK(poly_eval(chi, point) == 3);
  const UnivariatePolynomial chars = q * q - 3 * q + 4;
  const std::vector<Integer> zero{Integer(0)};
  CHECK(poly_eval(chars, zero) == 4);
  const std::vector<Integer> origin{Integer(0), Integer(0)};
  CHECK(poly_eval(chi, origin) == chi.coefficient({0, 0}));
}

TEST_CASE("canonical text forms", "[polynomial]") {
  CHECK(BivariatePolynomial().to_string() == "0");
  CHECK((-k).to_string() == "-k");
  CHECK((l * l * l - 1).to_string() == "l^3 - 1");
  CHECK((q * q - 3 * q + 4).to_string() == "q^2 - 3*q + 4");
  CHECK((-q + 2).to_string() == "-q + 2");
  CHECK(UnivariatePolynomial().to_string() == "0");
}

TEST_CASE("ring laws hold on random polynomials", "[polynomial]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_bivariate(rng);
    const auto b = random_bivariate(rng);
    const auto c = random_bivariate(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - b == a + BivariatePolynomial(-1) * b);
    // Evaluation is a ring homomorphism.
    for (int x = -2; x <= 2; ++x) {
      for (int y = -2; y <= 2; ++y) {
        CHECK((a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y));
        CHECK((a - c).evaluate(x, y) == a.evaluate(x, y) - c.evaluate(x, y));
      }
    }
  }
}

TEST_CASE("bivariate interpolation recovers a polynomial from grid counts", "[polynomial]") {
  const SymmetricGraph gstar(2, {{1, 2}, {2, -1}, {0, 2}});
  std::vector<BivariateSample> samples;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) samples.push_back({a, b, Integer(oracle::colorings(gstar, a, b))});
  }
  const auto p = interpolate_bivariate(samples, 2);
  CHECK(p.to_string() == "4*k^2 + 4*k*l + l^2 - 6*k - 2*l + 1");

  std::vector<BivariateSample> reversed(samples.rbegin(), samples.rend());
  CHECK(interpolate_bivariate(reversed, 2) == p);
  for (const auto& s : samples) CHECK(p.evaluate(s.k, s.l) == s.value);

  const std::vector<BivariateSample> constant{{1, 1, 1}};
  CHECK(interpolate_bivariate(constant, 0) == BivariatePolynomial(1));

  const SymmetricGraph isolated(1);
  std::vector<BivariateSample> t_samples;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) t_samples.push_back({a, b, Integer(oracle::colorings(isolated, a, b))});
  }
  CHECK(interpolate_bivariate(t_samples, 1) == 2 * k + l);
}

TEST_CASE("bivariate interpolation reports bad samples", "[polynomial]") {
  std::vector<BivariateSample> samples;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) samples.push_back({a, b, a * b});  // k*l needs bound 2
  }
  CHECK_THROWS_AS(interpolate_bivariate(samples, 1), ConsistencyError);
  samples.pop_back();
  CHECK_THROWS_AS(interpolate_bivariate(samples, 1), PreconditionError);
}

TEST_CASE("univariate interpolation", "[polynomial]") {
  const std::vector<UnivariateSample> three_lines{{6, 22}, {12, 112}, {18, 274}};
  CHECK(interpolate_univariate(three_lines, 2).to_string() == "q^2 - 3*q + 4");

  const std::vector<UnivariateSample> graphical{{4, 7}, {6, 21}, {8, 43}};
  CHECK(interpolate_univariate(graphical, 2).to_string() == "q^2 - 3*q + 3");

  const std::vector<UnivariateSample> single{{0, 9}};
  CHECK(interpolate_univariate(single, 0) == UnivariatePolynomial(9));

  const std::vector<UnivariateSample> half{{1, 0}, {3, 1}};
  CHECK_THROWS_AS(interpolate_univariate(half, 1), ConsistencyError);  // (q-1)/2
  const std::vector<UnivariateSample> repeated{{2, 1}, {2, 1}};
  CHECK_THROWS_AS(interpolate_univariate(repeated, 1), PreconditionError);
}
