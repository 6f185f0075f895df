#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "signedchroma/chromatic.hpp"
#include "signedchroma/orientations.hpp"
#include "signedchroma/toric.hpp"
#include "signedchroma/verify.hpp"

using namespace signedchroma;

namespace {

SymmetricGraph gstar() { return SymmetricGraph(2, {{1, 2}, {2, -1}, {0, 2}}); }

ToricArrangement three_lines() {
  ToricArrangement a(2);
  a.add(make_toric_hyperplane({1, -2}, 0));
  a.add(make_toric_hyperplane({2, -1}, 0));
  a.add(make_toric_hyperplane({1, -1}, 0));
  return a;
}

std::vector<oracle::Affine> three_lines_affine() { return {{{1, -2}, 0}, {{2, -1}, 0}, {{1, -1}, 0}}; }

std::vector<SymmetricGraph> family(int count, bool weak) {
  std::vector<SymmetricGraph> out;
  for (int s = 0; s < count; ++s) {
    out.push_back(random_symmetric_graph(static_cast<std::uint64_t>(77 + s), 1 + s % 4, 1 + s % 3, 3, weak));
  }
  return out;
}

}  // namespace

TEST_CASE("hyperplane normalization", "[toric]") {
  const auto h = make_toric_hyperplane({-2, 4}, 1);
  CHECK(h.normal == std::vector<long long>{1, -2});
  CHECK(h.offset == Rational(1, 2));
  CHECK(make_toric_hyperplane({2}, 1) == ToricHyperplane{{1}, Rational(1, 2)});
  CHECK(make_toric_hyperplane({3, 0}, Rational(7, 2)).offset == Rational(1, 6));
  CHECK_THROWS_AS(make_toric_hyperplane({0, 0}, 0), PreconditionError);
  ToricArrangement a(1);
  CHECK_THROWS_AS(a.add(make_toric_hyperplane({1, 1}, 0)), PreconditionError);
}

TEST_CASE("graphical arrangements", "[toric]") {
  const auto a = build_graphical_arrangement(gstar());
  CHECK(a.dimension() == 2);
  const std::vector<ToricHyperplane> expected{{{0, 1}, 0}, {{1, -1}, 0}, {{1, 1}, 0}};
  CHECK(a.hyperplanes() == expected);

  const auto loop = build_graphical_arrangement(SymmetricGraph(1, {{1, -1}}));
  const std::vector<ToricHyperplane> mirror{{{1}, 0}, {{1}, Rational(1, 2)}};
  CHECK(loop.hyperplanes() == mirror);

  CHECK(build_graphical_arrangement(SymmetricGraph(1)).hyperplanes().empty());
  // Duplicate hyperplanes merge: a v_0 edge and a mirror edge share x_1 = 0.
  CHECK(build_graphical_arrangement(SymmetricGraph(1, {{0, 1}, {1, -1}})).hyperplanes().size() == 2);
}

TEST_CASE("essentiality", "[toric]") {
  CHECK(is_essential(build_graphical_arrangement(gstar())));
  CHECK_FALSE(is_essential(build_graphical_arrangement(SymmetricGraph(1))));
  CHECK(is_essential(three_lines()));
  for (const auto& g : family(80, false)) {
    CHECK(is_essential(build_graphical_arrangement(g)) == is_weakly_connected(g));
  }
}

TEST_CASE("lattice point counts", "[toric]") {
  CHECK(lattice_point_count(build_graphical_arrangement(gstar()), 4) == 7);
  CHECK(lattice_point_count(three_lines(), 6) == 22);
  CHECK(lattice_point_count(ToricArrangement(3), 5) == 125);
  for (long long q : {3, 5, 6, 12, 18}) {
    CHECK(lattice_point_count(three_lines(), q) == Integer(oracle::lattice_count(three_lines_affine(), 2, q)));
  }
  CHECK_THROWS_AS(lattice_point_count(build_graphical_arrangement(SymmetricGraph(1, {{1, -1}})), 3),
                  PreconditionError);
}

TEST_CASE("lattice counts agree with the unnormalized oracle", "[toric]") {
  for (const auto& g : family(60, false)) {
    const auto a = build_graphical_arrangement(g);
    const auto planes = oracle::graphical_planes(g);
    for (long long q : {2, 4, 6}) {
      CHECK(lattice_point_count(a, q) == Integer(oracle::lattice_count(planes, g.pairs(), q)));
    }
  }
  // The congruence 2x_1 + 2x_2 = 2/3 (mod 1) is two primitive hyperplanes.
  ToricArrangement shifted(2);
  shifted.add(make_toric_hyperplane({2, 2}, Rational(2, 3)));
  shifted.add(make_toric_hyperplane({-2, -2}, Rational(-5, 3)));
  CHECK(shifted.hyperplanes().size() == 2);
  const std::vector<oracle::Affine> affine{{{2, 2}, Rational(2, 3)}};
  for (long long q : {6, 12, 18}) CHECK(lattice_point_count(shifted, q) == Integer(oracle::lattice_count(affine, 2, q)));
}

TEST_CASE("lattice counts at even q are (k,2)-colorings", "[toric]") {
  for (const auto& g : family(60, false)) {
    const auto a = build_graphical_arrangement(g);
    for (int k = 1; k <= 4; ++k) CHECK(lattice_point_count(a, 2 * k + 2) == count_proper_colorings(g, k, 2));
  }
}

TEST_CASE("characteristic polynomials", "[toric]") {
  const auto a = build_graphical_arrangement(gstar());
  CHECK(toric_characteristic_polynomial(a, 2).to_string() == "q^2 - 3*q + 3");
  CHECK(toric_characteristic_polynomial(three_lines(), 6).to_string() == "q^2 - 3*q + 4");
  CHECK(toric_characteristic_polynomial(three_lines()).to_string() == "q^2 - 3*q + 4");
  CHECK(toric_characteristic_polynomial(ToricArrangement(3), 1) == UnivariatePolynomial::q() * UnivariatePolynomial::q() * UnivariatePolynomial::q());
  // Sampling at every q is outside the polynomial regime for these lines.
  CHECK_THROWS_AS(toric_characteristic_polynomial(three_lines(), 1), PreconditionError);
  CHECK(lattice_point_count(three_lines(), 5) == 12);
  CHECK(toric_characteristic_polynomial(three_lines()).evaluate(5) == 14);
}

TEST_CASE("default modulus", "[toric]") {
  CHECK(default_modulus(three_lines()) == 3);
  CHECK(default_modulus(build_graphical_arrangement(gstar())) == 2);
  CHECK(default_modulus(ToricArrangement(2)) == 1);
  ToricArrangement half(1);
  half.add(make_toric_hyperplane({1}, Rational(1, 2)));
  CHECK(default_modulus(half) == 2);
}

TEST_CASE("substituting q = 2k+2 into the chromatic polynomial", "[toric]") {
  for (const auto& g : family(40, false)) {
    const auto chi = chromatic_polynomial(g);
    const auto chars = toric_characteristic_polynomial(build_graphical_arrangement(g), graphical_modulus);
    for (int k = 0; k <= 6; ++k) CHECK(chars.evaluate(2 * k + 2) == chi.evaluate(k, 2));
  }
}

TEST_CASE("chamber counts", "[toric]") {
  CHECK(chamber_count(build_graphical_arrangement(gstar()), 2) == 3);
  CHECK(chamber_count(three_lines()) == 4);
  CHECK(chamber_count(build_graphical_arrangement(SymmetricGraph(1, {{1, -1}})), 2) == 2);
  CHECK_THROWS_AS(chamber_count(build_graphical_arrangement(SymmetricGraph(1))), PreconditionError);
  for (const auto& g : family(60, true)) {
    CHECK(chamber_count(build_graphical_arrangement(g), graphical_modulus) ==
          Integer(flip_classes(FrozenGraph(g)).class_count));
  }
}

TEST_CASE("numeric deletion-restriction for chambers", "[toric]") {
  const auto chambers = [](const SymmetricGraph& h) {
    return chamber_count(build_graphical_arrangement(h), graphical_modulus);
  };
  for (const auto& g : family(60, true)) {
    for (const Edge& e : contractible_edges(g)) {
      const auto deleted = delete_edge_pair(g, e);
      Integer rhs = chambers(contract(g, e));
      if (is_weakly_connected(deleted)) rhs += chambers(deleted);
      CHECK(chambers(g) == rhs);
    }
  }
}

TEST_CASE("the coordinate map", "[toric]") {
  const auto g = gstar();
  const TorusPoint x{{Rational(1, 10), Rational(3, 10)}};
  CHECK(format_orientation(g, beta_map(g, x)) == "2>0,2>1,2>-1");
  const TorusPoint y{{Rational(3, 10), Rational(1, 10)}};
  const auto w = beta_map(g, y);
  CHECK((is_source(g, w, 1) || is_sink(g, w, 1)));
  const TorusPoint minus{{Rational(-1, 10), Rational(-3, 10)}};
  CHECK(is_acyclic(g, beta_map(g, minus)));

  CHECK_THROWS_AS(beta_map(g, TorusPoint{{Rational(1, 2), Rational(1, 10)}}), PreconditionError);
  CHECK_THROWS_AS(beta_map(g, TorusPoint{{Rational(1, 10), Rational(1, 10)}}), PreconditionError);
  CHECK_THROWS_AS(beta_map(g, TorusPoint{{Rational(1, 10), 0}}), PreconditionError);
}

TEST_CASE("witness points invert the coordinate map", "[toric]") {
  CHECK(witness_point(SymmetricGraph(0), Orientation{}).coords.empty());
  const auto g = gstar();
  const auto top = parse_orientation(g, "2>0,2>1,2>-1");
  const auto x = witness_point(g, top);
  CHECK(x.coords[1] > x.coords[0]);
  CHECK(x.coords[0] > 0);
  for (const auto& h : family(80, false)) {
    for (const auto& w : enumerate_orientations(h)) {
      const auto p = witness_point(h, w);
      for (const auto& c : p.coords) CHECK(abs(c) < Rational(1, 2));
      CHECK(beta_map(h, p) == w);
    }
  }
}
