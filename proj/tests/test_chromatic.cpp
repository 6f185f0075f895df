#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "signedchroma/chromatic.hpp"
#include "signedchroma/orientations.hpp"
#include "signedchroma/verify.hpp"

using namespace signedchroma;

namespace {

const BivariatePolynomial k = BivariatePolynomial::k();
const BivariatePolynomial l = BivariatePolynomial::l();

SymmetricGraph gstar() { return SymmetricGraph(2, {{1, 2}, {2, -1}, {0, 2}}); }
SymmetricGraph pstar() { return SymmetricGraph(1, {{0, 1}}); }
SymmetricGraph tstar() { return SymmetricGraph(1); }
SymmetricGraph mirror_loop() { return SymmetricGraph(1, {{1, -1}}); }

std::vector<SymmetricGraph> random_family(int count) {
  std::vector<SymmetricGraph> out;
  for (int s = 0; s < count; ++s) {
    out.push_back(random_symmetric_graph(static_cast<std::uint64_t>(1000 + s), 1 + s % 4, 1 + s % 3, 3, false));
  }
  return out;
}

}  // namespace

TEST_CASE("coloring counts match the full-vertex oracle", "[chromatic]") {
  CHECK(count_proper_colorings(gstar(), 1, 1) == 2);
  CHECK(count_proper_colorings(gstar(), 1, 2) == 7);
  CHECK(count_proper_colorings(SymmetricGraph(0), 3, 2) == 1);
  for (const auto& g : random_family(40)) {
    for (int a = 0; a <= 2; ++a) {
      for (int b = 1; b <= 3; ++b) CHECK(count_proper_colorings(g, a, b) == oracle::colorings(g, a, b));
    }
  }
}

TEST_CASE("coloring count preconditions", "[chromatic]") {
  CHECK_THROWS_AS(count_proper_colorings(gstar(), -1, 1), PreconditionError);
  CHECK_THROWS_AS(count_proper_colorings(gstar(), 1, 0), PreconditionError);
}

TEST_CASE("proper coloring predicate", "[chromatic]") {
  // v_1 = 1, v_2 = 0_1: the edges {1,2}, {-1,2}, {0,2} all see distinct colors.
  CHECK(is_proper(gstar(), Coloring{{1, false}, {1, true}}));
  CHECK_FALSE(is_proper(gstar(), Coloring{{1, false}, {0, false}}));
  CHECK_FALSE(is_proper(mirror_loop(), Coloring{{1, true}}));
  CHECK(is_proper(mirror_loop(), Coloring{{1, false}}));
}

TEST_CASE("chromatic polynomial of G-star by both methods", "[chromatic]") {
  const std::string expected = "4*k^2 + 4*k*l + l^2 - 6*k - 2*l + 1";
  CHECK(chromatic_polynomial(gstar(), ChromaticMethod::deletion_contraction).to_string() == expected);
  CHECK(chromatic_polynomial(gstar(), ChromaticMethod::interpolation).to_string() == expected);
  CHECK(chromatic_polynomial(gstar()) == (2 * k + l - 1) * (l - 1) + (2 * k + l - 2) * (2 * k));
}

TEST_CASE("small chromatic polynomials", "[chromatic]") {
  for (auto method : {ChromaticMethod::deletion_contraction, ChromaticMethod::interpolation}) {
    CHECK(chromatic_polynomial(pstar(), method) == 2 * k + l - 1);
    CHECK(chromatic_polynomial(mirror_loop(), method) == 2 * k);
    CHECK(chromatic_polynomial(tstar(), method) == 2 * k + l);
    CHECK(chromatic_polynomial(SymmetricGraph(0), method) == BivariatePolynomial(1));
  }
}

TEST_CASE("base case factorization", "[chromatic]") {
  // Pair 1 isolated, pair 2 joined to v_0, pair 3 with a mirror edge and a v_0 edge.
  const SymmetricGraph base(3, {{0, 2}, {3, -3}, {0, 3}});
  CHECK(base_case_factorization(base) == (2 * k + l) * (2 * k + l - 1) * (2 * k));
  CHECK(base_case_factorization(mirror_loop()) == 2 * k);
  CHECK(count_proper_colorings(mirror_loop(), 3, 4) == 6);
  CHECK(base_case_factorization(SymmetricGraph(0)) == BivariatePolynomial(1));
  CHECK_THROWS_AS(base_case_factorization(gstar()), PreconditionError);
}

TEST_CASE("methods agree and match counts on random graphs", "[chromatic]") {
  for (const auto& g : random_family(60)) {
    const auto dc = chromatic_polynomial(g, ChromaticMethod::deletion_contraction);
    CHECK(dc == chromatic_polynomial(g, ChromaticMethod::interpolation));
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) CHECK(dc.evaluate(a, b) == Integer(oracle::colorings(g, a, b)));
    }
  }
}

TEST_CASE("deletion-contraction identity for every contractible edge", "[chromatic]") {
  for (const auto& g : random_family(60)) {
    for (const Edge& e : contractible_edges(g)) {
      CHECK(chromatic_polynomial(g) ==
            chromatic_polynomial(delete_edge_pair(g, e)) - chromatic_polynomial(contract(g, e)));
    }
  }
}

TEST_CASE("splitting identity over independent index sets", "[chromatic]") {
  for (const auto& g : random_family(60)) {
    for (int a = 1; a <= 3; ++a) CHECK(count_proper_colorings(g, a, 2) == independent_split_count(g, a));
  }
}

TEST_CASE("main invariants", "[chromatic]") {
  const auto g = main_invariant(gstar());
  CHECK(g.acyc_eval == 6);
  CHECK(g.classes_eval == 3);
  const auto p = main_invariant(pstar());
  CHECK(p.acyc_eval == 2);
  CHECK(p.classes_eval == 1);
  // The isolated pair is not weakly connected, so its class invariant is 0.
  const auto t = main_invariant(tstar());
  CHECK(t.acyc_eval == 1);
  CHECK(t.classes_eval == 0);
  CHECK(signed_evaluation(chromatic_polynomial(gstar()), 2, -1, 2) == 3);
}

TEST_CASE("alternating acyclic sums", "[chromatic]") {
  const auto acyc = [](const SymmetricGraph& h) { return Integer(oracle::acyclic_orientations(h).size()); };
  CHECK(alternating_acyc_sum(FrozenGraph(gstar()), acyc) == 3);
  CHECK(alternating_acyc_sum(FrozenGraph(gstar(), {1}), acyc) == 5);
  CHECK(alternating_acyc_sum(FrozenGraph(SymmetricGraph(0)), acyc) == 1);
  CHECK(acyc(gstar()) == 6);
  CHECK(acyc(delete_index_set(gstar(), {1})) == 2);
  CHECK(acyc(delete_index_set(gstar(), {2})) == 1);
  for (const auto& g : random_family(60)) {
    if (g.edges().size() > 16) continue;  // keep the 2^|E| oracle fast
    CHECK(alternating_acyc_sum(FrozenGraph(g), acyc) == main_invariant(g).classes_eval);
  }
}
