#include "catch_amalgamated.hpp"
#include "signedchroma/verify.hpp"

using namespace signedchroma;

namespace {

SymmetricGraph gstar() { return SymmetricGraph(2, {{1, 2}, {2, -1}, {0, 2}}); }

std::string failures(const VerificationReport& r) {
  std::string out;
  for (const Check& c : r.checks) {
    if (!c.holds) out += c.name + ": " + c.lhs + " != " + c.rhs + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("the fixed suite on G-star", "[verify]") {
  const auto r = verify_suite(FrozenGraph(gstar()));
  INFO(failures(r));
  CHECK(r.passed());
  CHECK(r.graph_digest == "n=2;{0,2};{1,2};{-1,2}");
  const Check* main = r.find("main_theorem");
  REQUIRE(main != nullptr);
  CHECK(main->lhs == "3");
  CHECK(main->rhs == "3");
  CHECK(r.find("greene_zaslavsky")->lhs == "6");
  CHECK(r.find("mainext_zero") == nullptr);
  CHECK(r.find("frozen_theorem[S={1,2}]") != nullptr);
  CHECK(r.find("deletion_contraction[e={1,2}]") != nullptr);
  CHECK(r.find("height_properties[S={}]") == nullptr);
}

TEST_CASE("the exhaustive suite adds height checks", "[verify]") {
  const auto r = verify_suite(FrozenGraph(gstar(), {1}), VerifyDepth::exhaustive);
  INFO(failures(r));
  CHECK(r.passed());
  const Check* frozen = r.find("frozen_theorem");
  REQUIRE(frozen != nullptr);
  CHECK(frozen->lhs == "5");
  CHECK(frozen->rhs == "5");
  CHECK(r.find("height_properties[S={}]") != nullptr);
  CHECK(r.find("flip_path[S={1}]") != nullptr);
}

TEST_CASE("graphs that are not weakly connected", "[verify]") {
  const auto r = verify_suite(FrozenGraph(SymmetricGraph(1)), VerifyDepth::exhaustive);
  INFO(failures(r));
  CHECK(r.passed());
  const Check* zero = r.find("mainext_zero");
  REQUIRE(zero != nullptr);
  CHECK(zero->lhs == "0");
  CHECK(zero->rhs == "0");
  CHECK(r.find("chamber_class") == nullptr);
}

TEST_CASE("the pair bound", "[verify]") {
  const auto big = random_symmetric_graph(3, 5, 1, 2, false);
  CHECK_THROWS_AS(verify_suite(FrozenGraph(big)), PreconditionError);
  CHECK_THROWS_AS(verify_suite(FrozenGraph(gstar()), VerifyDepth::fixed, 1), PreconditionError);
  CHECK(verify_suite(FrozenGraph(big), VerifyDepth::fixed, 5).passed());
}

TEST_CASE("random symmetric graphs", "[verify]") {
  CHECK(random_symmetric_graph(1, 2, 1, 1, false).orbits().size() == 6);  // complete: 2n^2 orbits
  CHECK(random_symmetric_graph(1, 3, 0, 1, false).edges().empty());
  CHECK(random_symmetric_graph(42, 4, 1, 3, false) == random_symmetric_graph(42, 4, 1, 3, false));
  CHECK(is_weakly_connected(random_symmetric_graph(9, 4, 1, 4, true)));
  CHECK_THROWS_AS(random_symmetric_graph(1, 2, 0, 1, true), PreconditionError);
  CHECK_THROWS_AS(random_symmetric_graph(1, 2, 3, 2, false), PreconditionError);
  CHECK_THROWS_AS(random_symmetric_graph(1, 2, 1, 0, false), PreconditionError);
  CHECK(random_symmetric_graph(5, 0, 1, 2, true) == SymmetricGraph(0));
}

TEST_CASE("index set text", "[verify]") {
  CHECK(format_index_set({}) == "{}");
  CHECK(format_index_set({1, 2}) == "{1,2}");
}

TEST_CASE("random batteries pass at both depths", "[verify]") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const auto g = random_symmetric_graph(seed, 1 + static_cast<int>(seed % 3), 1 + seed % 2, 3, seed % 2 == 0);
    const auto r = verify_suite(FrozenGraph(g), seed % 2 == 0 ? VerifyDepth::exhaustive : VerifyDepth::fixed);
    INFO(g.digest() << "\n" << failures(r));
    CHECK(r.passed());
  }
}
