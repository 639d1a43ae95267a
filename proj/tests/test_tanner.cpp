#include "pcw/tanner.hpp"

#include "doctest.h"
#include "pcw/rng.hpp"
#include "test_util.hpp"

using namespace pcw;

TEST_CASE("from_matrix builds the labelled bipartite graph") {
  const auto star = tanner_from_matrix(testutil::single_check(3));
  REQUIRE(star.edges.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(star.edges[i].var == i);
    CHECK(star.edges[i].check == 0);
    CHECK(star.edges[i].label == 1);
  }

  const auto id2 =
      tanner_from_matrix(ParityCheckMatrix::make(2, 2, 2, {1, 0, 0, 1}));
  CHECK(id2.edges.size() == 2);
  CHECK(id2.var_checks[0] == std::vector<int>{0});
  CHECK(id2.var_checks[1] == std::vector<int>{1});

  // 4-cycle with labels 1,3,3,1
  const auto cyc =
      tanner_from_matrix(ParityCheckMatrix::make(2, 2, 4, {1, 3, 3, 1}));
  REQUIRE(cyc.edges.size() == 4);
  CHECK(cyc.edges[0].label == 1);  // (u1, v1)
  CHECK(cyc.edges[1].label == 3);  // (u1, v2)
  CHECK(cyc.edges[2].label == 3);  // (u2, v1)
  CHECK(cyc.edges[3].label == 1);  // (u2, v2)
}

TEST_CASE("regularity detection") {
  CHECK(regularity(tanner_from_matrix(testutil::single_check(3))) ==
        std::pair<int, int>{1, 3});
  CHECK_FALSE(regularity(tanner_from_matrix(
      ParityCheckMatrix::make(2, 3, 2, {1, 1, 0, 0, 1, 1}))));
  CHECK(regularity(tanner_from_matrix(ParityCheckMatrix::make(
            3, 6, 2, std::vector<Symbol>(18, 1)))) ==
        std::pair<int, int>{3, 6});
}

TEST_CASE("connectivity") {
  CHECK(is_connected(tanner_from_matrix(testutil::single_check(3))));
  CHECK_FALSE(
      is_connected(tanner_from_matrix(ParityCheckMatrix::make(2, 2, 2, {1, 0, 0, 1}))));
  // an all-zero column isolates its variable vertex
  CHECK_FALSE(is_connected(
      tanner_from_matrix(ParityCheckMatrix::make(1, 3, 2, {1, 1, 0}))));
}

TEST_CASE("degree sums match the nonzero count and c*n = d*m") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto H = testutil::random_code_matrix(
        3 + static_cast<int>(rng.below(4)), 2 + static_cast<int>(rng.below(3)),
        3, rng);
    const auto G = tanner_from_matrix(H);
    std::size_t nonzeros = 0;
    for (const Symbol e : H.entries) nonzeros += e != 0;
    std::size_t var_total = 0, check_total = 0;
    for (const auto& a : G.var_checks) var_total += a.size();
    for (const auto& a : G.check_vars) check_total += a.size();
    CHECK(var_total == nonzeros);
    CHECK(check_total == nonzeros);
    CHECK(G.edges.size() == nonzeros);
    if (const auto reg = regularity(G)) {
      CHECK(reg->first * G.n == reg->second * G.m);
    }
  }
}
