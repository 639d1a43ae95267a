#include "pcw/lp.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "pcw/cover.hpp"
#include "pcw/pseudodist.hpp"
#include "pcw/rng.hpp"
#include "pcw/tanner.hpp"
#include "test_util.hpp"

using namespace pcw;

TEST_CASE("cone matrix of a single weight-3 check") {
  const auto K = build_cone_matrix(testutil::single_check(3));
  CHECK(K.n == 3);
  CHECK(K.rows == 3);
  CHECK(K.entries == std::vector<std::int8_t>{-1, 1, 1, 1, -1, 1, 1, 1, -1});
  CHECK(K.row_labels ==
        std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}});
}

TEST_CASE("cone matrix of a weight-2 check pins the two supports together") {
  const auto K = build_cone_matrix(ParityCheckMatrix::make(1, 2, 2, {1, 1}));
  CHECK(K.entries == std::vector<std::int8_t>{-1, 1, 1, -1});
}

TEST_CASE("cone construction rejects weight-1 rows and bad entries") {
  CHECK_THROWS_AS(
      build_cone_matrix(ParityCheckMatrix::make(2, 2, 3, {1, 0, 1, 1})),
      HypothesesUnmetError);
  CHECK_THROWS_AS(
      build_cone_matrix(ParityCheckMatrix::make(1, 2, 4, {2, 2})),
      HypothesesUnmetError);
  // n = 1 forces a weight-1 row, so it is rejected at build time
  CHECK_THROWS_AS(build_cone_matrix(ParityCheckMatrix::make(1, 1, 3, {1})),
                  HypothesesUnmetError);
}

TEST_CASE("support vectors of enumerated pseudocodewords lie in the cone") {
  Rng rng(40);
  const std::uint32_t moduli[] = {2, 3, 4, 5};
  for (int trial = 0; trial < 6; ++trial) {
    const auto H = testutil::random_code_matrix(4, 2, moduli[trial % 4], rng);
    const auto K = build_cone_matrix(H);
    const auto G = tanner_from_matrix(H);
    const int M = 1 + static_cast<int>(rng.below(3));
    for (const auto& p :
         enumerate_pseudocodewords(H, random_cover(G, M, rng.next()))) {
      const auto x = support_fractions(normalize(pcw_matrix(p)));
      for (int r = 0; r < K.rows; ++r) {
        double acc = 0.0;
        for (int i = 0; i < K.n; ++i) acc += K.at(r, i) * x[i];
        CHECK(acc >= -1e-12);
      }
    }
  }
}

TEST_CASE("lp instance shape and canonical feasible points") {
  const auto inst = build_lp(testutil::single_check(3));
  CHECK(inst.n == 3);
  CHECK(inst.num_vars() == 9);

  // uniform point: feasible whenever every check has weight >= 2
  const std::vector<double> uniform(9, 1.0 / 9.0);
  CHECK(check_lp_point(inst, uniform, 1e-9).feasible);

  // rank-one embedding of a cone-feasible vector
  const std::vector<double> x{0.5, 0.5, 0.0};
  std::vector<double> y(9, 0.0);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) y[i * 3 + k] = x[i] * x[k];
  }
  CHECK(check_lp_point(inst, y, 1e-9).feasible);

  std::vector<double> infeasible(9, 0.0);
  infeasible[0] = 1.0;  // slice constraint y_11 <= y_12 + y_13 fails
  CHECK_FALSE(check_lp_point(inst, infeasible, 1e-9).feasible);
}

TEST_CASE("simplex solves the single-check instance to 1/2") {
  const auto inst = build_lp(testutil::single_check(3));
  const auto sol = solve_lp(inst);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(check_lp_point(inst, sol.y, 1e-9).feasible);

  double diag = 0.0;
  for (int i = 0; i < 3; ++i) diag += sol.y[i * 3 + i];
  CHECK(diag == doctest::Approx(sol.objective).epsilon(1e-9));
}

TEST_CASE("simplex solves the weight-2 check instance to 1/2") {
  const auto inst = build_lp(ParityCheckMatrix::make(1, 2, 2, {1, 1}));
  const auto sol = solve_lp(inst);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("simplex is deterministic and self-consistent on random codes") {
  Rng rng(63);
  const std::uint32_t moduli[] = {2, 3, 5};
  for (int trial = 0; trial < 6; ++trial) {
    const auto H = testutil::random_code_matrix(
        3 + static_cast<int>(rng.below(3)), 2 + static_cast<int>(rng.below(2)),
        moduli[trial % 3], rng);
    const auto inst = build_lp(H);
    const auto a = solve_lp(inst);
    const auto b = solve_lp(inst);
    REQUIRE(a.status == LpStatus::Optimal);
    CHECK(a.objective == b.objective);  // bitwise identical
    CHECK(a.y == b.y);
    CHECK(a.iterations == b.iterations);
    const auto feas = check_lp_point(inst, a.y, 1e-9);
    CHECK(feas.feasible);
    double diag = 0.0;
    for (int i = 0; i < inst.n; ++i) diag += a.y[i * inst.n + i];
    CHECK(std::abs(diag - a.objective) <= 1e-9);
  }
}

TEST_CASE("lp bound on the single-check worked examples") {
  for (const auto& [q, expect] :
       std::vector<std::pair<std::uint32_t, double>>{{2, 8.0}, {3, 6.0}, {4, 2.0}}) {
    const auto r = lp_pseudodistance_bound(testutil::single_check(q));
    CHECK(r.optimum == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.bound == doctest::Approx(expect).epsilon(1e-8));
  }
}

TEST_CASE("lp bound is sound against enumerated pseudocodewords") {
  Rng rng(74);
  const std::uint32_t moduli[] = {2, 3, 4};
  for (int trial = 0; trial < 5; ++trial) {
    const auto H = testutil::random_code_matrix(4, 2, moduli[trial % 3], rng);
    const auto r = lp_pseudodistance_bound(H);
    const auto G = tanner_from_matrix(H);
    for (int M = 1; M <= 2; ++M) {
      for (const auto& p :
           enumerate_pseudocodewords(H, random_cover(G, M, rng.next()))) {
        const auto F = normalize(pcw_matrix(p));
        const double d2 = pseudodistance_sq(F).d_squared;
        if (std::isinf(d2)) continue;
        CHECK(r.bound <= d2 + 1e-8);

        // rank-one embedding: feasible, with diagonal mass below the optimum
        const auto x = support_fractions(F);
        double sum = 0.0, sum_sq = 0.0;
        for (const double v : x) {
          sum += v;
          sum_sq += v * v;
        }
        std::vector<double> y(static_cast<std::size_t>(H.n) * H.n);
        for (int i = 0; i < H.n; ++i) {
          for (int k = 0; k < H.n; ++k) {
            y[static_cast<std::size_t>(i) * H.n + k] =
                x[i] * x[k] / (sum * sum);
          }
        }
        const auto inst = build_lp(H);
        CHECK(check_lp_point(inst, y, 1e-9).feasible);
        CHECK(sum_sq / (sum * sum) <= r.optimum + 1e-9);
      }
    }
  }
}

TEST_CASE("lp export contains the objective, constraints and bounds") {
  const auto inst = build_lp(testutil::single_check(3));
  std::ostringstream out;
  export_lp(inst, out);
  const std::string text = out.str();
  CHECK(text.find("Maximize") != std::string::npos);
  CHECK(text.find("obj: y_1_1 + y_2_2 + y_3_3") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("mass:") != std::string::npos);
  CHECK(text.find("= 1") != std::string::npos);
  CHECK(text.find(">= 0") != std::string::npos);
  CHECK(text.find("Bounds") != std::string::npos);
  CHECK(text.find("0 <= y_3_3") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
  // one row-slice and one column-slice block per (i, cone row) pair
  std::size_t rs = 0, pos = 0;
  while ((pos = text.find("rs_", pos)) != std::string::npos) {
    ++rs;
    ++pos;
  }
  CHECK(rs == 9);
}
