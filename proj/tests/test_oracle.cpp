#include "pcw/oracle.hpp"

#include <cmath>

#include "doctest.h"
#include "pcw/report.hpp"
#include "pcw/rng.hpp"
#include "test_util.hpp"

using namespace pcw;

TEST_CASE("minimum codeword distance of small codes") {
  CHECK(min_codeword_distance(testutil::single_check(2)) ==
        doctest::Approx(8.0).epsilon(1e-12));
  CHECK(min_codeword_distance(testutil::single_check(3)) ==
        doctest::Approx(6.0).epsilon(1e-12));
  CHECK(min_codeword_distance(ParityCheckMatrix::make(1, 2, 2, {1, 1})) ==
        doctest::Approx(8.0).epsilon(1e-12));
  // code {0}: no nonzero codeword
  CHECK(std::isinf(
      min_codeword_distance(ParityCheckMatrix::make(2, 2, 3, {1, 0, 0, 1}))));
}

TEST_CASE("sampled minimum on the ternary single check is 6") {
  const auto H = testutil::single_check(3);
  const auto r = min_pseudodistance_empirical(H, {2}, 3, 12345);
  CHECK(r.d_squared == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(r.examined > 0);
  REQUIRE(!r.covers.empty());
  CHECK(r.covers.front().M == 1);  // codewords always included
}

TEST_CASE("empty M list reduces to the codeword minimum") {
  const auto H = testutil::k4_cycle_code(3);
  const auto r = min_pseudodistance_empirical(H, {}, 5, 9);
  CHECK(r.d_squared ==
        doctest::Approx(min_codeword_distance(H)).epsilon(1e-9));
}

TEST_CASE("sampled minimum never increases with more covers") {
  const auto H = testutil::k4_cycle_code(2);
  const auto few = min_pseudodistance_empirical(H, {2}, 1, 31);
  const auto more = min_pseudodistance_empirical(H, {2, 3}, 4, 31);
  CHECK(more.d_squared <= few.d_squared + 1e-12);
  CHECK(few.d_squared <= min_codeword_distance(H) + 1e-12);
}

TEST_CASE("verify_bounds on the worked ternary example") {
  const auto H = testutil::single_check(3);
  const auto vr = verify_bounds(H, {2, 3}, 5, 0);
  CHECK(vr.empirical_min_d2 == doctest::Approx(6.0).epsilon(1e-9));
  REQUIRE(vr.spectral.has_value());
  REQUIRE(vr.lp.has_value());
  CHECK(vr.spectral->bound == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(vr.lp->bound == doctest::Approx(6.0).epsilon(1e-8));
  CHECK(vr.spectral_sound);
  CHECK(vr.lp_sound);
  CHECK(vr.count_ineq.violations == 0);
  CHECK(vr.closed_form.violations == 0);
  CHECK(vr.per_check_quad.violations == 0);
  CHECK(vr.energy_lower.violations == 0);
  CHECK(vr.energy_upper.violations == 0);
  CHECK(vr.rank_one_lp.violations == 0);
  CHECK(vr.count_ineq.evaluated == vr.pseudocodewords_examined);
  // every finite-distance pseudocodeword enters the closed-form comparison
  CHECK(vr.closed_form.evaluated ==
        vr.pseudocodewords_examined -
            static_cast<std::int64_t>(vr.covers.size()));
}

TEST_CASE("verify_bounds skips the spectral bound on irregular codes") {
  const auto H = ParityCheckMatrix::make(2, 3, 3, {1, 1, 0, 1, 1, 1});
  const auto vr = verify_bounds(H, {2}, 2, 5);
  CHECK_FALSE(vr.spectral.has_value());
  CHECK_FALSE(vr.spectral_note.empty());
  CHECK(vr.lp.has_value());
  CHECK(vr.count_ineq.violations == 0);
  CHECK(vr.per_check_quad.violations == 0);
  CHECK(vr.energy_lower.evaluated == 0);  // no (c, d)
  CHECK(vr.energy_upper.evaluated == 0);
}

TEST_CASE("verify_bounds rejects non-unit entries") {
  CHECK_THROWS_AS(
      verify_bounds(ParityCheckMatrix::make(1, 2, 4, {2, 2}), {2}, 1, 0),
      HypothesesUnmetError);
}

TEST_CASE("verification reports are byte-identical across runs") {
  const auto H = testutil::k4_cycle_code(3);
  const auto a = serialize_report(
      report_from_verification(verify_bounds(H, {2}, 3, 777)));
  const auto b = serialize_report(
      report_from_verification(verify_bounds(H, {2}, 3, 777)));
  CHECK(a == b);
  CHECK(a.find("\"sampled minimum\"") != std::string::npos);
}

TEST_CASE("cover seeds differ across degrees and indices") {
  CHECK(cover_seed(0, 2, 0) != cover_seed(0, 2, 1));
  CHECK(cover_seed(0, 2, 0) != cover_seed(0, 3, 0));
  CHECK(cover_seed(1, 2, 0) != cover_seed(2, 2, 0));
  CHECK(cover_seed(5, 4, 7) == cover_seed(5, 4, 7));
}
