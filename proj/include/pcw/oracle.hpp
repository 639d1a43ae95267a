#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcw/cover.hpp"
#include "pcw/lp.hpp"
#include "pcw/ring.hpp"
#include "pcw/spectral.hpp"

namespace pcw {

/// Derived seed for cover index `index` at cover degree M; keeps sampled
/// covers independent of each other while reproducible from one master seed.
std::uint64_t cover_seed(std::uint64_t master, int M, int index);

/// Minimum squared Euclidean distance between the modulated all-zero word
/// and any other modulated codeword; +infinity if the code is {0}.
double min_codeword_distance(const ParityCheckMatrix& H,
                             double limit = kDefaultEnumerationLimit);

struct CoverRecord {
  int M = 1;
  std::uint64_t seed = 0;
  std::int64_t pseudocodewords = 0;
};

struct EmpiricalMin {
  double d_squared = 0.0;  // +infinity if no finite value was seen
  FractionMatrix witness;  // valid when d_squared is finite
  std::vector<CoverRecord> covers;
  std::int64_t examined = 0;
};

/// Minimum finite d^2 over all pseudocodewords of covers_per_M sampled
/// covers for each M in M_values; M = 1 (the codewords) is always included.
/// Sampled covers under-cover the full pseudocodeword set, so this is a
/// yardstick for lower bounds, not a certificate of the true minimum.
EmpiricalMin min_pseudodistance_empirical(
    const ParityCheckMatrix& H, const std::vector<int>& M_values,
    int covers_per_M, std::uint64_t seed,
    double limit = kDefaultEnumerationLimit);

struct CheckCounter {
  std::int64_t evaluated = 0;
  std::int64_t violations = 0;
};

struct VerificationReport {
  // code summary
  int n = 0;
  int m = 0;
  std::uint32_t q = 2;
  std::optional<std::pair<int, int>> reg;
  bool connected = false;

  std::vector<CoverRecord> covers;
  std::int64_t pseudocodewords_examined = 0;

  double empirical_min_d2 = 0.0;  // "sampled minimum"; +inf if none finite
  FractionMatrix witness;

  CheckCounter count_ineq;      // exact integer count inequalities
  CheckCounter closed_form;     // closed-form lower expressions vs d^2
  CheckCounter per_check_quad;  // per check j: (sum x)^2 >= 2 sum x^2
  CheckCounter energy_lower;    // ||x Hs^T||^2 >= 2c ||x||^2
  CheckCounter energy_upper;    // ||x Hs^T||^2 <= (l1-l2)/n (sum x)^2 + l2 ||x||^2
  CheckCounter rank_one_lp;     // x x^T/(sum x)^2 feasible, f' <= optimum

  std::optional<SpectralBoundReport> spectral;
  std::string spectral_note;  // set when the spectral bound is skipped
  bool spectral_sound = true;
  double spectral_gap = 0.0;  // empirical minimum minus bound

  std::optional<LpBoundReport> lp;
  std::string lp_note;
  bool lp_sound = true;
  double lp_gap = 0.0;

  // config echo
  std::vector<int> M_values;
  int covers_per_M = 0;
  std::uint64_t seed = 0;
  double limit = 0.0;
};

inline constexpr double kBoundSoundnessTol = 1e-8;
inline constexpr double kPerPcwTol = 1e-9;

/// Full ground-truth sweep: enumerate pseudocodewords over sampled covers,
/// run every per-pseudocodeword inequality check, compute the sampled
/// minimum, and compare both global bounds against it. Deterministic given
/// the seed. Requires unit entries (HypothesesUnmetError otherwise).
VerificationReport verify_bounds(const ParityCheckMatrix& H,
                                 const std::vector<int>& M_values,
                                 int covers_per_M, std::uint64_t seed,
                                 double limit = kDefaultEnumerationLimit);

}  // namespace pcw
