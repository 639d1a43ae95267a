#include "pcw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pcw/pseudodist.hpp"
#include "pcw/rng.hpp"
#include "pcw/tanner.hpp"

namespace pcw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (M, seed) pairs in processing order. M = 1 is always present; since every
// 1-cover is the base graph itself, it is enumerated once no matter how many
// covers per M were requested.
std::vector<std::pair<int, std::uint64_t>> plan_covers(
    const std::vector<int>& M_values, int covers_per_M, std::uint64_t seed) {
  if (covers_per_M < 1) throw InputError("covers per M must be >= 1");
  std::vector<std::pair<int, std::uint64_t>> plan;
  const bool has_one =
      std::find(M_values.begin(), M_values.end(), 1) != M_values.end();
  if (!has_one) plan.emplace_back(1, cover_seed(seed, 1, 0));
  for (const int M : M_values) {
    if (M < 1) throw InputError("M values must be >= 1");
    const int reps = M == 1 ? 1 : covers_per_M;
    for (int idx = 0; idx < reps; ++idx) {
      plan.emplace_back(M, cover_seed(seed, M, idx));
    }
  }
  return plan;
}

}  // namespace

std::uint64_t cover_seed(std::uint64_t master, int M, int index) {
  const std::uint64_t h =
      splitmix64(master + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(M));
  return splitmix64(h + static_cast<std::uint64_t>(index));
}

double min_codeword_distance(const ParityCheckMatrix& H, double limit) {
  const std::vector<double> cosv = cosine_table(H.q);
  double best = kInf;
  for (const auto& c : enumerate_solutions(H, limit)) {
    double d2 = 0.0;
    bool zero = true;
    for (const Symbol v : c) {
      if (v != 0) zero = false;
      d2 += 2.0 * (1.0 - cosv[v]);
    }
    if (!zero) best = std::min(best, d2);
  }
  return best;
}

EmpiricalMin min_pseudodistance_empirical(const ParityCheckMatrix& H,
                                          const std::vector<int>& M_values,
                                          int covers_per_M, std::uint64_t seed,
                                          double limit) {
  const TannerGraph G = tanner_from_matrix(H);
  EmpiricalMin out;
  out.d_squared = kInf;
  for (const auto& [M, s] : plan_covers(M_values, covers_per_M, seed)) {
    const CoverAssignment cov = random_cover(G, M, s);
    const auto pcws = enumerate_pseudocodewords(H, cov, limit);
    for (const Pseudocodeword& p : pcws) {
      const FractionMatrix F = normalize(pcw_matrix(p));
      const double d2 = pseudodistance_sq(F).d_squared;
      ++out.examined;
      if (d2 < out.d_squared) {
        out.d_squared = d2;
        out.witness = F;
      }
    }
    out.covers.push_back(
        CoverRecord{M, s, static_cast<std::int64_t>(pcws.size())});
  }
  return out;
}

VerificationReport verify_bounds(const ParityCheckMatrix& H,
                                 const std::vector<int>& M_values,
                                 int covers_per_M, std::uint64_t seed,
                                 double limit) {
  if (!validate_matrix(H).ok()) {
    throw HypothesesUnmetError(
        "verification requires every nonzero entry to be a unit mod q");
  }

  VerificationReport vr;
  vr.n = H.n;
  vr.m = H.m;
  vr.q = H.q;
  vr.M_values = M_values;
  vr.covers_per_M = covers_per_M;
  vr.seed = seed;
  vr.limit = limit;

  const TannerGraph G = tanner_from_matrix(H);
  vr.reg = regularity(G);
  vr.connected = is_connected(G);

  try {
    vr.spectral = eigenvalue_bound(H);
  } catch (const HypothesesUnmetError& e) {
    vr.spectral_note = e.what();
  }

  LpInstance lp_inst;
  bool lp_ok = false;
  try {
    lp_inst = build_lp(H);
    lp_ok = true;
    vr.lp = lp_pseudodistance_bound(H);
  } catch (const HypothesesUnmetError& e) {
    vr.lp_note = e.what();
  }

  std::vector<std::vector<int>> supports(H.m);
  for (int j = 0; j < H.m; ++j) supports[j] = H.row_support(j);

  vr.empirical_min_d2 = kInf;
  std::vector<double> rank_one;
  for (const auto& [M, s] : plan_covers(M_values, covers_per_M, seed)) {
    const CoverAssignment cov = random_cover(G, M, s);
    const auto pcws = enumerate_pseudocodewords(H, cov, limit);
    vr.covers.push_back(
        CoverRecord{M, s, static_cast<std::int64_t>(pcws.size())});
    for (const Pseudocodeword& p : pcws) {
      ++vr.pseudocodewords_examined;
      const CountMatrix counts = pcw_matrix(p);

      const auto t1 = check_count_inequalities(counts, H);
      ++vr.count_ineq.evaluated;
      if (!t1.ok()) ++vr.count_ineq.violations;

      const FractionMatrix F = normalize(counts);
      const std::vector<double> x = support_fractions(F);
      double sum_x = 0.0, sum_x2 = 0.0;
      for (const double v : x) {
        sum_x += v;
        sum_x2 += v * v;
      }

      const double d2 = pseudodistance_sq(F).d_squared;
      if (d2 < vr.empirical_min_d2) {
        vr.empirical_min_d2 = d2;
        vr.witness = F;
      }

      if (std::isfinite(d2)) {
        ++vr.closed_form.evaluated;
        const double ratio = sum_x * sum_x / sum_x2;
        if (kappa(H.q) * ratio > d2 + kPerPcwTol ||
            kappa_generic(H.q) * ratio > d2 + kPerPcwTol) {
          ++vr.closed_form.violations;
        }
      }

      ++vr.per_check_quad.evaluated;
      bool per_check_ok = true;
      std::vector<double> y(H.m, 0.0);
      for (int j = 0; j < H.m; ++j) {
        double sj = 0.0, sj2 = 0.0;
        for (const int i : supports[j]) {
          sj += x[i];
          sj2 += x[i] * x[i];
        }
        y[j] = sj;
        if (sj * sj + kPerPcwTol < 2.0 * sj2) per_check_ok = false;
      }
      if (!per_check_ok) ++vr.per_check_quad.violations;

      double norm_y2 = 0.0;
      for (const double v : y) norm_y2 += v * v;
      if (vr.reg) {
        ++vr.energy_lower.evaluated;
        if (norm_y2 + kPerPcwTol < 2.0 * vr.reg->first * sum_x2) {
          ++vr.energy_lower.violations;
        }
      }
      if (vr.spectral) {
        ++vr.energy_upper.evaluated;
        const double cap =
            (vr.spectral->lambda1 - vr.spectral->lambda2) / H.n * sum_x *
                sum_x +
            vr.spectral->lambda2 * sum_x2;
        if (norm_y2 > cap + kPerPcwTol) ++vr.energy_upper.violations;
      }

      if (lp_ok && sum_x > 0.0) {
        ++vr.rank_one_lp.evaluated;
        rank_one.assign(static_cast<std::size_t>(H.n) * H.n, 0.0);
        const double scale = 1.0 / (sum_x * sum_x);
        for (int i = 0; i < H.n; ++i) {
          for (int ip = 0; ip < H.n; ++ip) {
            rank_one[static_cast<std::size_t>(i) * H.n + ip] =
                x[i] * x[ip] * scale;
          }
        }
        const LpFeasibility feas =
            check_lp_point(lp_inst, rank_one, kDefaultLpTol);
        const double fprime = sum_x2 * scale;
        const bool below_opt = !vr.lp || fprime <= vr.lp->optimum + kPerPcwTol;
        if (!feas.feasible || !below_opt) ++vr.rank_one_lp.violations;
      }
    }
  }

  const bool have_min = std::isfinite(vr.empirical_min_d2);
  if (vr.spectral) {
    vr.spectral_sound =
        !have_min || vr.spectral->bound <= vr.empirical_min_d2 + kBoundSoundnessTol;
    vr.spectral_gap = vr.empirical_min_d2 - vr.spectral->bound;
  }
  if (vr.lp) {
    vr.lp_sound =
        !have_min || vr.lp->bound <= vr.empirical_min_d2 + kBoundSoundnessTol;
    vr.lp_gap = vr.empirical_min_d2 - vr.lp->bound;
  }
  return vr;
}

}  // namespace pcw
