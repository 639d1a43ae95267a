#include "pcw/pseudodist.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pcw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_row_sums(const FractionMatrix& F) {
  for (int i = 0; i < F.n; ++i) {
    double sum = 0.0;
    for (Symbol k = 0; k < F.q; ++k) {
      const double v = F.at(i, k);
      if (v < -1e-12 || v > 1.0 + 1e-12) {
        throw InputError("fraction matrix entry outside [0, 1]");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw InputError("fraction matrix row does not sum to 1");
    }
  }
}

}  // namespace

std::vector<SignalPoint> modulate(const std::vector<Symbol>& c,
                                  std::uint32_t q) {
  if (q < 2) throw InputError("modulus q must be >= 2");
  std::vector<SignalPoint> out;
  out.reserve(c.size());
  for (const Symbol v : c) {
    if (v >= q) throw InputError("symbol out of range [0, q)");
    const double angle = 2.0 * std::numbers::pi * v / q;
    out.emplace_back(std::cos(angle), std::sin(angle));
  }
  return out;
}

std::vector<double> cosine_table(std::uint32_t q) {
  std::vector<double> table(q);
  for (std::uint32_t k = 0; k < q; ++k) {
    table[k] = std::cos(2.0 * std::numbers::pi * k / q);
  }
  return table;
}

double compute_S(const FractionMatrix& F) {
  require_row_sums(F);
  const std::vector<double> cosv = cosine_table(F.q);
  double S = 0.0;
  for (int i = 0; i < F.n; ++i) {
    double proj = 0.0;
    for (Symbol k = 0; k < F.q; ++k) proj += F.at(i, k) * cosv[k];
    S += 1.0 - proj;
  }
  return 2.0 * S;
}

double compute_V(const FractionMatrix& F) {
  require_row_sums(F);
  double V = 0.0;
  for (int i = 0; i < F.n; ++i) {
    SignalPoint centroid{0.0, 0.0};
    for (Symbol k = 0; k < F.q; ++k) {
      const double angle = 2.0 * std::numbers::pi * k / F.q;
      centroid += F.at(i, k) * SignalPoint{std::cos(angle), std::sin(angle)};
    }
    V += std::norm(centroid - SignalPoint{1.0, 0.0});
  }
  return V;
}

PseudodistanceResult pseudodistance_sq(const FractionMatrix& F) {
  PseudodistanceResult r;
  r.S = compute_S(F);
  r.V = compute_V(F);
  // V = 0 exactly iff every row has all its mass on symbol 0; that is the
  // transmitted word itself, not an error event.
  r.d_squared = r.V == 0.0 ? kInf : r.S * r.S / r.V;
  return r;
}

std::vector<double> support_fractions(const FractionMatrix& F) {
  std::vector<double> x(F.n);
  for (int i = 0; i < F.n; ++i) {
    x[i] = std::min(1.0, std::max(0.0, 1.0 - F.at(i, 0)));
  }
  return x;
}

double kappa_generic(std::uint32_t q) {
  const double c = 1.0 - std::cos(2.0 * std::numbers::pi / q);
  return c * c;
}

double kappa(std::uint32_t q) {
  // q = 3 admits a sharper constant than the generic expression; for q = 2
  // and q = 4 the generic expression already gives 4 and 1.
  return q == 3 ? 3.0 : kappa_generic(q);
}

double closed_form_lower(const FractionMatrix& F) {
  const std::vector<double> x = support_fractions(F);
  double sum = 0.0, sum_sq = 0.0;
  for (const double v : x) {
    sum += v;
    sum_sq += v * v;
  }
  if (sum_sq == 0.0) return kInf;
  return kappa(F.q) * sum * sum / sum_sq;
}

double gaussian_q(double x) {
  return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double pcw_error_probability(double d, double sigma) {
  if (d < 0.0) throw InputError("distance must be nonnegative");
  if (!(sigma > 0.0)) throw InputError("sigma must be positive");
  return gaussian_q(d / (2.0 * sigma));
}

double union_bound(const std::vector<double>& distances, double sigma) {
  if (!(sigma > 0.0)) throw InputError("sigma must be positive");
  double total = 0.0;
  for (const double d : distances) {
    total += pcw_error_probability(d, sigma);
  }
  return std::min(1.0, total);
}

}  // namespace pcw
