#pragma once

#include <complex>
#include <vector>

#include "pcw/cover.hpp"
#include "pcw/ring.hpp"

namespace pcw {

using SignalPoint = std::complex<double>;

/// q-ary PSK with the natural mapping: symbol k goes to exp(2*pi*i*k/q).
std::vector<SignalPoint> modulate(const std::vector<Symbol>& c,
                                  std::uint32_t q);

/// cos(2*pi*k/q) for k = 0..q-1, computed once per q so S, V and the bound
/// constants share identical trigonometric values.
std::vector<double> cosine_table(std::uint32_t q);

/// Squared effective Euclidean distance d^2 = S^2/V of a normalized symbol
/// matrix from the modulated all-zero word. V = 0 only for the all-zero
/// matrix; d_squared is then +infinity and excluded from minima.
struct PseudodistanceResult {
  double S = 0.0;
  double V = 0.0;
  double d_squared = 0.0;
};

double compute_S(const FractionMatrix& F);

/// V via the centroid form sum_i |z_i - 1|^2 with z_i the signal-space
/// centroid of row i; algebraically equal to the direct quadratic expansion.
double compute_V(const FractionMatrix& F);

PseudodistanceResult pseudodistance_sq(const FractionMatrix& F);

/// x_i = 1 - f_i(0), the total nonzero-symbol fraction per position,
/// clamped to [0, 1].
std::vector<double> support_fractions(const FractionMatrix& F);

/// (1 - cos(2*pi/q))^2.
double kappa_generic(std::uint32_t q);

/// Constant in the closed-form lower bound kappa(q) * (sum x)^2 / (sum x^2):
/// 4 for q=2 and 1 for q=4 (same as the generic value), improved to 3 for
/// q=3, generic otherwise.
double kappa(std::uint32_t q);

/// kappa(q) * (sum x)^2 / (sum x^2); +infinity when x is all zero.
double closed_form_lower(const FractionMatrix& F);

/// Standard Gaussian tail Q(x) = (1/sqrt(2*pi)) int_x^inf exp(-t^2/2) dt,
/// via erfc.
double gaussian_q(double x);

/// Pairwise error probability Q(d / (2*sigma)).
double pcw_error_probability(double d, double sigma);

/// min(1, sum_d Q(d / (2*sigma))).
double union_bound(const std::vector<double>& distances, double sigma);

}  // namespace pcw
