#pragma once

#include <cstdint>
#include <vector>

#include "pcw/ring.hpp"

namespace pcw {

/// 0/1 support matrix H_s of H and its Gram matrix L = H_s^T H_s.
struct SupportGram {
  int m = 0;
  int n = 0;
  std::vector<std::int8_t> hs;     // row-major m*n, 0/1
  std::vector<std::int64_t> gram;  // row-major n*n, symmetric

  std::int64_t gram_at(int i, int k) const {
    return gram[static_cast<std::size_t>(i) * n + k];
  }
};

SupportGram support_gram(const ParityCheckMatrix& H);

inline constexpr double kDefaultJacobiTol = 1e-12;

/// All eigenvalues of a symmetric matrix (row-major a, size n*n), sorted
/// descending. Cyclic Jacobi rotations, iterated until the off-diagonal
/// Frobenius norm falls below tol times the Frobenius norm of the input.
/// Throws InputError on non-symmetric input.
std::vector<double> symmetric_spectrum(const std::vector<double>& a, int n,
                                       double tol = kDefaultJacobiTol);

struct SpectralBoundReport {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int c = 0;  // column weight
  int d = 0;  // row weight
  int n = 0;
  std::uint32_t q = 2;
  double kappa_used = 0.0;
  double kappa_generic_value = 0.0;
  double bound = 0.0;    // 0 when vacuous
  bool vacuous = false;  // 2c <= lambda2: the bound carries no information
  double lambda1_cd_gap = 0.0;
};

/// Eigenvalue lower bound kappa(q) * n * (2c - lambda2) / (lambda1 - lambda2)
/// on the squared minimum pseudodistance. Requires unit entries and a
/// connected (c, d)-regular Tanner graph; refuses (HypothesesUnmetError)
/// otherwise, or when |lambda1 - c*d| exceeds 1e-6.
SpectralBoundReport eigenvalue_bound(const ParityCheckMatrix& H,
                                     double jacobi_tol = kDefaultJacobiTol);

}  // namespace pcw
