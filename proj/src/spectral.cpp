#include "pcw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pcw/pseudodist.hpp"
#include "pcw/tanner.hpp"

namespace pcw {

SupportGram support_gram(const ParityCheckMatrix& H) {
  SupportGram g;
  g.m = H.m;
  g.n = H.n;
  g.hs.resize(static_cast<std::size_t>(H.m) * H.n);
  for (int j = 0; j < H.m; ++j) {
    for (int i = 0; i < H.n; ++i) {
      g.hs[static_cast<std::size_t>(j) * H.n + i] = H.at(j, i) != 0 ? 1 : 0;
    }
  }
  g.gram.assign(static_cast<std::size_t>(H.n) * H.n, 0);
  for (int j = 0; j < H.m; ++j) {
    const std::vector<int> support = H.row_support(j);
    for (const int a : support) {
      for (const int b : support) {
        ++g.gram[static_cast<std::size_t>(a) * H.n + b];
      }
    }
  }
  return g;
}

namespace {

double off_diagonal_sq(const std::vector<double>& a, int n) {
  double off = 0.0;
  for (int p = 0; p < n; ++p) {
    for (int r = p + 1; r < n; ++r) {
      const double v = a[static_cast<std::size_t>(p) * n + r];
      off += 2.0 * v * v;
    }
  }
  return off;
}

}  // namespace

std::vector<double> symmetric_spectrum(const std::vector<double>& a, int n,
                                       double tol) {
  if (n < 1 || a.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("matrix size does not match n");
  }
  double max_abs = 0.0;
  for (const double v : a) max_abs = std::max(max_abs, std::abs(v));
  for (int p = 0; p < n; ++p) {
    for (int r = p + 1; r < n; ++r) {
      const double d = std::abs(a[static_cast<std::size_t>(p) * n + r] -
                                a[static_cast<std::size_t>(r) * n + p]);
      if (d > 1e-12 * std::max(1.0, max_abs)) {
        throw InputError("matrix is not symmetric");
      }
    }
  }

  std::vector<double> w = a;
  auto at = [&](int r, int c) -> double& {
    return w[static_cast<std::size_t>(r) * n + c];
  };
  double norm_sq = 0.0;
  for (const double v : a) norm_sq += v * v;

  const int max_sweeps = 100;
  int sweep = 0;
  while (norm_sq > 0.0 && off_diagonal_sq(w, n) > tol * tol * norm_sq) {
    if (++sweep > max_sweeps) {
      throw std::runtime_error("jacobi sweep limit exceeded");
    }
    for (int p = 0; p < n; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apr = at(p, r);
        if (apr == 0.0) continue;
        const double app = at(p, p);
        const double arr = at(r, r);
        const double theta = (arr - app) / (2.0 * apr);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        at(p, p) = app - t * apr;
        at(r, r) = arr + t * apr;
        at(p, r) = 0.0;
        at(r, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == r) continue;
          const double akp = at(k, p);
          const double akr = at(k, r);
          at(k, p) = akp - s * (akr + tau * akp);
          at(p, k) = at(k, p);
          at(k, r) = akr + s * (akp - tau * akr);
          at(r, k) = at(k, r);
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

SpectralBoundReport eigenvalue_bound(const ParityCheckMatrix& H,
                                     double jacobi_tol) {
  if (!validate_matrix(H).ok()) {
    throw HypothesesUnmetError(
        "eigenvalue bound requires every nonzero entry to be a unit mod q");
  }
  const TannerGraph G = tanner_from_matrix(H);
  const auto reg = regularity(G);
  if (!reg) {
    throw HypothesesUnmetError(
        "eigenvalue bound requires a (c,d)-regular parity-check matrix");
  }
  if (!is_connected(G)) {
    throw HypothesesUnmetError(
        "eigenvalue bound requires a connected Tanner graph");
  }
  if (H.n < 2) {
    throw HypothesesUnmetError("eigenvalue bound requires n >= 2");
  }

  const SupportGram g = support_gram(H);
  std::vector<double> L(g.gram.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    L[i] = static_cast<double>(g.gram[i]);
  }
  const std::vector<double> eig = symmetric_spectrum(L, H.n, jacobi_tol);

  SpectralBoundReport report;
  report.lambda1 = eig[0];
  report.lambda2 = eig[1];
  report.c = reg->first;
  report.d = reg->second;
  report.n = H.n;
  report.q = H.q;
  report.kappa_used = kappa(H.q);
  report.kappa_generic_value = kappa_generic(H.q);
  report.lambda1_cd_gap =
      std::abs(report.lambda1 - static_cast<double>(report.c) * report.d);
  if (report.lambda1_cd_gap > 1e-6) {
    std::ostringstream msg;
    msg << "lambda1 = " << report.lambda1 << " deviates from c*d = "
        << report.c * report.d << " beyond 1e-6";
    throw HypothesesUnmetError(msg.str());
  }
  const double gap = report.lambda1 - report.lambda2;
  if (!(gap > 0.0)) {
    throw HypothesesUnmetError("lambda1 must strictly exceed lambda2");
  }
  const double numer = 2.0 * report.c - report.lambda2;
  if (numer <= 0.0) {
    report.vacuous = true;
    report.bound = 0.0;
  } else {
    report.bound = report.kappa_used * report.n * numer / gap;
  }
  return report;
}

}  // namespace pcw
