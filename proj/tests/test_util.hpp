#pragma once

// Shared helpers for the test suites: brute-force oracles independent of the
// library's computation paths, and random instance generators.

#include <cmath>
#include <numbers>
#include <vector>

#include "pcw/cover.hpp"
#include "pcw/ring.hpp"
#include "pcw/rng.hpp"
#include "pcw/tanner.hpp"

namespace testutil {

// All vectors x in Z_q^n with A x^T = 0, by checking every candidate.
inline std::vector<std::vector<pcw::Symbol>> brute_force_solutions(
    const pcw::ParityCheckMatrix& A) {
  std::vector<std::vector<pcw::Symbol>> out;
  std::vector<pcw::Symbol> x(A.n, 0);
  for (;;) {
    if (pcw::is_codeword(A, x)) out.push_back(x);
    int t = A.n - 1;
    while (t >= 0 && ++x[t] == A.q) {
      x[t] = 0;
      --t;
    }
    if (t < 0) break;
  }
  return out;
}

inline pcw::ParityCheckMatrix single_check(std::uint32_t q) {
  return pcw::ParityCheckMatrix::make(1, 3, q, {1, 1, 1});
}

// Literal term-by-term evaluation of the quadratic variance expression;
// independent of the centroid form used by the library.
inline double v_literal(const pcw::FractionMatrix& F) {
  const std::uint32_t q = F.q;
  double V = 0.0;
  for (int i = 0; i < F.n; ++i) {
    double term = 1.0;
    for (std::uint32_t k = 0; k < q; ++k) {
      term += F.at(i, k) * F.at(i, k);
      term -= 2.0 * F.at(i, k) * std::cos(2.0 * std::numbers::pi * k / q);
    }
    for (std::uint32_t k = 0; k < q; ++k) {
      for (std::uint32_t l = k + 1; l < q; ++l) {
        term += 2.0 * F.at(i, k) * F.at(i, l) *
                std::cos(2.0 * std::numbers::pi *
                         (static_cast<double>(k) - static_cast<double>(l)) / q);
      }
    }
    V += term;
  }
  return V;
}

// Adaptive Simpson quadrature of the standard normal density over [a, b].
inline double simpson_gauss(double a, double b, int depth, double fa,
                            double fm, double fb, double whole) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const auto phi = [](double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
  };
  const double flm = phi(lm), frm = phi(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 1e-15) {
    return left + right;
  }
  return simpson_gauss(a, m, depth - 1, fa, flm, fm, left) +
         simpson_gauss(m, b, depth - 1, fm, frm, fb, right);
}

// Gaussian tail by quadrature (truncated far past any mass we test).
inline double q_by_quadrature(double x) {
  const auto phi = [](double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
  };
  const double b = x + 42.0;
  const double m = 0.5 * (x + b);
  const double whole =
      (b - x) / 6.0 * (phi(x) + 4.0 * phi(m) + phi(b));
  return simpson_gauss(x, b, 48, phi(x), phi(m), phi(b), whole);
}

// Uniformly random unit of Z_q.
inline pcw::Symbol random_unit(pcw::Rng& rng, std::uint32_t q) {
  for (;;) {
    const auto a = static_cast<pcw::Symbol>(1 + rng.below(q - 1));
    if (pcw::is_unit(a, q)) return a;
  }
}

// Random m x n matrix over Z_q with unit entries, every row weight >= 2 and
// every column weight >= 1. Retries until the shape constraints hold.
inline pcw::ParityCheckMatrix random_code_matrix(int n, int m,
                                                 std::uint32_t q,
                                                 pcw::Rng& rng) {
  for (;;) {
    std::vector<pcw::Symbol> entries(static_cast<std::size_t>(m) * n, 0);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) {
        if (rng.below(2) == 0) {
          entries[static_cast<std::size_t>(j) * n + i] = random_unit(rng, q);
        }
      }
    }
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      int w = 0;
      for (int i = 0; i < n; ++i) {
        w += entries[static_cast<std::size_t>(j) * n + i] != 0;
      }
      ok = w >= 2;
    }
    for (int i = 0; i < n && ok; ++i) {
      int w = 0;
      for (int j = 0; j < m; ++j) {
        w += entries[static_cast<std::size_t>(j) * n + i] != 0;
      }
      ok = w >= 1;
    }
    if (ok) return pcw::ParityCheckMatrix::make(m, n, q, std::move(entries));
  }
}

// Random connected (c, d)-regular matrix with unit entries via the pairing
// model: match variable stubs to check stubs, reject multi-edges and
// disconnected outcomes.
inline pcw::ParityCheckMatrix random_regular_matrix(int n, int c, int d,
                                                    std::uint32_t q,
                                                    pcw::Rng& rng) {
  if ((n * c) % d != 0) throw std::logic_error("n*c must be divisible by d");
  const int m = n * c / d;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs(static_cast<std::size_t>(n) * c);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < c; ++k) stubs[static_cast<std::size_t>(i) * c + k] = i;
    }
    rng.shuffle(stubs);
    std::vector<pcw::Symbol> entries(static_cast<std::size_t>(m) * n, 0);
    bool simple = true;
    for (std::size_t s = 0; s < stubs.size() && simple; ++s) {
      const int i = stubs[s];
      const int j = static_cast<int>(s) / d;
      auto& cell = entries[static_cast<std::size_t>(j) * n + i];
      if (cell != 0) {
        simple = false;
      } else {
        cell = random_unit(rng, q);
      }
    }
    if (!simple) continue;
    auto H = pcw::ParityCheckMatrix::make(m, n, q, std::move(entries));
    if (pcw::is_connected(pcw::tanner_from_matrix(H))) return H;
  }
  throw std::logic_error("failed to sample a connected regular matrix");
}

// Incidence matrix of the circular ladder graph CL_k as a parity-check
// matrix: variables are the 3k edges, checks the 2k vertices; (2,3)-regular
// and connected. Its gram spectrum has lambda2 = 4 + 2cos(2*pi/k) > 4.
inline pcw::ParityCheckMatrix circular_ladder_incidence(int k,
                                                        std::uint32_t q) {
  const int m = 2 * k;      // vertices: outer 0..k-1, inner k..2k-1
  const int n = 3 * k;      // edges: outer ring, inner ring, spokes
  std::vector<pcw::Symbol> entries(static_cast<std::size_t>(m) * n, 0);
  const auto set = [&](int v, int e) {
    entries[static_cast<std::size_t>(v) * n + e] = 1;
  };
  for (int t = 0; t < k; ++t) {
    set(t, t);                      // outer edge t: (o_t, o_{t+1})
    set((t + 1) % k, t);
    set(k + t, k + t);              // inner edge
    set(k + (t + 1) % k, k + t);
    set(t, 2 * k + t);              // spoke
    set(k + t, 2 * k + t);
  }
  return pcw::ParityCheckMatrix::make(m, n, q, std::move(entries));
}

// Cycle code of K4: variables are the 6 edges, checks the 4 vertices;
// (2,3)-regular, connected, gram spectrum (6, 2, 2, 2, 0, 0).
inline pcw::ParityCheckMatrix k4_cycle_code(std::uint32_t q) {
  return pcw::ParityCheckMatrix::make(4, 6, q,
                                      {1, 1, 1, 0, 0, 0,
                                       1, 0, 0, 1, 1, 0,
                                       0, 1, 0, 1, 0, 1,
                                       0, 0, 1, 0, 1, 1});
}

}  // namespace testutil
