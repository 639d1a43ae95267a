#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pcw/ring.hpp"
#include "pcw/tanner.hpp"

namespace pcw {

/// An M-cover of a Tanner graph, given by one permutation of {0..M-1} per
/// base edge: check copy j* of v_j connects to variable copy sigma[e][j*]
/// of u_i along edge e = (u_i, v_j).
struct CoverAssignment {
  int M = 1;
  std::vector<std::pair<int, int>> edges;  // (var, check), variable-major
  std::vector<std::vector<int>> sigma;     // per edge, a permutation of 0..M-1
};

/// Uniform random M-cover: every edge permutation is drawn independently by
/// a Fisher-Yates shuffle from a generator seeded with `seed`. Identical
/// (G, M, seed) yields an identical assignment.
CoverAssignment random_cover(const TannerGraph& G, int M, std::uint64_t seed);

/// The Mm x Mn parity-check matrix of the cover code: block (j, i) holds
/// H_{j,i} at positions (j*, sigma_e(j*)). Columns are variable-major, so
/// column (i-1)M + i* corresponds to p_{i,i*}. Throws InputError if the
/// cover was not built for the Tanner graph of H.
ParityCheckMatrix lift_matrix(const ParityCheckMatrix& H,
                              const CoverAssignment& cov);

/// A codeword of the cover code, in variable-major layout
/// (p_{1,1}, ..., p_{1,M}, p_{2,1}, ...).
struct Pseudocodeword {
  int M = 1;
  int n = 0;
  std::uint32_t q = 2;
  std::vector<Symbol> values;  // size n*M
};

std::vector<Pseudocodeword> enumerate_pseudocodewords(
    const ParityCheckMatrix& H, const CoverAssignment& cov,
    double limit = kDefaultEnumerationLimit);

/// n x q matrix of symbol counts: entry (i, k) is the number of copies of
/// variable i carrying symbol k. Rows sum to M.
struct CountMatrix {
  int n = 0;
  std::uint32_t q = 2;
  int M = 1;
  std::vector<std::int64_t> counts;  // row-major n*q

  std::int64_t at(int i, Symbol k) const {
    return counts[static_cast<std::size_t>(i) * q + k];
  }
  std::int64_t& at(int i, Symbol k) {
    return counts[static_cast<std::size_t>(i) * q + k];
  }
};

CountMatrix pcw_matrix(const Pseudocodeword& p);

/// n x q matrix of symbol fractions f_i(k) = count/M; rows sum to 1.
struct FractionMatrix {
  int n = 0;
  std::uint32_t q = 2;
  std::vector<double> f;  // row-major n*q

  double at(int i, Symbol k) const {
    return f[static_cast<std::size_t>(i) * q + k];
  }
  double& at(int i, Symbol k) {
    return f[static_cast<std::size_t>(i) * q + k];
  }
};

FractionMatrix normalize(const CountMatrix& P);

/// Exact integer check of the per-check count inequalities: for every row j
/// and every l in its support, the nonzero-symbol counts of the other
/// support positions must total at least the nonzero-symbol count at l.
/// A violation on a genuine pseudocodeword indicates a bug.
struct CountInequalityReport {
  std::vector<std::pair<int, int>> violations;  // (j, l), 0-based
  std::int64_t evaluated = 0;

  bool ok() const { return violations.empty(); }
};

CountInequalityReport check_count_inequalities(const CountMatrix& P,
                                               const ParityCheckMatrix& H);

/// Text form: first line M, then one line `i j : s_1 ... s_M` per edge
/// (1-based indices and copy numbers), edges in variable-major order.
std::string serialize_cover(const CoverAssignment& cov);
CoverAssignment parse_cover(std::istream& in);

/// Throws InputError unless cov's edge list matches G's exactly.
void require_cover_matches(const TannerGraph& G, const CoverAssignment& cov);

}  // namespace pcw
