#include "pcw/ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pcw {

Symbol add_mod(Symbol a, Symbol b, std::uint32_t q) {
  return static_cast<Symbol>((static_cast<std::uint64_t>(a) + b) % q);
}

Symbol sub_mod(Symbol a, Symbol b, std::uint32_t q) {
  return static_cast<Symbol>(
      (static_cast<std::uint64_t>(a) + q - (b % q)) % q);
}

Symbol mul_mod(Symbol a, Symbol b, std::uint32_t q) {
  return static_cast<Symbol>((static_cast<std::uint64_t>(a) * b) % q);
}

Symbol neg_mod(Symbol a, std::uint32_t q) {
  return a == 0 ? 0 : static_cast<Symbol>(q - a % q);
}

ElementClass classify_element(Symbol a, std::uint32_t q) {
  a %= q;
  if (a == 0) return ElementClass::Zero;
  return std::gcd<std::uint64_t>(a, q) == 1 ? ElementClass::Unit
                                            : ElementClass::ZeroDivisor;
}

bool is_unit(Symbol a, std::uint32_t q) {
  return classify_element(a, q) == ElementClass::Unit;
}

bool is_zero_divisor(Symbol a, std::uint32_t q) {
  return classify_element(a, q) == ElementClass::ZeroDivisor;
}

Symbol inverse_mod(Symbol a, std::uint32_t q) {
  // Extended Euclid on (a, q); a must be a unit.
  std::int64_t r0 = static_cast<std::int64_t>(a % q), r1 = q;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    r0 -= k * r1;
    std::swap(r0, r1);
    s0 -= k * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw InputError("inverse_mod: element is not a unit");
  s0 %= static_cast<std::int64_t>(q);
  if (s0 < 0) s0 += q;
  return static_cast<Symbol>(s0);
}

std::vector<int> ParityCheckMatrix::row_support(int j) const {
  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    if (at(j, i) != 0) support.push_back(i);
  }
  return support;
}

ParityCheckMatrix ParityCheckMatrix::make(int m, int n, std::uint32_t q,
                                          std::vector<Symbol> entries) {
  if (m < 1 || n < 1) throw InputError("matrix dimensions must be >= 1");
  if (q < 2) throw InputError("modulus q must be >= 2");
  if (q > (1u << 20)) throw InputError("modulus q is unreasonably large");
  if (entries.size() != static_cast<std::size_t>(m) * n) {
    throw InputError("entry count does not match dimensions");
  }
  for (const Symbol e : entries) {
    if (e >= q) throw InputError("matrix entry out of range [0, q)");
  }
  ParityCheckMatrix H{m, n, q, std::move(entries)};
  for (int j = 0; j < m; ++j) {
    bool nonzero = false;
    for (int i = 0; i < n && !nonzero; ++i) nonzero = H.at(j, i) != 0;
    if (!nonzero) {
      throw InputError("row " + std::to_string(j + 1) + " has empty support");
    }
  }
  return H;
}

namespace {

void require_vector(const ParityCheckMatrix& H, const std::vector<Symbol>& c) {
  if (c.size() != static_cast<std::size_t>(H.n)) {
    throw InputError("vector length " + std::to_string(c.size()) +
                     " does not match n = " + std::to_string(H.n));
  }
  for (const Symbol v : c) {
    if (v >= H.q) throw InputError("vector symbol out of range [0, q)");
  }
}

}  // namespace

bool check_satisfied(const ParityCheckMatrix& H, const std::vector<Symbol>& c,
                     int j) {
  require_vector(H, c);
  if (j < 0 || j >= H.m) throw InputError("row index out of range");
  std::uint64_t acc = 0;
  for (int i = 0; i < H.n; ++i) {
    acc += static_cast<std::uint64_t>(c[i]) * H.at(j, i);
  }
  return acc % H.q == 0;
}

bool is_codeword(const ParityCheckMatrix& H, const std::vector<Symbol>& c) {
  require_vector(H, c);
  for (int j = 0; j < H.m; ++j) {
    if (!check_satisfied(H, c, j)) return false;
  }
  return true;
}

MatrixValidation validate_matrix(const ParityCheckMatrix& H) {
  MatrixValidation result;
  for (int j = 0; j < H.m; ++j) {
    for (int i = 0; i < H.n; ++i) {
      if (is_zero_divisor(H.at(j, i), H.q)) {
        result.zero_divisor_positions.emplace_back(j, i);
      }
    }
  }
  return result;
}

std::vector<std::vector<Symbol>> enumerate_solutions(
    const ParityCheckMatrix& A, double limit) {
  const int m = A.m, n = A.n;
  const std::uint32_t q = A.q;

  std::vector<std::vector<Symbol>> rows(m, std::vector<Symbol>(n));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) rows[j][i] = A.at(j, i);
  }

  // Row-reduce with unit pivots only. Over composite q some rows may never
  // yield a unit pivot; they stay behind as residual constraints over the
  // non-pivot columns and are enforced during the exhaustion below.
  std::vector<int> pivot_cols;
  std::vector<char> is_pivot_col(n, 0);
  int rank = 0;
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int r = rank; r < m; ++r) {
      if (is_unit(rows[r][c], q)) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(rows[pr], rows[rank]);
    const Symbol inv = inverse_mod(rows[rank][c], q);
    for (int k = 0; k < n; ++k) rows[rank][k] = mul_mod(rows[rank][k], inv, q);
    for (int r = 0; r < m; ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Symbol f = rows[r][c];
      for (int k = 0; k < n; ++k) {
        rows[r][k] = sub_mod(rows[r][k], mul_mod(f, rows[rank][k], q), q);
      }
    }
    pivot_cols.push_back(c);
    is_pivot_col[c] = 1;
    ++rank;
  }

  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c) {
    if (!is_pivot_col[c]) free_cols.push_back(c);
  }
  std::vector<std::vector<Symbol>> residual;
  for (int r = rank; r < m; ++r) {
    if (std::any_of(rows[r].begin(), rows[r].end(),
                    [](Symbol s) { return s != 0; })) {
      residual.push_back(rows[r]);
    }
  }

  const double predicted =
      std::pow(static_cast<double>(q), static_cast<double>(free_cols.size()));
  if (predicted > limit) {
    std::ostringstream msg;
    msg << "instance too large: " << predicted
        << " candidate assignments exceed limit " << limit;
    throw InstanceTooLargeError(msg.str(), predicted);
  }

  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> assign(free_cols.size(), 0);
  for (;;) {
    bool ok = true;
    for (const auto& rr : residual) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < free_cols.size(); ++t) {
        acc += static_cast<std::uint64_t>(rr[free_cols[t]]) * assign[t];
      }
      if (acc % q != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<Symbol> x(n, 0);
      for (std::size_t t = 0; t < free_cols.size(); ++t) {
        x[free_cols[t]] = assign[t];
      }
      for (int p = 0; p < rank; ++p) {
        std::uint64_t acc = 0;
        for (const int c : free_cols) {
          acc += static_cast<std::uint64_t>(rows[p][c]) * x[c];
        }
        x[pivot_cols[p]] = neg_mod(static_cast<Symbol>(acc % q), q);
      }
      out.push_back(std::move(x));
    }
    int t = static_cast<int>(free_cols.size()) - 1;
    while (t >= 0 && ++assign[t] == q) {
      assign[t] = 0;
      --t;
    }
    if (t < 0) break;
  }

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pcw
