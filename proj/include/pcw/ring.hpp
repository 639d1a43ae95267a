#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcw/errors.hpp"

namespace pcw {

/// A symbol of Z_q, stored reduced to [0, q). The modulus travels with the
/// containing matrix/vector context rather than with each symbol.
using Symbol = std::uint32_t;

Symbol add_mod(Symbol a, Symbol b, std::uint32_t q);
Symbol sub_mod(Symbol a, Symbol b, std::uint32_t q);
Symbol mul_mod(Symbol a, Symbol b, std::uint32_t q);
Symbol neg_mod(Symbol a, std::uint32_t q);

enum class ElementClass { Zero, Unit, ZeroDivisor };

/// Three-way classification of a in Z_q. In Z_q every nonzero element is
/// either a unit or a zero divisor; zero is reported separately so callers
/// cannot conflate it with a zero divisor.
ElementClass classify_element(Symbol a, std::uint32_t q);

bool is_unit(Symbol a, std::uint32_t q);

/// True iff a != 0 and gcd(a, q) > 1. Zero classifies as ElementClass::Zero,
/// never as a zero divisor.
bool is_zero_divisor(Symbol a, std::uint32_t q);

/// Multiplicative inverse; a must be a unit mod q.
Symbol inverse_mod(Symbol a, std::uint32_t q);

struct ParityCheckMatrix {
  int m = 0;  // rows (checks)
  int n = 0;  // columns (variables)
  std::uint32_t q = 2;
  std::vector<Symbol> entries;  // row-major, size m*n

  Symbol at(int j, int i) const {
    return entries[static_cast<std::size_t>(j) * n + i];
  }
  Symbol& at(int j, int i) {
    return entries[static_cast<std::size_t>(j) * n + i];
  }

  /// Column indices of the nonzero entries of row j, ascending.
  std::vector<int> row_support(int j) const;

  /// Validating constructor: m,n >= 1, q >= 2, entries reduced, no empty
  /// row supports. Throws InputError.
  static ParityCheckMatrix make(int m, int n, std::uint32_t q,
                                std::vector<Symbol> entries);
};

/// Is parity check j (0-based) satisfied by c, i.e. sum_i c_i * H_{j,i} = 0
/// in Z_q? Throws InputError on dimension mismatch or out-of-range symbols.
bool check_satisfied(const ParityCheckMatrix& H, const std::vector<Symbol>& c,
                     int j);

/// Every parity check satisfied.
bool is_codeword(const ParityCheckMatrix& H, const std::vector<Symbol>& c);

struct MatrixValidation {
  // Positions (j, i), 0-based, of nonzero entries that are not units mod q.
  std::vector<std::pair<int, int>> zero_divisor_positions;

  bool ok() const { return zero_divisor_positions.empty(); }
};

/// Accepts iff every nonzero entry of H is a unit mod q.
MatrixValidation validate_matrix(const ParityCheckMatrix& H);

inline constexpr double kDefaultEnumerationLimit = 1e7;

/// The exact solution set of A x^T = 0 over Z_q, each solution once, in
/// lexicographic order. Unit-pivot Gaussian elimination fixes the pivot
/// variables; assignments to the remaining columns are exhausted and checked
/// against any residual (non-unit) rows. Throws InstanceTooLargeError when
/// the number of candidate assignments q^(#free columns) exceeds `limit`.
std::vector<std::vector<Symbol>> enumerate_solutions(
    const ParityCheckMatrix& A, double limit = kDefaultEnumerationLimit);

}  // namespace pcw
