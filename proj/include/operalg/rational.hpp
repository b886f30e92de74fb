#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace operalg {

/// Exact arbitrary-precision rational (GMP-backed). All coefficient arithmetic
/// in the library is exact; there is no floating point anywhere.
using Rat = mpq_class;

/// Exact arbitrary-precision integer, used for q-series coefficients.
using Int = mpz_class;

/// An operation would need coefficients beyond the tracked precision of its
/// operands. Deciding code treats this as "cannot decide", never as "zero".
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input: unknown labels, mismatched
/// root systems, bad JSON payloads, out-of-domain arguments.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse "p" or "p/q" (q > 0 after canonicalization). Throws InputError.
Rat parse_rational(const std::string& s);

/// Canonical "p" or "p/q" rendering.
std::string format_rational(const Rat& r);

/// r^n for integer n (n < 0 requires r != 0).
Rat rat_pow(const Rat& r, long n);

}  // namespace operalg
