#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operalg/rational.hpp"

namespace operalg {

/// Truncated formal Laurent series over the exact rationals.
///
/// A value represents  sum_{n >= valuation} c_n t^n  known exactly for all
/// n < precision and unknown beyond. Every operation propagates the tightest
/// honest precision:
///   add/sub : min of the two precisions
///   mul     : min(prec_a + val_b, prec_b + val_a)
///   d/dt    : precision drops by one
///   inverse : valuation -v, precision p - 2v for input window [v, p)
///
/// Exact data (structure constants, polynomial gauge parameters, monomials)
/// is carried in a distinguished "unbounded" regime: precision() reports the
/// sentinel `unbounded` and the series behaves as an exact Laurent polynomial,
/// so mixing exact scalars into finite-precision data never shrinks windows.
///
/// Invariants (finite regime): precision > valuation; the stored window is
/// exactly [valuation, precision); the leading stored coefficient is nonzero
/// unless the whole window is zero, in which case the window has length one.
class LaurentSeries {
 public:
  /// Sentinel precision for exact Laurent polynomials. Any precision at or
  /// above `exact_threshold` is normalized to this value.
  static constexpr int unbounded = 1 << 28;
  static constexpr int exact_threshold = 1 << 27;

  /// Exact zero.
  LaurentSeries();

  static LaurentSeries zero(int precision = unbounded);
  static LaurentSeries constant(const Rat& c, int precision = unbounded);
  static LaurentSeries monomial(const Rat& c, int power,
                                int precision = unbounded);
  /// Finite window [valuation, precision), coeffs.size() == precision - valuation.
  static LaurentSeries from_window(int valuation, int precision,
                                   std::vector<Rat> coeffs);
  /// Exact Laurent polynomial  sum_k coeffs[k] t^{valuation + k}.
  static LaurentSeries polynomial(int valuation, std::vector<Rat> coeffs);

  int valuation() const { return val_; }
  int precision() const { return prec_; }
  bool exact() const { return prec_ >= unbounded; }

  /// True when every tracked coefficient is zero. (For finite precision this
  /// is "zero as far as anyone can see", not a claim about the full series.)
  bool is_zero() const;

  /// Order of the first tracked nonzero coefficient, if any.
  std::optional<int> first_nonzero() const;

  /// One past the last stored coefficient: the precision bound for finite
  /// windows, the end of the exact support otherwise (valuation() for an
  /// exact zero).
  int support_end() const;

  /// Coefficient of t^n. Zero below the window or (exact regime) above the
  /// stored support; PrecisionError at or beyond a finite precision bound.
  Rat coeff(int n) const;

  /// Coefficient of t^{-1} (the residue). PrecisionError if untracked.
  Rat residue() const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Rat& c, const LaurentSeries& a);

  /// Multiply by t^k.
  LaurentSeries shifted(int k) const;

  /// Weaken to the given precision. Requesting more precision than is
  /// tracked throws PrecisionError.
  LaurentSeries truncated(int precision) const;

  LaurentSeries derivative() const;

  /// Multiplicative inverse. Requires a nonzero leading coefficient
  /// (InputError otherwise). Exact inputs must be monomials; for general
  /// exact polynomials use inverse_to.
  LaurentSeries inverse() const;

  /// Inverse computed out to the requested precision (exact inputs only need
  /// this entry point; finite inputs may not request more than inverse()
  /// would honestly know).
  LaurentSeries inverse_to(int precision) const;

  /// t -> a t substitution: coefficient of t^n picks up a^n. Requires a != 0.
  LaurentSeries dilated(const Rat& a) const;

  /// Same window and identical coefficients (used for byte-level determinism
  /// checks; exact and finite values never compare identical).
  bool identical(const LaurentSeries& o) const;

  /// Agreement of all coefficients on the common tracked window.
  friend bool agrees(const LaurentSeries& a, const LaurentSeries& b);

  std::string str() const;

 private:
  LaurentSeries(int val, int prec, std::vector<Rat> coeffs);
  void normalize();
  // Coefficient with no precision check (0 outside the stored range).
  const Rat& stored(int n) const;

  int val_;
  int prec_;
  std::vector<Rat> coeffs_;
};

bool agrees(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace operalg
