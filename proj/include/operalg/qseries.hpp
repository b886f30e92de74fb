#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operalg/rational.hpp"

namespace operalg {

/// Truncated power series in q with exact integer coefficients, tracked for
/// exponents 0 <= n < order. Coefficients grow far beyond 64 bits at the
/// truncation orders used here, hence the big-integer backing.
class QSeries {
 public:
  explicit QSeries(int order);
  static QSeries one(int order);

  int order() const { return order_; }
  const Int& operator[](int n) const;
  Int& operator[](int n);
  const std::vector<Int>& coeffs() const { return c_; }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  bool operator==(const QSeries& o) const;
  bool operator!=(const QSeries& o) const { return !(*this == o); }

  /// Multiply by (1 - q^k), k >= 1. A no-op when k >= order.
  QSeries times_one_minus_qk(int k) const;

  /// Multiply by (1 - q^k)^{-1} = 1 + q^k + q^{2k} + ..., k >= 1.
  QSeries times_inv_one_minus_qk(int k) const;

  /// Exact series division; the divisor's constant term must divide every
  /// step exactly (it is +-1 in every use here).
  QSeries div_exact(const QSeries& b) const;

  /// Smallest exponent where the two series differ, if any.
  std::optional<int> first_diff(const QSeries& o) const;

  Int sum_of_coeffs() const;
  std::string str(int max_terms = 12) const;

 private:
  void check_compatible(const QSeries& o) const;
  int order_;
  std::vector<Int> c_;
};

}  // namespace operalg
