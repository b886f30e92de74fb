#include "operalg/qchar.hpp"

#include <algorithm>

namespace operalg {

namespace {

void require_dominant(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank)
    throw InputError("weight rank mismatch");
  if (!is_dominant(lambda)) throw InputError("weight must be dominant");
}

// <coroot, lambda + rho> for the k-th positive coroot.
long shifted_pairing(const RootSystem& rs, const Weight& lambda, int k) {
  Weight shifted;
  for (int c : lambda.coords) shifted.coords.push_back(c + 1);
  return pair_weight_coroot(shifted, rs.pos_coroots[static_cast<std::size_t>(k)]);
}

// Exact integer polynomials, lowest degree first.
using IntPoly = std::vector<Int>;

IntPoly poly_one() { return {Int(1)}; }

// Multiply by (1 - q^k).
IntPoly poly_times_one_minus(const IntPoly& p, long k) {
  IntPoly out(p.size() + static_cast<std::size_t>(k), Int(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + static_cast<std::size_t>(k)] -= p[i];
  }
  return out;
}

// Exact ascending-power division; throws if not exact.
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den) {
  if (den.empty() || den[0] == 0)
    throw InputError("polynomial division needs a unit constant term");
  if (num.size() < den.size())
    throw InputError("polynomial division is not exact");
  IntPoly out(num.size() - den.size() + 1, Int(0));
  IntPoly rem = num;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(),
                den[0].get_mpz_t());
    if (r != 0) throw InputError("polynomial division is not exact");
    out[i] = q;
    for (std::size_t j = 0; j < den.size(); ++j)
      rem[i + j] -= q * den[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw InputError("polynomial division is not exact");
  return out;
}

}  // namespace

QSeries char_z_reg(const RootSystem& rs, const Weight& lambda, int order) {
  require_dominant(rs, lambda);
  QSeries s = QSeries::one(order);
  for (int n = 1; n < order; ++n)
    for (int i = 0; i < rs.rank; ++i) s = s.times_inv_one_minus_qk(n);
  for (int k = 0; k < rs.num_pos_roots(); ++k) {
    long p = shifted_pairing(rs, lambda, k);
    if (p < order) s = s.times_one_minus_qk(static_cast<int>(p));
  }
  return s;
}

QSeries char_operator_space(const RootSystem& rs, const Weight& lambda,
                            int order) {
  require_dominant(rs, lambda);
  QSeries s = QSeries::one(order);
  for (int n = 1; n < order; ++n)
    for (int i = 0; i < rs.rank; ++i) s = s.times_inv_one_minus_qk(n);
  for (int k = 0; k < rs.num_pos_roots(); ++k) {
    long p = shifted_pairing(rs, lambda, k);
    for (long n = 1; n + p < order; ++n)
      s = s.times_inv_one_minus_qk(static_cast<int>(n + p));
  }
  return s;
}

QSeries char_twisted_unipotent(const RootSystem& rs, const Weight& lambda,
                               int order) {
  require_dominant(rs, lambda);
  QSeries s = QSeries::one(order);
  for (int k = 0; k < rs.num_pos_roots(); ++k) {
    long p = shifted_pairing(rs, lambda, k);
    for (long n = 0; n + p < order; ++n)
      s = s.times_inv_one_minus_qk(static_cast<int>(n + p));
  }
  return s;
}

QSeries char_z_reg_via_quotient(const RootSystem& rs, const Weight& lambda,
                                int order) {
  return char_operator_space(rs, lambda, order)
      .div_exact(char_twisted_unipotent(rs, lambda, order));
}

std::vector<Int> q_dim_polynomial(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  IntPoly num = poly_one(), den = poly_one();
  for (int k = 0; k < rs.num_pos_roots(); ++k) {
    num = poly_times_one_minus(num, shifted_pairing(rs, lambda, k));
    long h = 0;
    for (int b : rs.pos_coroots[static_cast<std::size_t>(k)]) h += b;
    den = poly_times_one_minus(den, h);
  }
  IntPoly out = poly_div_exact(num, den);
  while (!out.empty() && out.back() == 0) out.pop_back();
  // Sanity: palindromic with nonnegative coefficients.
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0)
      throw InputError("graded dimension has a negative coefficient");
    if (out[i] != out[out.size() - 1 - i])
      throw InputError("graded dimension is not palindromic");
  }
  return out;
}

QSeries q_dim(const RootSystem& rs, const Weight& lambda, int order) {
  std::vector<Int> poly = q_dim_polynomial(rs, lambda);
  QSeries s(order);
  for (std::size_t i = 0; i < poly.size() && i < static_cast<std::size_t>(order);
       ++i)
    s[static_cast<int>(i)] = poly[i];
  return s;
}

QSeries char_va_minus(const RootSystem& rs, int order) {
  QSeries s = QSeries::one(order);
  for (int d : rs.exponents)
    for (int m = d + 1; m < order; ++m) s = s.times_inv_one_minus_qk(m);
  return s;
}

bool exponent_identity_check(const RootSystem& rs) {
  IntPoly lhs = poly_one(), rhs = poly_one();
  for (int k = 0; k < rs.num_pos_roots(); ++k) {
    long h = 0;
    for (int b : rs.pos_coroots[static_cast<std::size_t>(k)]) h += b;
    lhs = poly_times_one_minus(lhs, h);
  }
  for (int d : rs.exponents)
    for (int m = 1; m <= d; ++m) rhs = poly_times_one_minus(rhs, m);
  while (!lhs.empty() && lhs.back() == 0) lhs.pop_back();
  while (!rhs.empty() && rhs.back() == 0) rhs.pop_back();
  return lhs == rhs;
}

std::optional<int> character_identity_first_diff(const RootSystem& rs,
                                                 const Weight& lambda,
                                                 int order) {
  QSeries lhs = q_dim(rs, lambda, order) * char_va_minus(rs, order);
  QSeries rhs = char_z_reg(rs, lambda, order);
  return lhs.first_diff(rhs);
}

bool character_identity_check(const RootSystem& rs, const Weight& lambda,
                              int order) {
  return !character_identity_first_diff(rs, lambda, order).has_value();
}

std::optional<int> quotient_identity_first_diff(const RootSystem& rs,
                                                const Weight& lambda,
                                                int order) {
  QSeries lhs = char_z_reg_via_quotient(rs, lambda, order);
  QSeries rhs = char_z_reg(rs, lambda, order);
  return lhs.first_diff(rhs);
}

bool quotient_identity_check(const RootSystem& rs, const Weight& lambda,
                             int order) {
  return !quotient_identity_first_diff(rs, lambda, order).has_value();
}

}  // namespace operalg
