#pragma once

#include <optional>

#include "operalg/qseries.hpp"
#include "operalg/rootdata.hpp"

namespace operalg {

/// Character of the function algebra of the monodromy-free stratum labeled
/// by the dominant weight lambda:
///   prod_{n>=1} (1-q^n)^{-rank} * prod_{pos coroots a} (1 - q^{<a,lambda+rho>}).
QSeries char_z_reg(const RootSystem& rs, const Weight& lambda, int order);

/// Character of the ambient operator space:
///   prod_{n>=1} (1-q^n)^{-rank}
///   * prod_{pos coroots a} prod_{n>=1} (1 - q^{n + <a,lambda+rho>})^{-1}.
QSeries char_operator_space(const RootSystem& rs, const Weight& lambda,
                            int order);

/// Character of the twisted unipotent factor:
///   prod_{pos coroots a} prod_{n>=0} (1 - q^{n + <a,lambda+rho>})^{-1}.
QSeries char_twisted_unipotent(const RootSystem& rs, const Weight& lambda,
                               int order);

/// char_operator_space / char_twisted_unipotent by exact division; equals
/// char_z_reg identically.
QSeries char_z_reg_via_quotient(const RootSystem& rs, const Weight& lambda,
                                int order);

/// Principally graded dimension of the irreducible highest-weight module:
///   prod_a (1 - q^{<a,lambda+rho>}) / prod_a (1 - q^{<a,rho>}),
/// an exact integer polynomial (palindromic; coefficients sum to the Weyl
/// dimension). Returned truncated to the requested order.
QSeries q_dim(const RootSystem& rs, const Weight& lambda, int order);

/// The same polynomial in full, lowest degree first.
std::vector<Int> q_dim_polynomial(const RootSystem& rs, const Weight& lambda);

/// prod_i prod_{m > exponent_i} (1 - q^m)^{-1}: the character of the free
/// graded space with generators in degrees exponent_i + 1, exponent_i + 2, ...
QSeries char_va_minus(const RootSystem& rs, int order);

/// Product identity between the coroot-height product and the exponent
/// product:  prod_a (1 - q^{<a,rho>}) == prod_i prod_{m=1}^{exponent_i} (1 - q^m),
/// compared as exact polynomials.
bool exponent_identity_check(const RootSystem& rs);

/// Main identity at the given truncation:
///   q_dim * char_va_minus == char_z_reg.
bool character_identity_check(const RootSystem& rs, const Weight& lambda,
                              int order);
/// First q-power where the two sides diverge, if any.
std::optional<int> character_identity_first_diff(const RootSystem& rs,
                                                 const Weight& lambda,
                                                 int order);

bool quotient_identity_check(const RootSystem& rs, const Weight& lambda,
                             int order);
std::optional<int> quotient_identity_first_diff(const RootSystem& rs,
                                                const Weight& lambda,
                                                int order);

}  // namespace operalg
