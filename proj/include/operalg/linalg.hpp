#pragma once

#include <optional>
#include <vector>

#include "operalg/rational.hpp"

namespace operalg {

/// Dense exact-rational matrix helpers. Everything here is small (Lie-algebra
/// dimension at most 28, per-stage systems a few dozen rows), so plain
/// Gaussian elimination is the right tool.
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

RatMat identity_matrix(std::size_t n);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_apply(const RatMat& a, const RatVec& x);

/// Inverse of a square matrix; throws InputError when singular.
RatMat mat_inverse(const RatMat& a);

/// Reduced row echelon form in place; returns pivot column per row used.
std::vector<int> rref_in_place(RatMat& m);

/// Solve a x = b exactly. Returns std::nullopt when inconsistent; free
/// variables are set to zero, so the result is the canonical minimal-support
/// solution of the RREF.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

}  // namespace operalg
