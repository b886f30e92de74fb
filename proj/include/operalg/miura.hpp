#pragma once

#include "operalg/oper.hpp"

namespace operalg {

/// Cartan-valued connection  d/dt + u(t)  with u = sum_i u[i] h_i over the
/// coroot generators.
struct CartanConnection {
  std::string type;
  std::vector<LaurentSeries> u;  // one series per simple coroot
};

CartanConnection make_cartan_connection(const std::string& type,
                                        std::vector<LaurentSeries> u);

/// The oper associated to the connection: canonical form of
/// d/dt + p- + u(t).
CanonicalOper miura_transform(const CartanConnection& conn);

/// Residue vector of u over the coroot generators. InputError if a
/// component has a visible pole of order greater than one.
RatVec connection_residue(const CartanConnection& conn);

/// For a connection whose residue equals -lambda (in coroot coordinates;
/// checked, InputError on mismatch), decide whether its oper is a
/// monodromy-free member of the lambda-family.
bool check_miura_image(const CartanConnection& conn, const Coweight& lambda);

}  // namespace operalg
