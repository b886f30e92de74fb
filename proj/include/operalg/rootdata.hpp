#pragma once

#include <string>
#include <vector>

#include "operalg/linalg.hpp"
#include "operalg/rational.hpp"

namespace operalg {

/// Integral weight in fundamental-weight coordinates.
struct Weight {
  std::vector<int> coords;
  bool operator==(const Weight&) const = default;
};

/// Integral coweight in fundamental-coweight coordinates.
struct Coweight {
  std::vector<int> coords;
  bool operator==(const Coweight&) const = default;
};

/// Finite root system of one of the supported simple types
/// (A1..A4, B2, B3, C2, C3, D4, G2), presented by its Cartan matrix
///   cartan[i][j] = <alpha_i, alpha_check_j>.
/// Positive roots are stored in simple-root coordinates and listed by height
/// then lexicographically; pos_coroots[k] is the coroot of pos_roots[k] in
/// simple-coroot coordinates.
struct RootSystem {
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> pos_roots;
  std::vector<std::vector<int>> pos_coroots;
  std::vector<int> exponents;  // ascending, with multiplicity

  int num_pos_roots() const { return static_cast<int>(pos_roots.size()); }
  int root_height(int k) const;
  /// Index of a positive root given in simple-root coordinates; -1 if absent.
  int root_index(const std::vector<int>& coords) const;
  int coxeter_number() const;  // = highest exponent + 1
  Weight rho() const;
  Coweight rho_check() const;
};

/// Build one of the supported systems; InputError on an unknown label.
const RootSystem& build_root_system(const std::string& label);

/// The Langlands dual system: Cartan matrix transposed, roots and coroots
/// exchanged. Applying it twice returns the original presentation.
RootSystem langlands_dual(const RootSystem& rs);

/// <root, coweight>, root in simple-root coords, coweight in fundamental
/// coordinates: sum_i root_i * mu_i.
long pair_root_coweight(const std::vector<int>& root, const Coweight& mu);

/// <weight, coroot>, weight in fundamental coords, coroot in simple-coroot
/// coords: sum_j lambda_j * coroot_j.
long pair_weight_coroot(const Weight& lambda, const std::vector<int>& coroot);

bool is_dominant(const Weight& w);
bool is_dominant(const Coweight& w);

/// Coordinates of a coweight over the simple coroots: solve
/// fund = cartan * c (exact).
RatVec coweight_to_coroot_coords(const RootSystem& rs, const RatVec& fund);
/// Inverse direction: fund_i = sum_j cartan[i][j] * c_j.
RatVec coroot_coords_to_fund(const RootSystem& rs, const RatVec& c);

/// All dominant weights with every coordinate in [0, bound], ordered
/// lexicographically.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, int bound);
std::vector<Coweight> dominant_coweights_up_to(const RootSystem& rs,
                                               int bound);

/// Whether mu and nu (rational fundamental-coweight coordinate vectors) lie
/// in one Weyl orbit, i.e. define the same central character / residue class.
bool same_weyl_orbit_coweight(const RootSystem& rs, const RatVec& mu,
                              const RatVec& nu);

}  // namespace operalg
