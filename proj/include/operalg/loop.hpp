#pragma once

#include <map>
#include <string>
#include <vector>

#include "operalg/chevalley.hpp"
#include "operalg/laurent.hpp"

namespace operalg {

/// Constant element of the Lie algebra, sparse over a LieBasis.
struct LieElement {
  const LieBasis* lb = nullptr;
  std::map<int, Rat> comps;

  bool is_zero() const;
  std::string str() const;
};

/// Element of the loop algebra: finitely many basis components, each a
/// truncated Laurent series. An absent component is exactly zero; a present
/// zero-valued component still carries its precision window.
struct LoopElement {
  const LieBasis* lb = nullptr;
  std::map<int, LaurentSeries> comps;

  static LoopElement zero(const LieBasis& lb);
  static LoopElement from_constant(const LieElement& x);

  /// Add s into component idx (exact-zero contributions are dropped, and a
  /// component that becomes exactly zero is pruned).
  void add_term(int idx, const LaurentSeries& s);
  const LaurentSeries* find(int idx) const;

  bool supported_on_e() const;
  bool supported_on_borel() const;
  bool is_zero() const;

  LoopElement operator+(const LoopElement& o) const;
  LoopElement operator-(const LoopElement& o) const;
  LoopElement operator-() const;
  LoopElement scaled(const Rat& c) const;

  std::string str() const;
};

/// Pointwise Lie bracket via the structure-constant table.
LoopElement lie_bracket(const LoopElement& x, const LoopElement& y);

/// exp(ad_x) y for x supported on raising vectors (so ad_x is nilpotent and
/// the sum is finite). InputError if x has any f- or h-component.
LoopElement exp_ad(const LoopElement& x, const LoopElement& y);

/// One unipotent gauge factor exp(x(t) e_root).
struct GaugeFactor {
  int root;  // positive-root index
  LaurentSeries x;
};

/// Product of factors exp(x_1 e_{r_1}) ... exp(x_m e_{r_m}); when acting on
/// a connection the factors are applied in list order (factors[0] first).
struct UnipotentGauge {
  const LieBasis* lb = nullptr;
  std::vector<GaugeFactor> factors;
};

/// Action of exp(x e_root) on a connection coefficient A:
///   A |-> exp(ad_{x e}) A  -  sum_{k>=0} ad_{x e}^k (x' e) / (k+1)!
/// (the second sum is the logarithmic-derivative correction, finite by
/// nilpotency).
LoopElement gauge_factor_apply(const LoopElement& a, int root,
                               const LaurentSeries& x);

LoopElement gauge_transform(const LoopElement& a, const UnipotentGauge& g);

/// Action of the cocharacter t^{mu}: raising components shift by
/// <root, mu>, lowering components by -<root, mu>, and mu/t is subtracted
/// from the Cartan part.
LoopElement gauge_by_cocharacter(const LoopElement& a, const Coweight& mu);

}  // namespace operalg
