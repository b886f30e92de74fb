#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operalg/loop.hpp"

namespace operalg {

/// Connection operator  d/dt + sum_i f_{alpha_i} + v(t)  on the punctured
/// disc, v valued in the Borel subalgebra (raising + Cartan components).
/// The lowering part is implicit and normalized to exactly 1.
struct OperConnection {
  const LieBasis* lb = nullptr;
  LoopElement v;
};

/// Validates Borel support of v.
OperConnection make_oper(const LieBasis& lb, LoopElement v);

/// Transversal-slice form  d/dt + p- + sum_j coords[j] * s_j  with s_j the
/// slice vector of exponent root_system().exponents[j]. A complete gauge
/// invariant of the underlying oper.
struct CanonicalOper {
  std::string type;
  std::vector<LaurentSeries> coords;
};

struct ReductionResult {
  CanonicalOper canonical;
  UnipotentGauge gauge;  // factors that carry the input to the form
};

/// Grade-by-grade reduction to the slice. Exact linear algebra per grade;
/// precision of each output coordinate is inherited from the inputs that
/// feed it.
ReductionResult reduce_with_gauge(const OperConnection& op);
CanonicalOper reduce_to_canonical(const OperConnection& op);

/// The connection d/dt + p- + sum coords[j] s_j as an OperConnection.
OperConnection embed_canonical(const CanonicalOper& c);

/// Gauge action on oper connections; the lowering normalization is
/// preserved identically.
OperConnection oper_gauge(const OperConnection& op, const UnipotentGauge& g);

/// Twisted regular form  d/dt + sum_i t^{<alpha_i,lambda>} f_i + b(t) + nu/t
/// with b regular (valuations >= 0, Borel support) and nu a constant
/// raising-only element.
struct LambdaNilpotentForm {
  const LieBasis* lb = nullptr;
  Coweight lambda;
  LoopElement b_part;
  LieElement residue;
};

struct MembershipResult {
  std::optional<LambdaNilpotentForm> form;  // engaged iff member
  std::optional<int> obstruction_degree;    // engaged iff not a member
  bool member() const { return form.has_value(); }
};

/// Decide whether the oper lies in the lambda-family. The family is the
/// image, under the canonical-form reduction, of the explicit ansatz
/// d/dt + p- - lambda/t + u(t) + residue inserts, with u a regular
/// Cartan-valued series; its unknown coefficients are pinned against the
/// input's slice coordinates degree band by degree band through exact
/// linear solves. Returns the witness form, or the first obstructing
/// t-degree once a coefficient no member can reach is exactly nonzero.
/// Throws PrecisionError when the tracked windows cannot see all decision
/// coefficients.
MembershipResult to_lambda_nilpotent(const OperConnection& op,
                                     const Coweight& lambda);

/// Monodromy-freeness of a member form: the nilpotent residue vanishes.
bool is_lambda_regular(const LambdaNilpotentForm& form);

/// Search dominant coweights with coordinates <= bound for one whose family
/// contains the oper with vanishing residue. At most one can succeed; the
/// match is returned, or nullopt when none is found.
std::optional<Coweight> classify_monodromy_free(const CanonicalOper& op,
                                                int bound);

/// Residue-class token of the lambda-family: fundamental coordinates of
/// -(lambda + rho_check). Two families are distinct exactly when their
/// tokens lie in different Weyl orbits.
RatVec residue_class_token(const RootSystem& rs, const Coweight& lambda);

/// Token of the family containing the oper, searched over dominant lambda
/// with coordinates <= bound; nullopt when the oper lies outside every
/// family within the bound.
std::optional<RatVec> residue_class_token(const CanonicalOper& op, int bound);

/// Dilation t -> a t on canonical forms: coordinate j maps to
/// a^{exponent_j + 1} * coords[j](a t). Requires a != 0.
CanonicalOper dilate_oper(const CanonicalOper& op, const Rat& a);

/// Dilation of a connection: a Borel component of principal height k maps
/// to a^{k+1} times its substitution, matching dilate_oper through the
/// reduction.
OperConnection dilate_connection(const OperConnection& op, const Rat& a);

}  // namespace operalg
