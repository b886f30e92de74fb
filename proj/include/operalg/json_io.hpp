#pragma once

#include <json.hpp>

#include "operalg/miura.hpp"
#include "operalg/oper.hpp"
#include "operalg/qseries.hpp"

namespace operalg {

using Json = nlohmann::json;

/// Series: {"valuation": v, "precision": p | null, "coeffs": ["p/q", ...]}.
/// A null precision marks an exact Laurent polynomial; coefficients are
/// decimal rational strings so nothing is rounded or overflowed.
Json laurent_to_json(const LaurentSeries& s);
LaurentSeries laurent_from_json(const Json& j);

/// {"order": N, "coeffs": ["...", ...]} with big integers as decimal strings.
Json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// {"type": label, "coords": [series, ...]}, one per exponent.
Json canonical_to_json(const CanonicalOper& op);
CanonicalOper canonical_from_json(const Json& j);

/// {"type": label, "v": {"e[...]": series, "h[i]": series, ...}}.
Json connection_to_json(const OperConnection& op);
OperConnection connection_from_json(const Json& j);

/// {"type": label, "u": [series, ...]}, one per simple coroot.
Json cartan_connection_to_json(const CartanConnection& c);
CartanConnection cartan_connection_from_json(const Json& j);

Json coweight_to_json(const Coweight& c);
Coweight coweight_from_json(const Json& j);

/// {"type", "lambda", "b": {...}, "residue": {"e[...]": "p/q"}}.
Json form_to_json(const LambdaNilpotentForm& f);

Json ratvec_to_json(const RatVec& v);

/// Parse an oper input that may be either a canonical form ("coords") or a
/// connection ("v"); always returns the connection view.
OperConnection oper_input_from_json(const Json& j);

}  // namespace operalg
