#include "operalg/json_io.hpp"

namespace operalg {

namespace {
const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing JSON key: ") + key);
  return j.at(key);
}

int need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer())
    throw InputError(std::string("JSON key is not an integer: ") + key);
  return v.get<int>();
}
}  // namespace

Json laurent_to_json(const LaurentSeries& s) {
  Json j;
  j["valuation"] = s.valuation();
  j["precision"] = s.exact() ? Json(nullptr) : Json(s.precision());
  Json coeffs = Json::array();
  for (int n = s.valuation(); n < s.support_end(); ++n)
    coeffs.push_back(format_rational(s.coeff(n)));
  j["coeffs"] = coeffs;
  return j;
}

LaurentSeries laurent_from_json(const Json& j) {
  int val = need_int(j, "valuation");
  const Json& prec = need(j, "precision");
  const Json& coeffs = need(j, "coeffs");
  if (!coeffs.is_array()) throw InputError("series coeffs must be an array");
  std::vector<Rat> w;
  for (const Json& c : coeffs) {
    if (!c.is_string())
      throw InputError("series coefficients must be rational strings");
    w.push_back(parse_rational(c.get<std::string>()));
  }
  if (prec.is_null()) return LaurentSeries::polynomial(val, std::move(w));
  if (!prec.is_number_integer())
    throw InputError("series precision must be an integer or null");
  int p = prec.get<int>();
  if (static_cast<int>(w.size()) != p - val)
    throw InputError("series window size does not match coefficients");
  return LaurentSeries::from_window(val, p, std::move(w));
}

Json qseries_to_json(const QSeries& s) {
  Json j;
  j["order"] = s.order();
  Json coeffs = Json::array();
  for (int n = 0; n < s.order(); ++n) coeffs.push_back(s[n].get_str());
  j["coeffs"] = coeffs;
  return j;
}

QSeries qseries_from_json(const Json& j) {
  int order = need_int(j, "order");
  QSeries s(order);
  const Json& coeffs = need(j, "coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order)
    throw InputError("q-series coeffs must be an array of length order");
  for (int n = 0; n < order; ++n) {
    const Json& c = coeffs.at(static_cast<std::size_t>(n));
    if (!c.is_string()) throw InputError("q-series coefficients are strings");
    s[n] = Int(c.get<std::string>());
  }
  return s;
}

Json canonical_to_json(const CanonicalOper& op) {
  Json j;
  j["type"] = op.type;
  Json coords = Json::array();
  for (const LaurentSeries& s : op.coords) coords.push_back(laurent_to_json(s));
  j["coords"] = coords;
  return j;
}

CanonicalOper canonical_from_json(const Json& j) {
  CanonicalOper op;
  const Json& type = need(j, "type");
  if (!type.is_string()) throw InputError("type must be a string label");
  op.type = type.get<std::string>();
  const LieBasis& lb = LieBasis::get(op.type);  // validates the label
  const Json& coords = need(j, "coords");
  if (!coords.is_array())
    throw InputError("canonical coords must be an array");
  for (const Json& c : coords) op.coords.push_back(laurent_from_json(c));
  if (op.coords.size() != lb.root_system().exponents.size())
    throw InputError("canonical form needs one coordinate per exponent");
  return op;
}

Json connection_to_json(const OperConnection& op) {
  Json j;
  j["type"] = op.lb->root_system().label;
  Json v = Json::object();
  for (const auto& [idx, s] : op.v.comps)
    v[op.lb->label_of(idx)] = laurent_to_json(s);
  j["v"] = v;
  return j;
}

OperConnection connection_from_json(const Json& j) {
  const Json& type = need(j, "type");
  if (!type.is_string()) throw InputError("type must be a string label");
  const LieBasis& lb = LieBasis::get(type.get<std::string>());
  const Json& v = need(j, "v");
  if (!v.is_object()) throw InputError("connection v must be an object");
  LoopElement elem;
  elem.lb = &lb;
  for (auto it = v.begin(); it != v.end(); ++it)
    elem.add_term(lb.index_of_label(it.key()), laurent_from_json(it.value()));
  return make_oper(lb, std::move(elem));
}

Json cartan_connection_to_json(const CartanConnection& c) {
  Json j;
  j["type"] = c.type;
  Json u = Json::array();
  for (const LaurentSeries& s : c.u) u.push_back(laurent_to_json(s));
  j["u"] = u;
  return j;
}

CartanConnection cartan_connection_from_json(const Json& j) {
  const Json& type = need(j, "type");
  if (!type.is_string()) throw InputError("type must be a string label");
  const Json& u = need(j, "u");
  if (!u.is_array()) throw InputError("connection u must be an array");
  std::vector<LaurentSeries> comps;
  for (const Json& s : u) comps.push_back(laurent_from_json(s));
  return make_cartan_connection(type.get<std::string>(), std::move(comps));
}

Json coweight_to_json(const Coweight& c) {
  Json j = Json::array();
  for (int x : c.coords) j.push_back(x);
  return j;
}

Coweight coweight_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("coweight must be an integer array");
  Coweight c;
  for (const Json& x : j) {
    if (!x.is_number_integer())
      throw InputError("coweight must be an integer array");
    c.coords.push_back(x.get<int>());
  }
  return c;
}

Json form_to_json(const LambdaNilpotentForm& f) {
  Json j;
  j["type"] = f.lb->root_system().label;
  j["lambda"] = coweight_to_json(f.lambda);
  Json b = Json::object();
  for (const auto& [idx, s] : f.b_part.comps)
    b[f.lb->label_of(idx)] = laurent_to_json(s);
  j["b"] = b;
  Json res = Json::object();
  for (const auto& [idx, c] : f.residue.comps)
    if (c != 0) res[f.lb->label_of(idx)] = format_rational(c);
  j["residue"] = res;
  return j;
}

Json ratvec_to_json(const RatVec& v) {
  Json j = Json::array();
  for (const Rat& x : v) j.push_back(format_rational(x));
  return j;
}

OperConnection oper_input_from_json(const Json& j) {
  if (j.is_object() && j.contains("coords"))
    return embed_canonical(canonical_from_json(j));
  if (j.is_object() && j.contains("v")) return connection_from_json(j);
  throw InputError("oper input needs either 'coords' or 'v'");
}

}  // namespace operalg
