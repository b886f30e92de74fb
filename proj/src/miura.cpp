#include "operalg/miura.hpp"

namespace operalg {

CartanConnection make_cartan_connection(const std::string& type,
                                        std::vector<LaurentSeries> u) {
  const LieBasis& lb = LieBasis::get(type);
  if (static_cast<int>(u.size()) != lb.rank())
    throw InputError("need one Cartan component per simple coroot");
  CartanConnection out;
  out.type = type;
  out.u = std::move(u);
  return out;
}

namespace {
OperConnection as_oper(const CartanConnection& conn) {
  const LieBasis& lb = LieBasis::get(conn.type);
  LoopElement v;
  v.lb = &lb;
  for (int i = 0; i < lb.rank(); ++i)
    v.add_term(lb.h_index(i), conn.u[static_cast<std::size_t>(i)]);
  return make_oper(lb, std::move(v));
}
}  // namespace

CanonicalOper miura_transform(const CartanConnection& conn) {
  return reduce_to_canonical(as_oper(conn));
}

RatVec connection_residue(const CartanConnection& conn) {
  const LieBasis& lb = LieBasis::get(conn.type);
  RatVec out;
  for (int i = 0; i < lb.rank(); ++i) {
    const LaurentSeries& s = conn.u[static_cast<std::size_t>(i)];
    if (auto fn = s.first_nonzero(); fn && *fn < -1)
      throw InputError("connection component has a pole of order > 1");
    out.push_back(s.residue());
  }
  return out;
}

bool check_miura_image(const CartanConnection& conn, const Coweight& lambda) {
  const LieBasis& lb = LieBasis::get(conn.type);
  const RootSystem& rs = lb.root_system();
  if (static_cast<int>(lambda.coords.size()) != rs.rank)
    throw InputError("coweight rank mismatch");
  if (!is_dominant(lambda))
    throw InputError("family label must be a dominant coweight");
  RatVec res = connection_residue(conn);
  RatVec fund(lambda.coords.begin(), lambda.coords.end());
  RatVec want = coweight_to_coroot_coords(rs, fund);
  for (int i = 0; i < rs.rank; ++i)
    if (res[static_cast<std::size_t>(i)] != -want[static_cast<std::size_t>(i)])
      throw InputError(
          "connection residue does not equal minus the requested coweight");
  MembershipResult m =
      to_lambda_nilpotent(embed_canonical(miura_transform(conn)), lambda);
  return m.member() && is_lambda_regular(*m.form);
}

}  // namespace operalg
