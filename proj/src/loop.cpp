#include "operalg/loop.hpp"

#include <sstream>

namespace operalg {

bool LieElement::is_zero() const {
  for (const auto& [idx, c] : comps)
    if (c != 0) return false;
  return true;
}

std::string LieElement::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& [idx, c] : comps) {
    if (c == 0) continue;
    if (any) os << " + ";
    os << format_rational(c) << "*" << lb->label_of(idx);
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

LoopElement LoopElement::zero(const LieBasis& lb) {
  LoopElement out;
  out.lb = &lb;
  return out;
}

LoopElement LoopElement::from_constant(const LieElement& x) {
  LoopElement out;
  out.lb = x.lb;
  for (const auto& [idx, c] : x.comps)
    if (c != 0) out.comps.emplace(idx, LaurentSeries::constant(c));
  return out;
}

void LoopElement::add_term(int idx, const LaurentSeries& s) {
  if (s.exact() && s.is_zero()) return;
  auto it = comps.find(idx);
  if (it == comps.end()) {
    comps.emplace(idx, s);
    return;
  }
  it->second += s;
  if (it->second.exact() && it->second.is_zero()) comps.erase(it);
}

const LaurentSeries* LoopElement::find(int idx) const {
  auto it = comps.find(idx);
  return it == comps.end() ? nullptr : &it->second;
}

bool LoopElement::supported_on_e() const {
  for (const auto& [idx, s] : comps)
    if (!lb->is_e(idx) && !s.is_zero()) return false;
  return true;
}

bool LoopElement::supported_on_borel() const {
  for (const auto& [idx, s] : comps)
    if (lb->is_f(idx) && !s.is_zero()) return false;
  return true;
}

bool LoopElement::is_zero() const {
  for (const auto& [idx, s] : comps)
    if (!s.is_zero()) return false;
  return true;
}

LoopElement LoopElement::operator+(const LoopElement& o) const {
  if (lb != o.lb) throw InputError("mixing elements over different types");
  LoopElement out = *this;
  for (const auto& [idx, s] : o.comps) out.add_term(idx, s);
  return out;
}

LoopElement LoopElement::operator-() const {
  LoopElement out;
  out.lb = lb;
  for (const auto& [idx, s] : comps) out.comps.emplace(idx, -s);
  return out;
}

LoopElement LoopElement::operator-(const LoopElement& o) const {
  return *this + (-o);
}

LoopElement LoopElement::scaled(const Rat& c) const {
  LoopElement out;
  out.lb = lb;
  if (c == 0) return out;
  for (const auto& [idx, s] : comps) out.comps.emplace(idx, c * s);
  return out;
}

std::string LoopElement::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& [idx, s] : comps) {
    if (any) os << "  +  ";
    os << lb->label_of(idx) << ": (" << s.str() << ")";
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

LoopElement lie_bracket(const LoopElement& x, const LoopElement& y) {
  if (x.lb != y.lb) throw InputError("mixing elements over different types");
  LoopElement out;
  out.lb = x.lb;
  for (const auto& [i, si] : x.comps)
    for (const auto& [j, sj] : y.comps) {
      const LieBasis::Row& row = x.lb->bracket(i, j);
      if (row.empty()) continue;
      LaurentSeries prod = si * sj;
      for (const auto& [k, c] : row) out.add_term(k, c * prod);
    }
  return out;
}

LoopElement exp_ad(const LoopElement& x, const LoopElement& y) {
  if (x.lb != y.lb) throw InputError("mixing elements over different types");
  if (!x.supported_on_e())
    throw InputError("exp_ad requires a nilpotent (raising-only) argument");
  LoopElement result = y;
  LoopElement term = y;
  for (int k = 1; !term.comps.empty(); ++k) {
    if (k > 64) throw InputError("exp_ad failed to terminate");
    term = lie_bracket(x, term).scaled(Rat(1) / Rat(k));
    for (const auto& [idx, s] : term.comps) result.add_term(idx, s);
  }
  return result;
}

LoopElement gauge_factor_apply(const LoopElement& a, int root,
                               const LaurentSeries& x) {
  const LieBasis& lb = *a.lb;
  LoopElement xe;
  xe.lb = &lb;
  xe.add_term(lb.e_index(root), x);
  LoopElement out = exp_ad(xe, a);
  // Logarithmic-derivative correction sum_k ad^k(x' e)/(k+1)!.
  LoopElement term;
  term.lb = &lb;
  term.add_term(lb.e_index(root), x.derivative());
  LoopElement corr = term;
  for (int k = 1; !term.comps.empty(); ++k) {
    if (k > 64) throw InputError("gauge correction failed to terminate");
    term = lie_bracket(xe, term).scaled(Rat(1) / Rat(k + 1));
    for (const auto& [idx, s] : term.comps) corr.add_term(idx, s);
  }
  return out - corr;
}

LoopElement gauge_transform(const LoopElement& a, const UnipotentGauge& g) {
  if (g.lb != a.lb) throw InputError("mixing elements over different types");
  LoopElement cur = a;
  for (const GaugeFactor& f : g.factors)
    cur = gauge_factor_apply(cur, f.root, f.x);
  return cur;
}

LoopElement gauge_by_cocharacter(const LoopElement& a, const Coweight& mu) {
  const LieBasis& lb = *a.lb;
  const RootSystem& rs = lb.root_system();
  if (static_cast<int>(mu.coords.size()) != rs.rank)
    throw InputError("cocharacter rank mismatch");
  LoopElement out;
  out.lb = &lb;
  for (const auto& [idx, s] : a.comps) {
    if (lb.is_h(idx)) {
      out.add_term(idx, s);
      continue;
    }
    long p = pair_root_coweight(rs.pos_roots[lb.root_of(idx)], mu);
    int shift = lb.is_e(idx) ? static_cast<int>(p) : -static_cast<int>(p);
    out.add_term(idx, s.shifted(shift));
  }
  RatVec fund(mu.coords.begin(), mu.coords.end());
  RatVec c = coweight_to_coroot_coords(rs, fund);
  for (int i = 0; i < rs.rank; ++i)
    if (c[static_cast<std::size_t>(i)] != 0)
      out.add_term(lb.h_index(i),
                   LaurentSeries::monomial(-c[static_cast<std::size_t>(i)], -1));
  return out;
}

}  // namespace operalg
