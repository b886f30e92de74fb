#include "operalg/oper.hpp"

#include <algorithm>
#include <limits>

namespace operalg {

namespace {

// The connection coefficient with the implicit lowering part materialized:
// v + sum_i f_{alpha_i} (exact constants).
LoopElement with_lowering(const OperConnection& op) {
  const LieBasis& lb = *op.lb;
  const RootSystem& rs = lb.root_system();
  LoopElement w = op.v;
  w.lb = &lb;
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> unit(rs.rank, 0);
    unit[i] = 1;
    w.add_term(lb.f_index(rs.root_index(unit)),
               LaurentSeries::constant(Rat(1)));
  }
  return w;
}

}  // namespace

OperConnection make_oper(const LieBasis& lb, LoopElement v) {
  OperConnection op;
  op.lb = &lb;
  v.lb = &lb;
  LoopElement clean;
  clean.lb = &lb;
  for (const auto& [idx, s] : v.comps) {
    if (idx < 0 || idx >= lb.dim())
      throw InputError("component index out of range");
    if (lb.is_f(idx)) {
      if (!s.is_zero())
        throw InputError(
            "connection coefficient has a lowering component: " +
            lb.label_of(idx));
      continue;  // a visibly-zero lowering window carries no content
    }
    clean.add_term(idx, s);
  }
  op.v = std::move(clean);
  return op;
}

ReductionResult reduce_with_gauge(const OperConnection& op) {
  const LieBasis& lb = *op.lb;
  const RootSystem& rs = lb.root_system();
  LoopElement W = with_lowering(op);
  ReductionResult out;
  out.canonical.type = rs.label;
  out.canonical.coords.assign(rs.exponents.size(), LaurentSeries());
  out.gauge.lb = &lb;

  for (int k = 0; k <= lb.max_grade(); ++k) {
    const LieBasis::GradeData& gd = lb.grade_data(k);
    const std::size_t nk = gd.basis.size();
    std::vector<LaurentSeries> w(nk);
    for (std::size_t i = 0; i < nk; ++i) {
      const LaurentSeries* s = W.find(gd.basis[i]);
      w[i] = s ? *s : LaurentSeries();
    }
    // (slice coords ; gauge unknowns) = inverse * w, series-linearly.
    std::vector<LaurentSeries> sol(nk);
    for (std::size_t r = 0; r < nk; ++r) {
      LaurentSeries acc;
      for (std::size_t c = 0; c < nk; ++c)
        if (gd.inverse[r][c] != 0) acc += gd.inverse[r][c] * w[c];
      sol[r] = acc;
    }
    for (std::size_t j = 0; j < gd.slice_cols.size(); ++j)
      out.canonical.coords[static_cast<std::size_t>(gd.slice_cols[j])] =
          sol[j];
    for (std::size_t d = 0; d < gd.gauge_roots.size(); ++d) {
      const LaurentSeries& u = sol[gd.slice_cols.size() + d];
      if (u.exact() && u.is_zero()) continue;
      LaurentSeries x = -u;
      W = gauge_factor_apply(W, gd.gauge_roots[d], x);
      out.gauge.factors.push_back({gd.gauge_roots[d], x});
    }
  }
  return out;
}

CanonicalOper reduce_to_canonical(const OperConnection& op) {
  return reduce_with_gauge(op).canonical;
}

OperConnection embed_canonical(const CanonicalOper& c) {
  const LieBasis& lb = LieBasis::get(c.type);
  const RootSystem& rs = lb.root_system();
  if (c.coords.size() != rs.exponents.size())
    throw InputError("canonical form needs one coordinate per exponent");
  LoopElement v;
  v.lb = &lb;
  for (std::size_t j = 0; j < c.coords.size(); ++j) {
    const RatVec& s = lb.slice()[j];
    for (int r = 0; r < lb.num_pos(); ++r)
      if (s[static_cast<std::size_t>(r)] != 0)
        v.add_term(lb.e_index(r), s[static_cast<std::size_t>(r)] * c.coords[j]);
  }
  return make_oper(lb, std::move(v));
}

OperConnection oper_gauge(const OperConnection& op, const UnipotentGauge& g) {
  const LieBasis& lb = *op.lb;
  if (g.lb != &lb) throw InputError("gauge and oper live over different types");
  LoopElement W = gauge_transform(with_lowering(op), g);
  // The lowering part is structurally untouched by raising-only gauges;
  // strip it and re-validate.
  LoopElement v;
  v.lb = &lb;
  for (const auto& [idx, s] : W.comps) {
    if (lb.is_f(idx)) {
      if (!agrees(s, LaurentSeries::constant(Rat(1))))
        throw InputError("gauge broke the lowering normalization");
      continue;
    }
    v.add_term(idx, s);
  }
  return make_oper(lb, std::move(v));
}

MembershipResult to_lambda_nilpotent(const OperConnection& op,
                                     const Coweight& lambda) {
  const LieBasis& lb = *op.lb;
  const RootSystem& rs = lb.root_system();
  if (static_cast<int>(lambda.coords.size()) != rs.rank)
    throw InputError("coweight rank mismatch");
  if (!is_dominant(lambda))
    throw InputError("family label must be a dominant coweight");

  const std::vector<int>& exps = rs.exponents;
  const int nc = static_cast<int>(exps.size());
  const std::vector<LaurentSeries> target = reduce_to_canonical(op).coords;

  // Every leading coefficient (degree -exponent-1) must be readable.
  for (int j = 0; j < nc; ++j)
    if (!target[j].exact() && target[j].precision() < -exps[j])
      throw PrecisionError(
          "window too short to read the leading coefficient of slice "
          "coordinate " +
          std::to_string(j));

  // The family is the image of the explicit ansatz
  //   d/dt + p- - lambda/t + sum_{d>=0} u_d t^d + sum_r v_r t^{<g_r,l>-1} e_r
  // with u_d Cartan-valued and v_r constants; conjugating by the
  // cocharacter t^lambda carries it to the twisted regular form, so the
  // oper is a member exactly when some (u, v) reproduces its slice
  // coordinates. Unknowns are pinned band by band, where the band of a
  // coefficient row (j, nu) is nu + exponent_j + 1, the distance above
  // coordinate j's leading degree. u_d first influences band d + 1 and
  // v_r first influences band <gamma_r, lambda> + height(gamma_r), so each
  // band sees finitely many fresh unknowns and the dependence is affine
  // there: products of fresh coefficients only reach strictly higher
  // bands.
  RatVec lam_fund;
  for (int m : lambda.coords) lam_fund.emplace_back(m);
  const RatVec cc = coweight_to_coroot_coords(rs, lam_fund);

  const int npos = lb.num_pos();
  std::vector<int> twist(static_cast<std::size_t>(npos));
  std::vector<int> onset(static_cast<std::size_t>(npos));
  for (int r = 0; r < npos; ++r) {
    twist[static_cast<std::size_t>(r)] = static_cast<int>(pair_root_coweight(
        rs.pos_roots[static_cast<std::size_t>(r)], lambda));
    onset[static_cast<std::size_t>(r)] =
        twist[static_cast<std::size_t>(r)] + rs.root_height(r);
  }

  // Band ranges supported by the data: an exact coordinate sees every
  // band, a windowed coordinate j sees bands below precision_j +
  // exponent_j + 1. Below `shared`, every coordinate contributes a row.
  int horizon = 1;
  int shared = std::numeric_limits<int>::max();
  bool windowed = false;
  for (int j = 0; j < nc; ++j) {
    int end = target[static_cast<std::size_t>(j)].exact()
                  ? target[static_cast<std::size_t>(j)].support_end()
                  : target[static_cast<std::size_t>(j)].precision();
    horizon = std::max(horizon, end + exps[static_cast<std::size_t>(j)] + 1);
    if (!target[static_cast<std::size_t>(j)].exact()) {
      windowed = true;
      shared = std::min(shared, target[static_cast<std::size_t>(j)].precision() +
                                    exps[static_cast<std::size_t>(j)] + 1);
    }
  }
  for (int r = 0; r < npos; ++r)
    horizon = std::max(horizon, onset[static_cast<std::size_t>(r)] + 1);

  const int u_len = horizon - 1;
  std::vector<RatVec> uco(static_cast<std::size_t>(u_len),
                          RatVec(static_cast<std::size_t>(rs.rank), Rat(0)));
  RatVec vres(static_cast<std::size_t>(npos), Rat(0));

  auto ansatz_coords = [&](const std::vector<RatVec>& u, const RatVec& v) {
    LoopElement w;
    w.lb = &lb;
    for (int i = 0; i < rs.rank; ++i) {
      std::vector<Rat> coeffs(static_cast<std::size_t>(u_len) + 1, Rat(0));
      coeffs[0] = -cc[static_cast<std::size_t>(i)];
      for (int d = 0; d < u_len; ++d)
        coeffs[static_cast<std::size_t>(d) + 1] =
            u[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
      w.add_term(lb.h_index(i),
                 LaurentSeries::polynomial(-1, std::move(coeffs)));
    }
    for (int r = 0; r < npos; ++r)
      if (v[static_cast<std::size_t>(r)] != 0)
        w.add_term(lb.e_index(r),
                   LaurentSeries::monomial(v[static_cast<std::size_t>(r)],
                                           twist[static_cast<std::size_t>(r)] -
                                               1));
    return reduce_to_canonical(make_oper(lb, std::move(w))).coords;
  };

  // Rows of a band that the data can see.
  auto rows_at = [&](int band) {
    std::vector<std::pair<int, int>> rows;
    for (int j = 0; j < nc; ++j) {
      int nu = band - exps[static_cast<std::size_t>(j)] - 1;
      if (target[static_cast<std::size_t>(j)].exact() ||
          nu < target[static_cast<std::size_t>(j)].precision())
        rows.emplace_back(j, nu);
    }
    return rows;
  };

  // Obstruction degrees are reported in the twisted form's coordinates:
  // shift by the largest pairing over the slice support of coordinate j.
  auto obstruction_at = [&](int j, int nu) {
    int sh = 0;
    const RatVec& s = lb.slice()[static_cast<std::size_t>(j)];
    for (int r = 0; r < npos; ++r)
      if (s[static_cast<std::size_t>(r)] != 0)
        sh = std::max(sh, twist[static_cast<std::size_t>(r)]);
    return nu - sh;
  };

  // Bands <= 0 carry no unknowns at all: any nonzero coefficient strictly
  // below a coordinate's leading degree, or a wrong leading coefficient,
  // refutes membership outright.
  {
    std::vector<LaurentSeries> f = ansatz_coords(uco, vres);
    std::optional<int> worst;
    for (int j = 0; j < nc; ++j) {
      LaurentSeries diff = f[static_cast<std::size_t>(j)] -
                           target[static_cast<std::size_t>(j)];
      int stop = -exps[static_cast<std::size_t>(j)];
      for (int nu = diff.valuation(); nu < stop; ++nu) {
        if (diff.coeff(nu) == 0) continue;
        int o = obstruction_at(j, nu);
        if (!worst || o < *worst) worst = o;
        break;
      }
    }
    if (worst) {
      MembershipResult out;
      out.obstruction_degree = *worst;
      return out;
    }
  }

  struct Slot {
    int kind;  // 0: Cartan coefficient u_d[i], 1: residue slot v_r
    int d, i, r;
  };

  for (int band = 1; band < horizon; ++band) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == 8)
        throw PrecisionError("band " + std::to_string(band) +
                             " of the membership sweep did not stabilize");
      std::vector<LaurentSeries> base = ansatz_coords(uco, vres);
      std::vector<std::pair<int, int>> rows = rows_at(band);
      bool dirty = false;
      for (const auto& [j, nu] : rows)
        if (base[static_cast<std::size_t>(j)].coeff(nu) !=
            target[static_cast<std::size_t>(j)].coeff(nu)) {
          dirty = true;
          break;
        }
      if (!dirty) break;

      // Exact probe column of one unknown around the current point.
      auto column = [&](const Slot& s) {
        std::vector<RatVec> u2 = uco;
        RatVec v2 = vres;
        if (s.kind == 0)
          u2[static_cast<std::size_t>(s.d)][static_cast<std::size_t>(s.i)] +=
              Rat(1);
        else
          v2[static_cast<std::size_t>(s.r)] += Rat(1);
        std::vector<LaurentSeries> c2 = ansatz_coords(u2, v2);
        std::vector<LaurentSeries> col(static_cast<std::size_t>(nc));
        for (int j = 0; j < nc; ++j)
          col[static_cast<std::size_t>(j)] =
              c2[static_cast<std::size_t>(j)] -
              base[static_cast<std::size_t>(j)];
        return col;
      };
      auto keeps_lower_bands = [&](const std::vector<LaurentSeries>& col) {
        for (int b = 1; b < band; ++b)
          for (const auto& [j, nu] : rows_at(b))
            if (col[static_cast<std::size_t>(j)].coeff(nu) != 0) return false;
        return true;
      };

      // Widening tiers of unknowns: coefficients entering exactly at this
      // band; plus the residue slots resonant here; plus every older
      // coefficient whose column provably leaves cleared bands untouched.
      // Residue slots come last so monodromy-free members keep v = 0.
      std::vector<Slot> t1, t2, t3;
      for (int i = 0; i < rs.rank; ++i) t1.push_back(Slot{0, band - 1, i, 0});
      t2 = t1;
      for (int r = 0; r < npos; ++r)
        if (onset[static_cast<std::size_t>(r)] == band)
          t2.push_back(Slot{1, 0, 0, r});
      t3 = t2;
      for (int d = 0; d + 1 < band && d < u_len; ++d)
        for (int i = 0; i < rs.rank; ++i) t3.push_back(Slot{0, d, i, 0});
      for (int r = 0; r < npos; ++r)
        if (onset[static_cast<std::size_t>(r)] < band)
          t3.push_back(Slot{1, 0, 0, r});
      const std::vector<std::vector<Slot>> tiers = {t1, t2, t3};

      bool solved = false;
      for (std::size_t tix = 0; tix < tiers.size() && !solved; ++tix) {
        if (tix > 0 && tiers[tix].size() == tiers[tix - 1].size()) continue;
        std::vector<std::vector<LaurentSeries>> cols;
        std::vector<Slot> used;
        for (const Slot& s : tiers[tix]) {
          std::vector<LaurentSeries> col = column(s);
          if (tix == 2 && !keeps_lower_bands(col)) continue;
          used.push_back(s);
          cols.push_back(std::move(col));
        }
        RatMat a(rows.size(), RatVec(used.size(), Rat(0)));
        RatVec rhs(rows.size(), Rat(0));
        for (std::size_t q = 0; q < rows.size(); ++q) {
          const auto& [j, nu] = rows[q];
          rhs[q] = target[static_cast<std::size_t>(j)].coeff(nu) -
                   base[static_cast<std::size_t>(j)].coeff(nu);
          for (std::size_t k = 0; k < used.size(); ++k)
            a[q][k] = cols[k][static_cast<std::size_t>(j)].coeff(nu);
        }
        auto sol = solve_linear(a, rhs);
        if (!sol) continue;
        for (std::size_t k = 0; k < used.size(); ++k) {
          if ((*sol)[k] == 0) continue;
          const Slot& s = used[k];
          if (s.kind == 0)
            uco[static_cast<std::size_t>(s.d)][static_cast<std::size_t>(s.i)] +=
                (*sol)[k];
          else
            vres[static_cast<std::size_t>(s.r)] += (*sol)[k];
        }
        solved = true;
      }
      if (!solved) {
        // No reachable direction cancels this band: the smallest offending
        // degree is an exact obstruction.
        std::optional<int> worst;
        for (const auto& [j, nu] : rows) {
          if (base[static_cast<std::size_t>(j)].coeff(nu) ==
              target[static_cast<std::size_t>(j)].coeff(nu))
            continue;
          int o = obstruction_at(j, nu);
          if (!worst || o < *worst) worst = o;
        }
        MembershipResult out;
        out.obstruction_degree = *worst;
        return out;
      }
    }
  }

  // Member. A residue slot may only be declared zero if its resonance
  // band was visible on every coordinate window.
  if (windowed)
    for (int r = 0; r < npos; ++r)
      if (onset[static_cast<std::size_t>(r)] >= shared)
        throw PrecisionError(
            "window too short to resolve the nilpotent residue");

  MembershipResult out;
  LambdaNilpotentForm form;
  form.lb = &lb;
  form.lambda = lambda;
  form.b_part.lb = &lb;
  form.residue.lb = &lb;

  // The witness is exact when the ansatz reproduces the target on the
  // nose; otherwise its Cartan part is pinned through the bands every
  // window could see.
  bool tail_exact = true;
  {
    std::vector<LaurentSeries> f = ansatz_coords(uco, vres);
    for (int j = 0; j < nc; ++j) {
      LaurentSeries diff = f[static_cast<std::size_t>(j)] -
                           target[static_cast<std::size_t>(j)];
      if (!(diff.exact() && diff.is_zero())) tail_exact = false;
    }
  }
  const int bp = (windowed ? shared : horizon) - 1;
  for (int i = 0; i < rs.rank; ++i) {
    if (tail_exact) {
      std::vector<Rat> coeffs(static_cast<std::size_t>(u_len), Rat(0));
      for (int d = 0; d < u_len; ++d)
        coeffs[static_cast<std::size_t>(d)] =
            uco[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
      form.b_part.add_term(lb.h_index(i),
                           LaurentSeries::polynomial(0, std::move(coeffs)));
    } else {
      std::vector<Rat> coeffs(static_cast<std::size_t>(bp), Rat(0));
      for (int d = 0; d < bp && d < u_len; ++d)
        coeffs[static_cast<std::size_t>(d)] =
            uco[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
      form.b_part.add_term(lb.h_index(i),
                           LaurentSeries::from_window(0, bp, std::move(coeffs)));
    }
  }
  for (int r = 0; r < npos; ++r)
    if (vres[static_cast<std::size_t>(r)] != 0)
      form.residue.comps[lb.e_index(r)] = vres[static_cast<std::size_t>(r)];

  out.form = std::move(form);
  return out;
}

bool is_lambda_regular(const LambdaNilpotentForm& form) {
  return form.residue.is_zero();
}

std::optional<Coweight> classify_monodromy_free(const CanonicalOper& op,
                                                int bound) {
  if (bound < 0) throw InputError("negative search bound");
  OperConnection conn = embed_canonical(op);
  const RootSystem& rs = conn.lb->root_system();
  std::optional<Coweight> found;
  for (const Coweight& lam : dominant_coweights_up_to(rs, bound)) {
    MembershipResult res = to_lambda_nilpotent(conn, lam);
    if (res.member() && is_lambda_regular(*res.form)) {
      if (found)
        throw InputError("two dominant families claim the same oper");
      found = lam;
    }
  }
  return found;
}

RatVec residue_class_token(const RootSystem& rs, const Coweight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank)
    throw InputError("coweight rank mismatch");
  RatVec out;
  for (int c : lambda.coords) out.push_back(Rat(-(c + 1)));
  return out;
}

std::optional<RatVec> residue_class_token(const CanonicalOper& op, int bound) {
  if (bound < 0) throw InputError("negative search bound");
  OperConnection conn = embed_canonical(op);
  const RootSystem& rs = conn.lb->root_system();
  for (const Coweight& lam : dominant_coweights_up_to(rs, bound)) {
    MembershipResult res = to_lambda_nilpotent(conn, lam);
    if (res.member()) return residue_class_token(rs, lam);
  }
  return std::nullopt;
}

CanonicalOper dilate_oper(const CanonicalOper& op, const Rat& a) {
  if (a == 0) throw InputError("dilation by zero");
  const LieBasis& lb = LieBasis::get(op.type);
  const RootSystem& rs = lb.root_system();
  if (op.coords.size() != rs.exponents.size())
    throw InputError("canonical form needs one coordinate per exponent");
  CanonicalOper out;
  out.type = op.type;
  for (std::size_t j = 0; j < op.coords.size(); ++j) {
    long wt = rs.exponents[j] + 1;
    out.coords.push_back(rat_pow(a, wt) * op.coords[j].dilated(a));
  }
  return out;
}

OperConnection dilate_connection(const OperConnection& op, const Rat& a) {
  if (a == 0) throw InputError("dilation by zero");
  const LieBasis& lb = *op.lb;
  LoopElement v;
  v.lb = &lb;
  for (const auto& [idx, s] : op.v.comps) {
    long wt = lb.height_of(idx) + 1;
    v.add_term(idx, rat_pow(a, wt) * s.dilated(a));
  }
  return make_oper(lb, std::move(v));
}

}  // namespace operalg
