#include "operalg/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace operalg {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int SplitMix64::range(int lo, int hi) {
  if (hi < lo) throw InputError("empty random range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  return lo + static_cast<int>(next() % span);
}

Rat SplitMix64::small_rat(int num_bound, int den_bound) {
  Rat r(range(-num_bound, num_bound), range(1, den_bound));
  r.canonicalize();
  return r;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

bool CheckGroup::pass() const {
  for (const CaseResult& c : cases)
    if (!c.pass) return false;
  return true;
}

int RunReport::passed() const {
  int n = 0;
  for (const CheckGroup& g : groups)
    for (const CaseResult& c : g.cases)
      if (c.pass) ++n;
  return n;
}

int RunReport::failed() const {
  int n = 0;
  for (const CheckGroup& g : groups)
    for (const CaseResult& c : g.cases)
      if (!c.pass) ++n;
  return n;
}

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "]";
  return os.str();
}

std::vector<std::string> pick_types(const VerifyOptions& opt,
                                    std::initializer_list<const char*> defs) {
  std::vector<std::string> out;
  for (const char* d : defs) {
    if (opt.types.empty() ||
        std::find(opt.types.begin(), opt.types.end(), d) != opt.types.end())
      out.push_back(d);
  }
  return out;
}

LaurentSeries random_series(SplitMix64& rng, int val_lo, int val_hi,
                            int precision, int zero_pct = 25) {
  int val = rng.range(val_lo, val_hi);
  std::vector<Rat> w;
  for (int n = val; n < precision; ++n) {
    if (rng.range(0, 99) < zero_pct)
      w.push_back(Rat(0));
    else
      w.push_back(rng.small_rat());
  }
  return LaurentSeries::from_window(val, precision, std::move(w));
}

// Independent check of the rank-one Miura normal form with literal 2x2
// matrices of series: gauge d/dt + [[u,0],[1,-u]] by I + x E01 with x = -u
// and read off the upper-right entry.
LaurentSeries sl2_matrix_oracle(const LaurentSeries& u, std::string* err) {
  using Mat2 = std::array<std::array<LaurentSeries, 2>, 2>;
  auto mul = [](const Mat2& a, const Mat2& b) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
  };
  LaurentSeries one = LaurentSeries::constant(Rat(1));
  LaurentSeries zero;
  LaurentSeries x = -u;
  Mat2 conn{{{u, zero}, {one, -u}}};
  Mat2 g{{{one, x}, {zero, one}}};
  Mat2 ginv{{{one, -x}, {zero, one}}};
  Mat2 res = mul(mul(g, conn), ginv);
  // subtract g' g^{-1} = x' E01
  res[0][1] -= x.derivative();
  if (!agrees(res[0][0], zero) || !agrees(res[1][1], zero) ||
      !agrees(res[1][0], one)) {
    if (err) *err = "oracle gauge did not normalize the matrix";
  }
  return res[0][1];
}

struct Ctx {
  const VerifyOptions& opt;
  RunReport& report;
};

CheckGroup& new_group(Ctx& ctx, const std::string& name,
                      const std::string& summary) {
  ctx.report.groups.push_back(CheckGroup{name, summary, {}});
  return ctx.report.groups.back();
}

void add_case(CheckGroup& g, const std::string& key, bool pass,
              const std::string& detail = "") {
  g.cases.push_back(CaseResult{key, pass, pass ? "" : detail});
}

std::vector<Weight> lambda_grid(const VerifyOptions& opt, const RootSystem& rs) {
  if (opt.lambda) {
    if (static_cast<int>(opt.lambda->size()) != rs.rank) return {};
    Weight w{*opt.lambda};
    if (!is_dominant(w)) throw InputError("requested weight is not dominant");
    return {w};
  }
  return dominant_weights_up_to(rs, opt.lambda_max);
}

void group_char_identity(Ctx& ctx) {
  CheckGroup& g = new_group(
      ctx, "char-identity",
      "graded character identity: q_dim * free-part == stratum character");
  for (const std::string& t : pick_types(ctx.opt, {"A1", "A2", "B2", "C2", "G2"})) {
    const RootSystem& rs = build_root_system(t);
    for (const Weight& lam : lambda_grid(ctx.opt, rs)) {
      auto diff = character_identity_first_diff(rs, lam, ctx.opt.order);
      add_case(g, t + " lambda=" + vec_str(lam.coords), !diff,
               diff ? "first divergence at q^" + std::to_string(*diff) : "");
    }
  }
}

void group_char_quotient(Ctx& ctx) {
  CheckGroup& g = new_group(
      ctx, "char-quotient",
      "quotient character equals the direct product formula");
  for (const std::string& t : pick_types(ctx.opt, {"A1", "A2", "B2", "C2", "G2"})) {
    const RootSystem& rs = build_root_system(t);
    for (const Weight& lam : lambda_grid(ctx.opt, rs)) {
      auto diff = quotient_identity_first_diff(rs, lam, ctx.opt.order);
      add_case(g, t + " lambda=" + vec_str(lam.coords), !diff,
               diff ? "first divergence at q^" + std::to_string(*diff) : "");
    }
  }
}

void group_exponent_identity(Ctx& ctx) {
  CheckGroup& g = new_group(
      ctx, "exponent-product",
      "coroot-height product equals the exponent product");
  for (const std::string& t : pick_types(
           ctx.opt,
           {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2"})) {
    const RootSystem& rs = build_root_system(t);
    add_case(g, t, exponent_identity_check(rs), "polynomials differ");
  }
}

void group_miura_closed_form(Ctx& ctx) {
  CheckGroup& g = new_group(
      ctx, "miura-closed-form",
      "rank-one Miura image matches u^2 + u' and the 2x2 matrix oracle");
  auto types = pick_types(ctx.opt, {"A1"});
  if (types.empty()) return;
  SplitMix64 rng(ctx.opt.seed * 0x9E37u + 11);
  for (int i = 0; i < 20; ++i) {
    LaurentSeries u = random_series(rng, -1, 0, ctx.opt.precision);
    CartanConnection conn = make_cartan_connection("A1", {u});
    CanonicalOper can = miura_transform(conn);
    LaurentSeries closed = u * u + u.derivative();
    std::string err;
    LaurentSeries oracle = sl2_matrix_oracle(u, &err);
    bool ok = err.empty() && agrees(can.coords[0], closed) &&
              agrees(can.coords[0], oracle);
    add_case(g, "case " + std::to_string(i), ok,
             err.empty() ? "got " + can.coords[0].str() + ", closed form " +
                               closed.str()
                         : err);
  }
}

void group_miura_membership(Ctx& ctx) {
  CheckGroup& g = new_group(
      ctx, "miura-membership",
      "connections with residue -lambda map into the monodromy-free family; "
      "half-integral residues never do");
  SplitMix64 rng(ctx.opt.seed * 0x51ABu + 23);
  for (const std::string& t : pick_types(ctx.opt, {"A1", "A2"})) {
    const LieBasis& lb = LieBasis::get(t);
    const RootSystem& rs = lb.root_system();
    for (int i = 0; i < 25; ++i) {
      Coweight lam;
      for (int k = 0; k < rs.rank; ++k) lam.coords.push_back(rng.range(0, 3));
      RatVec fund(lam.coords.begin(), lam.coords.end());
      RatVec c = coweight_to_coroot_coords(rs, fund);
      std::vector<LaurentSeries> u;
      for (int k = 0; k < rs.rank; ++k) {
        LaurentSeries reg = random_series(rng, 0, 1, ctx.opt.precision);
        u.push_back(reg + LaurentSeries::monomial(-c[static_cast<std::size_t>(k)], -1));
      }
      bool ok = false;
      std::string detail;
      try {
        ok = check_miura_image(make_cartan_connection(t, std::move(u)), lam);
        if (!ok) detail = "image not in the family";
      } catch (const std::exception& e) {
        detail = e.what();
      }
      add_case(g, t + " lambda=" + vec_str(lam.coords) + " case " +
                      std::to_string(i),
               ok, detail);
    }
  }
  // Negative control: residue 1/2 on the rank-one type must fail membership
  // for every dominant coweight within the bound.
  if (!pick_types(ctx.opt, {"A1"}).empty()) {
    const RootSystem& rs = build_root_system("A1");
    for (int i = 0; i < 10; ++i) {
      LaurentSeries reg = random_series(rng, 0, 1, ctx.opt.precision);
      std::vector<LaurentSeries> u{reg +
                                   LaurentSeries::monomial(Rat(1, 2), -1)};
      CartanConnection conn = make_cartan_connection("A1", std::move(u));
      OperConnection as_oper = embed_canonical(miura_transform(conn));
      bool all_rejected = true;
      std::string detail;
      for (const Coweight& lam :
           dominant_coweights_up_to(rs, ctx.opt.bound)) {
        MembershipResult res = to_lambda_nilpotent(as_oper, lam);
        if (res.member()) {
          all_rejected = false;
          detail = "unexpected member of lambda=" + vec_str(lam.coords);
          break;
        }
      }
      add_case(g, "A1 half-integral residue case " + std::to_string(i),
               all_rejected, detail);
    }
  }
}

void group_classification(Ctx& ctx) {
  CheckGroup& g = new_group(
      ctx, "classify-recovery",
      "classification recovers the coweight of seeded Miura images uniquely");
  if (pick_types(ctx.opt, {"A1"}).empty()) return;
  const RootSystem& rs = build_root_system("A1");
  SplitMix64 rng(ctx.opt.seed * 0xC0FFull + 37);
  for (int i = 0; i < 30; ++i) {
    Coweight lam{std::vector<int>{rng.range(0, ctx.opt.bound)}};
    RatVec fund(lam.coords.begin(), lam.coords.end());
    RatVec c = coweight_to_coroot_coords(rs, fund);
    LaurentSeries reg = random_series(rng, 0, 1, ctx.opt.precision);
    std::vector<LaurentSeries> u{reg + LaurentSeries::monomial(-c[0], -1)};
    CanonicalOper can = miura_transform(make_cartan_connection("A1", std::move(u)));
    std::optional<Coweight> got = classify_monodromy_free(can, ctx.opt.bound);
    bool ok = got && got->coords == lam.coords;
    add_case(g, "case " + std::to_string(i) + " lambda=" + vec_str(lam.coords),
             ok,
             got ? "recovered " + vec_str(got->coords) : "no family found");
  }
}

void group_gauge_invariance(Ctx& ctx) {
  CheckGroup& g = new_group(
      ctx, "gauge-invariance",
      "canonical forms agree exactly across seeded regular gauges");
  SplitMix64 rng(ctx.opt.seed * 0xAB1Eu + 41);
  const int trunc = 12;
  for (const std::string& t : pick_types(ctx.opt, {"A1", "A2"})) {
    const LieBasis& lb = LieBasis::get(t);
    for (int i = 0; i < 50; ++i) {
      LoopElement v;
      v.lb = &lb;
      for (int r = 0; r < lb.num_pos(); ++r)
        if (rng.range(0, 1) == 0)
          v.add_term(lb.e_index(r), random_series(rng, -2, 0, trunc));
      for (int k = 0; k < lb.rank(); ++k)
        if (rng.range(0, 1) == 0)
          v.add_term(lb.h_index(k), random_series(rng, -2, 0, trunc));
      OperConnection op = make_oper(lb, v);
      UnipotentGauge gauge;
      gauge.lb = &lb;
      for (int r = 0; r < lb.num_pos(); ++r) {
        if (rng.range(0, 2) == 0) continue;
        int deg = rng.range(0, 3);
        std::vector<Rat> coeffs;
        for (int d = 0; d <= deg; ++d) coeffs.push_back(rng.small_rat(4, 2));
        gauge.factors.push_back(
            {r, LaurentSeries::polynomial(0, std::move(coeffs))});
      }
      CanonicalOper a = reduce_to_canonical(op);
      CanonicalOper b = reduce_to_canonical(oper_gauge(op, gauge));
      bool ok = true;
      std::string detail;
      for (std::size_t j = 0; j < a.coords.size(); ++j) {
        int common = std::min(a.coords[j].precision(), b.coords[j].precision());
        if (common < 4) {
          ok = false;
          detail = "common window too small at coordinate " + std::to_string(j);
          break;
        }
        if (!agrees(a.coords[j], b.coords[j])) {
          ok = false;
          detail = "coordinate " + std::to_string(j) + ": " +
                   a.coords[j].str() + " vs " + b.coords[j].str();
          break;
        }
      }
      add_case(g, t + " case " + std::to_string(i), ok, detail);
    }
  }
}

void group_dilation(Ctx& ctx) {
  CheckGroup& g = new_group(
      ctx, "dilation-equivariance",
      "reduction commutes with dilation, coordinate j scaling by a^{d_j+1}");
  SplitMix64 rng(ctx.opt.seed * 0xD11Au + 53);
  for (const std::string& t : pick_types(ctx.opt, {"A1", "A2"})) {
    const LieBasis& lb = LieBasis::get(t);
    for (int i = 0; i < 30; ++i) {
      LoopElement v;
      v.lb = &lb;
      for (int r = 0; r < lb.num_pos(); ++r)
        if (rng.range(0, 1) == 0)
          v.add_term(lb.e_index(r), random_series(rng, -2, 0, 10));
      for (int k = 0; k < lb.rank(); ++k)
        if (rng.range(0, 1) == 0)
          v.add_term(lb.h_index(k), random_series(rng, -2, 0, 10));
      OperConnection op = make_oper(lb, v);
      Rat a;
      do {
        a = rng.small_rat(3, 3);
      } while (a == 0);
      CanonicalOper lhs = dilate_oper(reduce_to_canonical(op), a);
      CanonicalOper rhs = reduce_to_canonical(dilate_connection(op, a));
      bool ok = true;
      std::string detail;
      for (std::size_t j = 0; j < lhs.coords.size(); ++j)
        if (!agrees(lhs.coords[j], rhs.coords[j])) {
          ok = false;
          detail = "coordinate " + std::to_string(j) + ": " +
                   lhs.coords[j].str() + " vs " + rhs.coords[j].str();
          break;
        }
      add_case(g, t + " case " + std::to_string(i) + " a=" + format_rational(a),
               ok, detail);
    }
  }
}

void group_structural(Ctx& ctx) {
  CheckGroup& g = new_group(
      ctx, "structural",
      "structure constants, gradings and dualities validate for every type");
  for (const std::string& t : pick_types(
           ctx.opt,
           {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2"})) {
    bool ok = true;
    std::string detail;
    try {
      const LieBasis& lb = LieBasis::get(t);
      lb.validate();
      const RootSystem& rs = lb.root_system();
      RootSystem dual = langlands_dual(rs);
      for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
          if (dual.cartan[i][j] != rs.cartan[j][i])
            throw InputError("dual Cartan matrix is not the transpose");
      RootSystem back = langlands_dual(dual);
      if (back.cartan != rs.cartan || back.label != rs.label)
        throw InputError("duality is not an involution");
      if (dual.exponents != rs.exponents)
        throw InputError("dual exponents differ");
      Coweight rc = rs.rho_check();
      for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> unit(static_cast<std::size_t>(rs.rank), 0);
        unit[static_cast<std::size_t>(i)] = 1;
        if (pair_root_coweight(unit, rc) != 1)
          throw InputError("a simple root does not pair to 1 with rho-check");
      }
      static const std::map<std::string, int> kPosCounts = {
          {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4},
          {"B3", 9}, {"C2", 4}, {"C3", 9}, {"D4", 12}, {"G2", 6}};
      if (rs.num_pos_roots() != kPosCounts.at(t))
        throw InputError("positive-root count is off");
      if (rs.num_pos_roots() * 2 != rs.rank * rs.coxeter_number())
        throw InputError("root count disagrees with the Coxeter number");
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    add_case(g, t, ok, detail);
  }
}

}  // namespace

RunReport run_verify(const VerifyOptions& opt) {
  RunReport report;
  report.command = "verify";
  report.seed = opt.seed;
  Json options;
  options["types"] = opt.types;
  options["lambda_max"] = opt.lambda_max;
  options["order"] = opt.order;
  options["precision"] = opt.precision;
  options["bound"] = opt.bound;
  options["seed"] = opt.seed;
  if (opt.lambda)
    options["lambda"] = *opt.lambda;
  else
    options["lambda"] = nullptr;
  report.options = options;
  report.digest = fnv1a_hex(options.dump());

  Ctx ctx{opt, report};
  group_char_identity(ctx);
  group_char_quotient(ctx);
  group_exponent_identity(ctx);
  group_miura_closed_form(ctx);
  group_miura_membership(ctx);
  group_classification(ctx);
  group_gauge_invariance(ctx);
  group_dilation(ctx);
  group_structural(ctx);
  return report;
}

Json report_to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["digest"] = r.digest;
  j["options"] = r.options;
  Json groups = Json::array();
  for (const CheckGroup& g : r.groups) {
    Json jg;
    jg["name"] = g.name;
    jg["summary"] = g.summary;
    jg["pass"] = g.pass();
    Json cases = Json::array();
    for (const CaseResult& c : g.cases) {
      Json jc;
      jc["key"] = c.key;
      jc["pass"] = c.pass;
      jc["detail"] = c.detail;
      cases.push_back(jc);
    }
    jg["cases"] = cases;
    groups.push_back(jg);
  }
  j["groups"] = groups;
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  j["status"] = r.ok() ? "pass" : "fail";
  return j;
}

}  // namespace operalg
