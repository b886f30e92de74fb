#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operalg/loop.hpp"
#include "operalg/verify.hpp"

using namespace operalg;

namespace {

// Bracket of two constant elements through the loop layer.
LieElement cbr(const LieBasis& lb, const LieElement& x, const LieElement& y) {
  LoopElement r =
      lie_bracket(LoopElement::from_constant(x), LoopElement::from_constant(y));
  LieElement out;
  out.lb = &lb;
  for (const auto& [idx, s] : r.comps) {
    Rat c = s.coeff(0);
    if (c != 0) out.comps[idx] = c;
  }
  return out;
}

LieElement unit(const LieBasis& lb, int idx) {
  LieElement x;
  x.lb = &lb;
  x.comps[idx] = Rat(1);
  return x;
}

}  // namespace

TEST_CASE("sl2 defining relations") {
  const LieBasis& lb = LieBasis::get("A1");
  LieElement e = unit(lb, lb.e_index(0));
  LieElement f = unit(lb, lb.f_index(0));
  LieElement h = unit(lb, lb.h_index(0));

  LieElement ef = cbr(lb, e, f);
  CHECK(ef.comps == h.comps);
  LieElement he = cbr(lb, h, e);
  CHECK(he.comps.at(lb.e_index(0)) == 2);
  LieElement hf = cbr(lb, h, f);
  CHECK(hf.comps.at(lb.f_index(0)) == -2);
}

TEST_CASE("sl3 root vector products close with consistent signs") {
  const LieBasis& lb = LieBasis::get("A2");
  const RootSystem& rs = lb.root_system();
  int r1 = rs.root_index({1, 0});
  int r2 = rs.root_index({0, 1});
  int r12 = rs.root_index({1, 1});
  LieElement b = cbr(lb, unit(lb, lb.e_index(r1)), unit(lb, lb.e_index(r2)));
  REQUIRE(b.comps.size() == 1);
  Rat c = b.comps.at(lb.e_index(r12));
  CHECK((c == 1 || c == -1));
}

TEST_CASE("full structure validation for every supported type") {
  for (const char* label : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3",
                            "D4", "G2"}) {
    const LieBasis& lb = LieBasis::get(label);
    CHECK_NOTHROW(lb.validate());
  }
}

TEST_CASE("G2 Serre relation needs four steps") {
  const LieBasis& lb = LieBasis::get("G2");
  const RootSystem& rs = lb.root_system();
  // Find the ordered simple pair (i, j) with <alpha_j, alpha_i_check> = -3.
  int i3 = -1, j3 = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (i != j && rs.cartan[static_cast<std::size_t>(j)]
                             [static_cast<std::size_t>(i)] == -3) {
        i3 = i;
        j3 = j;
      }
  REQUIRE(i3 >= 0);
  std::vector<int> ui(2, 0), uj(2, 0);
  ui[static_cast<std::size_t>(i3)] = 1;
  uj[static_cast<std::size_t>(j3)] = 1;
  LoopElement x = LoopElement::from_constant(unit(lb, lb.e_index(rs.root_index(ui))));
  LoopElement cur = LoopElement::from_constant(unit(lb, lb.e_index(rs.root_index(uj))));
  for (int s = 0; s < 3; ++s) {
    cur = lie_bracket(x, cur);
    CHECK(!cur.is_zero());  // (ad e_i)^k e_j != 0 for k <= 3
  }
  cur = lie_bracket(x, cur);
  CHECK(cur.is_zero());  // (ad e_i)^4 e_j = 0
}

TEST_CASE("exponential adjoint action") {
  const LieBasis& lb = LieBasis::get("A1");
  LoopElement e = LoopElement::from_constant(unit(lb, lb.e_index(0)));
  LoopElement f = LoopElement::from_constant(unit(lb, lb.f_index(0)));

  // exp(ad e) f = f + h - e.
  LoopElement r = exp_ad(e, f);
  CHECK(r.find(lb.f_index(0))->coeff(0) == 1);
  CHECK(r.find(lb.h_index(0))->coeff(0) == 1);
  CHECK(r.find(lb.e_index(0))->coeff(0) == -1);

  // exp(ad 0) = identity.
  LoopElement z = LoopElement::zero(lb);
  CHECK((exp_ad(z, f) - f).is_zero());

  // exp(ad x) exp(ad -x) = identity on random borel-valued y.
  SplitMix64 rng(23);
  const LieBasis& lb2 = LieBasis::get("A2");
  for (int it = 0; it < 10; ++it) {
    LoopElement x, y;
    x.lb = &lb2;
    y.lb = &lb2;
    for (int rdx = 0; rdx < lb2.num_pos(); ++rdx) {
      x.add_term(lb2.e_index(rdx),
                 LaurentSeries::monomial(rng.small_rat(4, 2), rng.range(-1, 2)));
      y.add_term(lb2.e_index(rdx),
                 LaurentSeries::monomial(rng.small_rat(4, 2), rng.range(-1, 2)));
      y.add_term(lb2.f_index(rdx),
                 LaurentSeries::monomial(rng.small_rat(4, 2), rng.range(-1, 2)));
    }
    for (int i = 0; i < lb2.rank(); ++i)
      y.add_term(lb2.h_index(i),
                 LaurentSeries::monomial(rng.small_rat(4, 2), rng.range(-1, 2)));
    LoopElement round = exp_ad(-x, exp_ad(x, y));
    CHECK((round - y).is_zero());
  }

  // Lowering or Cartan support in the exponent is rejected.
  CHECK_THROWS_AS(exp_ad(f, e), InputError);
}

TEST_CASE("gauge transformation of a connection coefficient") {
  const LieBasis& lb = LieBasis::get("A1");

  // A = 0, g = exp(x e): result is -x' e.
  LaurentSeries x = LaurentSeries::polynomial(0, {Rat(0), Rat(3), Rat(1)});
  LoopElement out = gauge_factor_apply(LoopElement::zero(lb), 0, x);
  const LaurentSeries* ce = out.find(lb.e_index(0));
  REQUIRE(ce != nullptr);
  CHECK(agrees(*ce, -x.derivative()));
  CHECK(out.find(lb.h_index(0)) == nullptr);

  // Empty gauge product is the identity.
  LoopElement a;
  a.lb = &lb;
  a.add_term(lb.h_index(0), LaurentSeries::monomial(Rat(5), -1));
  UnipotentGauge g0;
  g0.lb = &lb;
  CHECK((gauge_transform(a, g0) - a).is_zero());

  // The sl2 Miura shape: A = f + u h, g = exp(-u e) gives f + (u^2 + u') e.
  LaurentSeries u = LaurentSeries::from_window(
      -1, 6, {Rat(2), Rat(-1), Rat(1, 2), Rat(0), Rat(3), Rat(1), Rat(-2)});
  LoopElement A;
  A.lb = &lb;
  A.add_term(lb.f_index(0), LaurentSeries::constant(Rat(1)));
  A.add_term(lb.h_index(0), u);
  LoopElement res = gauge_factor_apply(A, 0, -u);
  CHECK(agrees(*res.find(lb.f_index(0)), LaurentSeries::constant(Rat(1))));
  const LaurentSeries* h = res.find(lb.h_index(0));
  CHECK((h == nullptr || h->is_zero()));
  CHECK(agrees(*res.find(lb.e_index(0)), u * u + u.derivative()));
}

TEST_CASE("cocharacter gauge") {
  const LieBasis& lb = LieBasis::get("A1");
  const RootSystem& rs = lb.root_system();

  // mu = rho_check on f: f shifts to f/t and rho_check/t is subtracted.
  LoopElement A;
  A.lb = &lb;
  A.add_term(lb.f_index(0), LaurentSeries::constant(Rat(1)));
  LoopElement out = gauge_by_cocharacter(A, rs.rho_check());
  CHECK(agrees(*out.find(lb.f_index(0)), LaurentSeries::monomial(Rat(1), -1)));
  // rho_check = (1/2) alpha_check in sl2, so the Cartan part is -(1/2)/t.
  CHECK(agrees(*out.find(lb.h_index(0)), LaurentSeries::monomial(Rat(-1, 2), -1)));

  // mu = 0 is the identity; mu then -mu round-trips.
  Coweight zero{{0}}, mu{{3}}, neg{{-3}};
  SplitMix64 rng(29);
  for (int it = 0; it < 5; ++it) {
    LoopElement y;
    y.lb = &lb;
    y.add_term(lb.e_index(0),
               LaurentSeries::monomial(rng.small_rat(4, 2), rng.range(-2, 2)));
    y.add_term(lb.f_index(0),
               LaurentSeries::monomial(rng.small_rat(4, 2), rng.range(-2, 2)));
    y.add_term(lb.h_index(0),
               LaurentSeries::monomial(rng.small_rat(4, 2), rng.range(-2, 2)));
    CHECK((gauge_by_cocharacter(y, zero) - y).is_zero());
    CHECK((gauge_by_cocharacter(gauge_by_cocharacter(y, mu), neg) - y).is_zero());
  }
}

TEST_CASE("principal nilpotent and slice data") {
  for (const char* label : {"A1", "A2", "B2", "G2", "D4"}) {
    const LieBasis& lb = LieBasis::get(label);
    // p+ centralizes nothing in the lowering direction of the slice: each
    // slice vector s_j satisfies [p+, s_j] = 0.
    LoopElement pplus;
    pplus.lb = &lb;
    for (int r = 0; r < lb.num_pos(); ++r) {
      Rat c = lb.pplus()[static_cast<std::size_t>(r)];
      if (c != 0) pplus.add_term(lb.e_index(r), LaurentSeries::constant(c));
    }
    for (std::size_t j = 0; j < lb.slice().size(); ++j) {
      LoopElement sj;
      sj.lb = &lb;
      for (int r = 0; r < lb.num_pos(); ++r) {
        Rat c = lb.slice()[j][static_cast<std::size_t>(r)];
        if (c != 0) sj.add_term(lb.e_index(r), LaurentSeries::constant(c));
      }
      CHECK(lie_bracket(pplus, sj).is_zero());
    }
    // One slice vector per exponent, graded by principal height.
    CHECK(lb.slice().size() == lb.root_system().exponents.size());
  }
}
