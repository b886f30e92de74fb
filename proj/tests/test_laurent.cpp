#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operalg/laurent.hpp"
#include "operalg/verify.hpp"

using namespace operalg;

namespace {

LaurentSeries random_series(SplitMix64& rng, int val_lo, int val_hi,
                            int precision) {
  int val = rng.range(val_lo, val_hi);
  std::vector<Rat> coeffs;
  for (int n = val; n < precision; ++n) coeffs.push_back(rng.small_rat(6, 4));
  return LaurentSeries::from_window(val, precision, std::move(coeffs));
}

}  // namespace

TEST_CASE("multiplication matches schoolbook convolution") {
  // (t^-1 + 1) * t = 1 + t.
  LaurentSeries a = LaurentSeries::polynomial(-1, {Rat(1), Rat(1)});
  LaurentSeries t = LaurentSeries::monomial(Rat(1), 1);
  LaurentSeries p = a * t;
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(-1) == 0);
  CHECK(p.coeff(2) == 0);

  // (1 + t) * (1 - t) = 1 - t^2.
  LaurentSeries q = LaurentSeries::polynomial(0, {Rat(1), Rat(1)}) *
                    LaurentSeries::polynomial(0, {Rat(1), Rat(-1)});
  CHECK(q.coeff(0) == 1);
  CHECK(q.coeff(1) == 0);
  CHECK(q.coeff(2) == -1);

  // Multiplying by an exact 1 is the identity on windows too.
  LaurentSeries w = LaurentSeries::from_window(-2, 3, {Rat(5), Rat(0), Rat(1), Rat(7), Rat(2, 3)});
  CHECK((LaurentSeries::constant(Rat(1)) * w).identical(w));
}

TEST_CASE("inverse") {
  LaurentSeries geom =
      LaurentSeries::polynomial(0, {Rat(1), Rat(-1)}).inverse_to(10);
  for (int n = 0; n < 10; ++n) CHECK(geom.coeff(n) == 1);

  CHECK(LaurentSeries::monomial(Rat(1), 1).inverse().coeff(-1) == 1);
  CHECK(LaurentSeries::constant(Rat(2)).inverse().coeff(0) == Rat(1, 2));

  // a * invert(a) = 1 within the tracked window.
  SplitMix64 rng(7);
  for (int it = 0; it < 25; ++it) {
    LaurentSeries a = random_series(rng, -3, 2, 6);
    if (a.coeff(a.valuation()) == 0) continue;
    LaurentSeries prod = a * a.inverse();
    CHECK(agrees(prod, LaurentSeries::constant(Rat(1))));
  }
  CHECK_THROWS_AS(LaurentSeries::zero(5).inverse(), InputError);
}

TEST_CASE("derivative") {
  CHECK(LaurentSeries::monomial(Rat(1), -1).derivative().coeff(-2) == -1);
  CHECK(LaurentSeries::constant(Rat(9)).derivative().is_zero());
  LaurentSeries c = LaurentSeries::monomial(Rat(1, 6), 3).derivative();
  CHECK(c.coeff(2) == Rat(1, 2));

  // Precision drops by one on finite windows.
  LaurentSeries w = LaurentSeries::from_window(0, 5, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
  CHECK(w.derivative().precision() == 4);

  // Leibniz rule on random pairs.
  SplitMix64 rng(11);
  for (int it = 0; it < 25; ++it) {
    LaurentSeries a = random_series(rng, -2, 2, 7);
    LaurentSeries b = random_series(rng, -2, 2, 7);
    LaurentSeries lhs = (a * b).derivative();
    LaurentSeries rhs = a.derivative() * b + a * b.derivative();
    CHECK(agrees(lhs, rhs));
  }
}

TEST_CASE("dilation is substitution t -> a t") {
  Rat a(3);
  CHECK(LaurentSeries::monomial(Rat(1), 2).dilated(a).coeff(2) == 9);
  LaurentSeries w = LaurentSeries::from_window(-1, 4, {Rat(2), Rat(3), Rat(5), Rat(7), Rat(11)});
  CHECK(w.dilated(Rat(1)).identical(w));
  CHECK(LaurentSeries::monomial(Rat(1), -1).dilated(Rat(2)).coeff(-1) ==
        Rat(1, 2));
  CHECK_THROWS_AS(w.dilated(Rat(0)), InputError);

  // Multiplicativity: (ab)(at) = a(at) * b(at).
  SplitMix64 rng(13);
  for (int it = 0; it < 20; ++it) {
    LaurentSeries x = random_series(rng, -2, 2, 6);
    LaurentSeries y = random_series(rng, -2, 2, 6);
    CHECK(agrees((x * y).dilated(Rat(5, 3)),
                 x.dilated(Rat(5, 3)) * y.dilated(Rat(5, 3))));
  }
}

TEST_CASE("residue coefficient") {
  CHECK(LaurentSeries::monomial(Rat(1), -1).residue() == 1);
  CHECK(LaurentSeries::polynomial(0, {Rat(1), Rat(1)}).residue() == 0);
  LaurentSeries s = LaurentSeries::polynomial(-2, {Rat(1), Rat(-3)});
  CHECK(s.residue() == -3);
}

TEST_CASE("ring axioms on random triples") {
  SplitMix64 rng(17);
  for (int it = 0; it < 40; ++it) {
    LaurentSeries a = random_series(rng, -2, 2, 6);
    LaurentSeries b = random_series(rng, -2, 2, 6);
    LaurentSeries c = random_series(rng, -2, 2, 6);
    CHECK(agrees((a + b) + c, a + (b + c)));
    CHECK(agrees(a + b, b + a));
    CHECK(agrees(a * b, b * a));
    CHECK(agrees((a * b) * c, a * (b * c)));
    CHECK(agrees(a * (b + c), a * b + a * c));
    CHECK(agrees(a - a, LaurentSeries::zero()));
  }
}

TEST_CASE("precision bookkeeping") {
  LaurentSeries w = LaurentSeries::from_window(-1, 3, {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK(!w.exact());
  CHECK(w.precision() == 3);
  CHECK_THROWS_AS(w.coeff(3), PrecisionError);
  CHECK(w.coeff(-5) == 0);

  // add: min precision; mul: min(prec_a + val_b, prec_b + val_a).
  LaurentSeries v = LaurentSeries::from_window(0, 8, std::vector<Rat>(8, Rat(1)));
  CHECK((w + v).precision() == 3);
  CHECK((w * v).precision() == 3);

  // Exact values never shrink windows.
  CHECK((LaurentSeries::constant(Rat(7)) * w).precision() == 3);
  CHECK((LaurentSeries::monomial(Rat(1), 2) * w).precision() == 5);

  CHECK(LaurentSeries::polynomial(0, {Rat(1)}).exact());
  CHECK_THROWS_AS(w.truncated(10), PrecisionError);
  CHECK(w.truncated(2).precision() == 2);
}

TEST_CASE("window agreement semantics") {
  LaurentSeries a = LaurentSeries::from_window(0, 3, {Rat(1), Rat(2), Rat(3)});
  LaurentSeries b = LaurentSeries::polynomial(0, {Rat(1), Rat(2), Rat(3), Rat(9)});
  CHECK(agrees(a, b));  // common window [0,3)
  LaurentSeries c = LaurentSeries::polynomial(0, {Rat(1), Rat(5)});
  CHECK(!agrees(a, c));
  CHECK(a.identical(a));
  CHECK(!a.identical(b));
}
