#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dexter/poly.hpp"

using namespace dexter;

namespace {

const IntPoly T = IntPoly::variable(Var::t);
const IntPoly S = IntPoly::variable(Var::s);
const IntPoly X = IntPoly::variable(Var::x);

}  // namespace

TEST_CASE("arithmetic basics") {
  IntPoly p = (S + 1) * (S - 1);
  CHECK(p == S * S - 1);
  CHECK(p.degree(Var::s) == 2);
  CHECK((p - p).is_zero());
  CHECK(p.coeff_of(Var::s, 2) == IntPoly(1));
  CHECK(p.substitute(Var::s, IntPoly(3)) == IntPoly(8));
  CHECK((T * S + T).truncate(Var::t, 0).is_zero());
  CHECK(IntPoly(0).str() == "0");
  CHECK((2 * S * S * T - T + 1).str() == "2*t*s^2 - t + 1");
}

TEST_CASE("exact division") {
  IntPoly p = (S - 1) * (S * S + 7 * S + 3) * (T + 2);
  CHECK(p.div_exact(S - 1) == (S * S + 7 * S + 3) * (T + 2));
  CHECK_THROWS_AS((p + 1).div_exact(S - 1), division_not_exact);
  CHECK_THROWS_AS(IntPoly(3).div_exact(IntPoly(2)), division_not_exact);
  CHECK(IntPoly(6).div_exact(IntPoly(3)) == IntPoly(2));
}

TEST_CASE("series tables") {
  // geometric series: (1 - t)^{-1}
  SeriesTable one_minus_t(6);
  one_minus_t.coeff(0) = 1;
  one_minus_t.coeff(1) = -1;
  SeriesTable inv = one_minus_t.inverse();
  for (int n = 0; n <= 6; ++n) CHECK(inv.coeff(n) == IntPoly(1));
  CHECK((one_minus_t * inv).coeff(0) == IntPoly(1));
  for (int n = 1; n <= 6; ++n) CHECK((one_minus_t * inv).coeff(n).is_zero());
  SeriesTable round = SeriesTable::from_poly(inv.to_poly(), 6);
  CHECK(round == inv);
}

TEST_CASE("lagrange interpolation") {
  // k(k+1)/2 through four points
  std::vector<std::pair<BigRat, BigRat>> pts;
  for (int k = 1; k <= 4; ++k) pts.emplace_back(k, k * (k + 1) / 2);
  RatPoly p = lagrange_interpolate(pts);
  CHECK(p.degree() == 2);
  CHECK(p.eval(10) == BigRat(55));
  CHECK(p.eval(-1) == BigRat(0));
  CHECK(p.eval(BigRat(1, 2)) == BigRat(3, 8));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == X - 1);
  CHECK(cyclotomic(2) == X + 1);
  CHECK(cyclotomic(3) == X * X + X + 1);
  CHECK(cyclotomic(6) == X * X - X + 1);
  // A squarefree product of x^d - 1 style identities.
  IntPoly xd = IntPoly::variable(Var::x, 12) - 1;
  IntPoly product = 1;
  for (int e : {1, 2, 3, 4, 6, 12}) product *= cyclotomic(e);
  CHECK(product == xd);
  // Phi_105 is the first with a coefficient of magnitude 2.
  auto coeffs = cyclotomic(105).univariate_coeffs();
  CHECK(*std::min_element(coeffs.begin(), coeffs.end()) == -2);
}

TEST_CASE("cyclotomic factorization") {
  CycloFactorization f = cyclotomic_factor(X + 1);
  CHECK(f.factors == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(f.remainder == IntPoly(1));
  CHECK(f.str() == "Phi_2");

  f = cyclotomic_factor(X * X - 1);
  CHECK(f.factors == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});

  IntPoly p = cyclotomic(1).pow(2) * cyclotomic(2) * cyclotomic(3) *
              cyclotomic(5);
  f = cyclotomic_factor(p);
  CHECK(f.factors ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {3, 1}, {5, 1}});
  CHECK(f.remainder == IntPoly(1));
  CHECK(f.str() == "Phi_1^2 * Phi_2 * Phi_3 * Phi_5");

  // Reassembles to the input, including a non-cyclotomic remainder.
  IntPoly q = p * (X * X - 3);
  f = cyclotomic_factor(q);
  IntPoly back = f.remainder;
  for (auto [d, mult] : f.factors) back *= cyclotomic(d).pow(mult);
  CHECK(back == q);
  CHECK(f.remainder == X * X - 3);
}
