#include "khoskein/laurent.hpp"

#include <random>

#include "doctest.h"
#include "khoskein/errors.hpp"
#include "khoskein/json_io.hpp"

using namespace khoskein;

TEST_SUITE_BEGIN("laurent");

TEST_CASE("basic arithmetic and printing") {
  LaurentPoly p = LaurentPoly::q_pow(1) * Rat(2) + LaurentPoly::q_pow(-1) * Rat(2);
  CHECK(p.to_string() == "2*q^-1 + 2*q");
  CHECK((p - p).is_zero_poly());
  CHECK((p * LaurentPoly::zero()).is_zero_poly());
  CHECK(LaurentPoly::zero().to_string() == "0");

  LaurentPoly m = LaurentPoly(Rat(-1), Monomial{-2, -5, 0});
  CHECK(m.to_string() == "-t^-2*q^-5");
  CHECK((LaurentPoly::one() * Rat(3)).to_string() == "3");
  CHECK(LaurentPoly(rat(1, 2), Monomial{1, 0, 1}).to_string() == "1/2*t*d");
}

TEST_CASE("terms iterate in (t, q) ascending order") {
  LaurentPoly p;
  p.add_term(Monomial{1, -1, 0}, Rat(1));
  p.add_term(Monomial{-1, 5, 0}, Rat(1));
  p.add_term(Monomial{1, 2, 0}, Rat(1));
  std::vector<Monomial> order;
  for (const auto& [m, c] : p.terms()) order.push_back(m);
  CHECK(order[0] == Monomial{-1, 5, 0});
  CHECK(order[1] == Monomial{1, -1, 0});
  CHECK(order[2] == Monomial{1, 2, 0});
}

TEST_CASE("monomial units invert, other polynomials do not") {
  LaurentPoly y = LaurentPoly::t_pow(1) * LaurentPoly::q_pow(2);
  CHECK(y.is_monomial());
  CHECK((y * y.inverse()) == LaurentPoly::one());
  CHECK((y.pow(-3) * y.pow(3)) == LaurentPoly::one());
  CHECK_THROWS_AS(q_plus_qinv().inverse(), NotDivisible);
}

TEST_CASE("substitutions") {
  LaurentPoly p = LaurentPoly::t_pow(2) * LaurentPoly::q_pow(1) + LaurentPoly::t_pow(1);
  CHECK(p.substitute_t_minus_one() == (LaurentPoly::q_pow(1) - LaurentPoly::one()));
  CHECK(p.substitute_t_with_q_pow(2) ==
        (LaurentPoly::q_pow(5) + LaurentPoly::q_pow(2)));
  LaurentPoly dp = LaurentPoly::d_pow(2) + LaurentPoly::d_pow(-1);
  CHECK(dp.substitute_d_value(2) == (LaurentPoly(Rat(4)) + LaurentPoly(rat(1, 2))));
}

TEST_CASE("exact division") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp(-4, 4), coeff(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly f;
    for (int i = 0; i < 6; ++i)
      f.add_term(Monomial{exp(rng), exp(rng), 0}, Rat(coeff(rng)));
    LaurentPoly product = f * q_plus_qinv();
    if (product.is_zero_poly()) continue;
    CHECK(product.divide_exact(q_plus_qinv()) == f);
  }
  CHECK_THROWS_AS(LaurentPoly::one().divide_exact(q_plus_qinv()), NotDivisible);
  CHECK(LaurentPoly::q_pow(3).divide_exact(LaurentPoly::q_pow(5)) == LaurentPoly::q_pow(-2));
  CHECK_THROWS_AS(LaurentPoly::one().divide_exact(LaurentPoly::zero()), NotDivisible);
  CHECK_THROWS_AS(q_plus_qinv().pow(-1), NotDivisible);
}

TEST_CASE("json round trip is exact") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> exp(-6, 6), num(-9, 9), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly p;
    for (int i = 0; i < 8; ++i)
      p.add_term(Monomial{exp(rng), exp(rng), exp(rng)}, rat(num(rng), den(rng)));
    CHECK(poly_from_json(poly_to_json(p)) == p);
  }
}

TEST_SUITE_END();
