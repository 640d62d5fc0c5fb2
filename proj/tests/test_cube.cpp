#include "khoskein/cube.hpp"

#include "doctest.h"
#include "fixtures.hpp"

using namespace khoskein;

TEST_SUITE_BEGIN("cube");

TEST_CASE("graded dimension rules") {
  // V with deg(e) = 1, deg(x) = -1
  CHECK(qdim({{1, 1}, {-1, 1}}) == q_plus_qinv());
  // shift law: qdim(V{3}) = q^3 qdim(V)
  CHECK(qdim({{4, 1}, {2, 1}}) == LaurentPoly::q_pow(3) * q_plus_qinv());
  // product law: qdim(V (x) V) = qdim(V)^2
  CHECK(qdim({{2, 1}, {0, 2}, {-2, 1}}) == q_plus_qinv() * q_plus_qinv());
}

TEST_CASE("Hopf link chain column") {
  CubeComplex c = build_cube(parse_pd(fixtures::kHopfNeg));
  LaurentPoly expect;
  expect.add_term(Monomial{0, -6, 0}, Rat(1));
  expect.add_term(Monomial{0, -4, 0}, Rat(2));
  expect.add_term(Monomial{0, -2, 0}, Rat(1));
  CHECK(qdim_column(c, -2) == expect);
}

TEST_CASE("crossing-free unknot cube") {
  CubeComplex c = build_cube(parse_pd("U"));
  CHECK(c.slots().size() == 2);
  CHECK(qdim_column(c, 0) == q_plus_qinv());
  CHECK(euler_characteristic(c) == q_plus_qinv());
  for (auto s : c.slots()) CHECK(c.diff_block(s).is_zero());
}

TEST_CASE("differentials square to zero on the whole corpus") {
  for (const auto& [name, d] : fixtures::corpus()) {
    CubeComplex c = build_cube(d);
    for (auto s : c.slots()) {
      CAPTURE(name);
      CHECK((c.diff_block(SlotKey{s.i + 1, s.j}) * c.diff_block(s)).is_zero());
    }
  }
}

TEST_CASE("euler characteristic equals the bracket state-sum oracle") {
  for (const auto& [name, d] : fixtures::corpus()) {
    CAPTURE(name);
    CHECK(euler_characteristic(build_cube(d)) == fixtures::bracket_oracle(d));
  }
}

TEST_CASE("known euler characteristics") {
  LaurentPoly hopf = euler_characteristic(build_cube(parse_pd(fixtures::kHopfNeg)));
  LaurentPoly expect;
  expect.add_term(Monomial{0, -6, 0}, Rat(1));
  expect.add_term(Monomial{0, -4, 0}, Rat(1));
  expect.add_term(Monomial{0, -2, 0}, Rat(1));
  expect.add_term(Monomial{0, 0, 0}, Rat(1));
  CHECK(hopf == expect);
  CHECK(euler_characteristic(build_cube(parse_pd("U;U"))) == q_plus_qinv() * q_plus_qinv());
}

TEST_CASE("every basis vector satisfies the bigrading formulas") {
  for (const auto& [name, d] : fixtures::corpus()) {
    if (d.n_crossings() > 5) continue;
    CubeComplex c = build_cube(d);
    for (const auto& [s, basis] : c.groups)
      for (const BasisVector& v : basis) {
        int r = 0;
        for (int p = 0; p < c.n; ++p) r += (v.res >> p) & 1;
        CAPTURE(name);
        CHECK(s.i == r - c.n_minus);
        CHECK(s.j == c.word_degree(v.res, v.word) + r + c.n_plus - 2 * c.n_minus);
      }
  }
}

TEST_CASE("cube of a disjoint union convolves slot dimensions") {
  LinkDiagram a = parse_pd(fixtures::kKinkPos);
  LinkDiagram b = parse_pd(fixtures::kHopfNeg);
  CubeComplex ca = build_cube(a), cb = build_cube(b);
  CubeComplex cu = build_cube(disjoint_union(a, b));
  std::map<SlotKey, int> expect;
  for (const auto& [sa, ba] : ca.groups)
    for (const auto& [sb, bb] : cb.groups)
      expect[SlotKey{sa.i + sb.i, sa.j + sb.j}] +=
          static_cast<int>(ba.size() * bb.size());
  std::map<SlotKey, int> got;
  for (const auto& [s, basis] : cu.groups) got[s] = static_cast<int>(basis.size());
  CHECK(got == expect);
}

TEST_CASE("crossing cap") {
  CHECK_THROWS_AS(build_cube(parse_pd(fixtures::kHopfNeg), 1), CubeTooLarge);
}

TEST_CASE("environment variable overrides the default cap") {
  CHECK(default_cube_cap() == 20);
  setenv("KHOSKEIN_MAX_CROSSINGS", "2", 1);
  CHECK(default_cube_cap() == 2);
  CHECK_THROWS_AS(build_cube(parse_pd(fixtures::kTrefoilLeft)), CubeTooLarge);
  CHECK_NOTHROW(build_cube(parse_pd(fixtures::kHopfNeg)));
  unsetenv("KHOSKEIN_MAX_CROSSINGS");
  CHECK(default_cube_cap() == 20);
}

TEST_CASE("debug dump lists bases and differentials") {
  std::string dump = dump_cube(build_cube(parse_pd(fixtures::kKinkPos)));
  CHECK(dump.find("C(0,") != std::string::npos);
  CHECK(dump.find(":") != std::string::npos);
}

TEST_SUITE_END();
