#include "khoskein/spectral.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "khoskein/skein.hpp"

using namespace khoskein;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<Monomial, long>> terms) {
  LaurentPoly p;
  for (const auto& [m, c] : terms) p.add_term(m, Rat(c));
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("triple construction for the Hopf link") {
  SkeinTriple t = build_triple(parse_pd(fixtures::kHopfNeg), 0);
  CHECK(t.dminus.n_minus() == 2);
  CHECK(t.dplus.n_minus() == 1);
  CHECK(t.dplus.n_components() == 2);
  // D+ is a two-component unlink; D0+ reduces to the unknot.
  CHECK(khovanov_of(t.dplus) == q_plus_qinv() * q_plus_qinv());
  CHECK(khovanov_of(t.d0plus) == q_plus_qinv());
  CHECK(t.cplus == t.cminus + 1);
  CHECK_THROWS_AS(build_triple(parse_pd(fixtures::kHopfNeg), 7), IndexOutOfRange);
}

TEST_CASE("triple construction for the left trefoil") {
  SkeinTriple t = build_triple(parse_pd(fixtures::kTrefoilLeft), 0);
  // D+ is the unknot and D0+ is the Hopf link.
  CHECK(khovanov_of(t.dplus) == q_plus_qinv());
  CHECK(khovanov_of(t.d0plus) ==
        poly({{{-2, -6}, 1}, {{-2, -4}, 1}, {{0, -2}, 1}, {{0, 0}, 1}}));
}

TEST_CASE("c+ = c- + 1 at every corpus crossing") {
  for (const auto& [name, d] : fixtures::corpus())
    for (int p = 0; p < d.n_crossings(); ++p) {
      SkeinTriple t = build_triple(d, p);
      CAPTURE(name);
      CHECK(t.cplus == t.cminus + 1);
    }
}

TEST_CASE("four-term sequence is exact and psi2 o phi vanishes") {
  // build_chain_maps validates injectivity/surjectivity/exactness per slot
  // internally; this exercises it and checks the composites explicitly.
  for (const char* pd : {fixtures::kHopfNeg, fixtures::kTrefoilLeft}) {
    SkeinTriple t = build_triple(parse_pd(pd), 0);
    FourTermSequence f = build_chain_maps(t);
    for (const auto& [s, m] : f.phi) {
      RatMatrix comp = f.psi2_block(s + f.off_phi) * m;
      CHECK(comp.is_zero());
    }
    for (const auto& [s, m] : f.psi1) {
      RatMatrix comp = f.phi_block(s + f.off_psi1) * m;
      CHECK(comp.is_zero());
    }
  }
}

TEST_CASE("Hopf link: the E1 rows are exact and the defect vanishes") {
  SkeinAnalysis a = analyze_crossing(parse_pd(fixtures::kHopfNeg), 0);
  CHECK(a.report.kh_e2_top.is_zero_poly());
  CHECK(a.report.kh_e2_bot.is_zero_poly());
  CHECK(a.report.kh_e2_plus.is_zero_poly());
  CHECK(a.report.kh_e2_minus.is_zero_poly());
  CHECK(a.report.defect_c.is_zero_poly());
  CHECK(a.report.lhs.is_zero_poly());
}

TEST_CASE("left trefoil: E2, E3 and the defect match the reference values") {
  SkeinAnalysis a = analyze_crossing(parse_pd(fixtures::kTrefoilLeft), 0);
  CHECK(a.report.kh_e2_top == poly({{{-2, -6}, 1}}));
  CHECK(a.report.kh_e2_bot == poly({{{-2, -6}, 1}, {{-2, -4}, 1}}));
  // E_3^{-2,-6}(bottom copy) dies, E_3^{-2,-4} survives,
  // E_3^{-2,-6}(top copy) survives.
  CHECK(a.report.kh_e3_bot == poly({{{-2, -4}, 1}}));
  CHECK(a.report.kh_e3_top == poly({{{-2, -6}, 1}}));
  CHECK(a.pages.e3_dim(a.pages.bot, SlotKey{-2, -6}) == 0);
  CHECK(a.pages.e3_dim(a.pages.bot, SlotKey{-2, -4}) == 1);
  CHECK(a.pages.e3_dim(a.pages.top, SlotKey{-2, -6}) == 1);

  // C = (t+1)(t q^2 - 1 - q^2) / (t^2 q^5), expanded.
  LaurentPoly expected =
      poly({{{0, -3}, 1}, {{-1, -5}, -1}, {{-2, -5}, -1}, {{-2, -3}, -1}});
  CHECK(a.report.defect_c == expected);
  CHECK(a.report.lhs == expected);
}

TEST_CASE("generalized skein relation holds at every corpus crossing") {
  for (const auto& [name, d] : fixtures::corpus()) {
    if (d.n_crossings() > 5) continue;  // larger diagrams run in the acceptance suite
    for (int p = 0; p < d.n_crossings(); ++p) {
      CAPTURE(name);
      CAPTURE(p);
      CHECK_NOTHROW(analyze_crossing(d, p));
    }
  }
}

TEST_CASE("defect vanishes at t = -1 and the Jones skein relation drops out") {
  for (const auto& [name, d] : fixtures::corpus()) {
    if (d.n_crossings() > 4) continue;
    for (int p = 0; p < d.n_crossings(); ++p) {
      SkeinAnalysis a = analyze_crossing(d, p);
      CAPTURE(name);
      CHECK(a.report.defect_c.substitute_t_minus_one().is_zero_poly());
      // q^-2 Jhat(D+) - q^2 Jhat(D-) = (q^-1 - q) Jhat(D0+), with Jhat from
      // the independent bracket oracle.
      LaurentPoly jp = fixtures::bracket_oracle(a.triple.dplus);
      LaurentPoly jm = fixtures::bracket_oracle(a.triple.dminus);
      LaurentPoly j0 = fixtures::bracket_oracle(a.triple.d0plus);
      CHECK(LaurentPoly::q_pow(-2) * jp - LaurentPoly::q_pow(2) * jm ==
            (LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1)) * j0);
    }
  }
}

TEST_CASE("E-page dimensions are invariant under crossing renumbering") {
  LinkDiagram d = parse_pd(fixtures::kTrefoilLeft);
  SkeinAnalysis base = analyze_crossing(d, 2);
  // Rotate the crossing list; crossing 2 becomes crossing 0.
  LinkDiagram rot = d;
  rot.crossings = {d.crossings[2], d.crossings[0], d.crossings[1]};
  SkeinAnalysis moved = analyze_crossing(rot, 0);
  CHECK(base.report.kh_e2_top == moved.report.kh_e2_top);
  CHECK(base.report.kh_e2_bot == moved.report.kh_e2_bot);
  CHECK(base.report.kh_e3_top == moved.report.kh_e3_top);
  CHECK(base.report.kh_e3_bot == moved.report.kh_e3_bot);
  CHECK(base.report.defect_c == moved.report.defect_c);
}

TEST_CASE("random braid closures satisfy the relation at a random crossing") {
  std::mt19937 rng(314);
  std::uniform_int_distribution<int> strands_pick(2, 3), len_pick(1, 5), gen_sign(0, 1);
  for (int trial = 0; trial < 12; ++trial) {
    int strands = strands_pick(rng);
    int len = len_pick(rng);
    std::vector<int> word;
    std::uniform_int_distribution<int> gen(1, strands - 1);
    for (int i = 0; i < len; ++i) word.push_back(gen(rng) * (gen_sign(rng) ? 1 : -1));
    LinkDiagram d = fixtures::from_braid(strands, word);
    if (d.n_crossings() == 0) continue;
    std::uniform_int_distribution<int> cr(0, d.n_crossings() - 1);
    int p = cr(rng);
    CAPTURE(trial);
    CAPTURE(serialize(d));
    CAPTURE(p);
    CHECK_NOTHROW(analyze_crossing(d, p));
  }
}

TEST_CASE("pages report serializes to json") {
  SkeinAnalysis a = analyze_crossing(parse_pd(fixtures::kTrefoilLeft), 0);
  std::string j = pages_report_json(a);
  CHECK(j.find("\"e2\"") != std::string::npos);
  CHECK(j.find("\"defect\"") != std::string::npos);
  CHECK(j.find("\"cplus\"") != std::string::npos);
}

TEST_SUITE_END();
