#pragma once

#include <map>
#include <memory>
#include <string>

#include "khoskein/cube.hpp"
#include "khoskein/diagram.hpp"
#include "khoskein/homology.hpp"
#include "khoskein/laurent.hpp"

namespace khoskein {

inline SlotKey operator+(SlotKey a, SlotKey b) { return SlotKey{a.i + b.i, a.j + b.j}; }
inline SlotKey operator-(SlotKey a, SlotKey b) { return SlotKey{a.i - b.i, a.j - b.j}; }

// The Conway triple at a chosen crossing, plus the shared smoothing data
// that matches circles between the four cubes. d1plus equals d0minus and
// carries the canonical orientation.
struct SkeinTriple {
  LinkDiagram dplus, dminus, d0plus, d1plus;
  int p = 0;  // crossing index, valid in both dplus and dminus
  int cplus = 0, cminus = 0;
  SmoothResult sm_oriented;     // dplus -> d0plus
  SmoothResult sm_disoriented;  // dplus -> d1plus
};

SkeinTriple build_triple(const LinkDiagram& d, int p);

// The four-term exact sequence of complexes
//   0 -> C^{i-2,j-3}(D0+) -> C^{i-2,j-4}(D-) -> C^{i,j}(D+) -> C^{i,j-1}(D0+) -> 0
// realized as per-slot matrices between the cube bases. All bidegree
// relabeling constants live in the offset fields.
struct FourTermSequence {
  SkeinTriple triple;
  std::shared_ptr<const CubeComplex> cube_plus, cube_minus, cube_zero, cube_one;

  static constexpr SlotKey off_psi1{0, -1};  // C(D0+) -> C(D-)
  static constexpr SlotKey off_phi{2, 4};    // C(D-)  -> C(D+)
  static constexpr SlotKey off_psi2{0, -1};  // C(D+)  -> C(D0+)
  SlotKey off_phi1{0, 0};  // C(D-) -> C(D1+), from the Case II shifts
  SlotKey off_phi2{0, 0};  // C(D1+) -> C(D+), from the Case I shifts

  std::map<SlotKey, RatMatrix> psi1, phi, psi2;   // keyed by source slot
  std::map<SlotKey, RatMatrix> phi1, phi2;        // the factorization of phi

  RatMatrix psi1_block(SlotKey s) const;
  RatMatrix phi_block(SlotKey s) const;
  RatMatrix psi2_block(SlotKey s) const;
  RatMatrix phi1_block(SlotKey s) const;
  RatMatrix phi2_block(SlotKey s) const;
};

FourTermSequence build_chain_maps(const SkeinTriple& t);

// One slot of the E2/E3 pages for one of the four band rows.
struct PageSlot {
  int e2_dim = 0;
  int e3_dim = 0;
  RatMatrix reps;  // E2 classes in homology coordinates of the row's table
  RatMatrix span;  // [killed-subspace basis | reps] used for coordinate solves
};

// Spectral pages of the band. Slots are keyed by the homology bidegree of
// the row's own diagram (top and bottom rows both index by KH(D0+) slots).
struct EPages {
  HomologyTable h_zero, h_minus, h_plus;
  LaurentPoly kh_zero, kh_minus, kh_plus;

  std::map<SlotKey, RatMatrix> alpha;  // KH^{s,u}(D0+) -> KH^{s,u-1}(D-)
  std::map<SlotKey, RatMatrix> beta;   // KH^{s,u}(D-)  -> KH^{s+2,u+4}(D+)
  std::map<SlotKey, RatMatrix> gamma;  // KH^{s,u}(D+)  -> KH^{s,u-1}(D0+)

  std::map<SlotKey, PageSlot> top, minus, plus, bot;
  std::map<SlotKey, RatMatrix> d2_top;    // E2 top (s,u) -> E2 plus (s+1,u+3)
  std::map<SlotKey, RatMatrix> d2_minus;  // E2 minus (s,u) -> E2 bot (s+1,u+3)

  int e2_dim(const std::map<SlotKey, PageSlot>& row, SlotKey s) const;
  int e3_dim(const std::map<SlotKey, PageSlot>& row, SlotKey s) const;

  LaurentPoly kh_e2(const std::map<SlotKey, PageSlot>& row) const;
  LaurentPoly kh_e3(const std::map<SlotKey, PageSlot>& row) const;
};

EPages compute_pages(const FourTermSequence& f);

LaurentPoly defect(const EPages& pages);
LaurentPoly defect_sym(const EPages& pages);

struct SkeinReport {
  LaurentPoly kh_plus, kh_minus, kh_zero;
  LaurentPoly lhs;         // (t^2 q^3 - q) Kh(D0+) - t^2 q^4 Kh(D-) + Kh(D+)
  LaurentPoly defect_c;    // C(D0+, D-, D+)
  LaurentPoly defect_csym;
  LaurentPoly kh_e2_top, kh_e2_bot, kh_e2_plus, kh_e2_minus;
  LaurentPoly kh_e3_top, kh_e3_bot;
};

// Computes both sides of the generalized skein relation independently and
// checks them together with the symmetric form and the page identities.
// Throws SkeinViolation when any equality fails.
SkeinReport verify_skein(const FourTermSequence& f, const EPages& pages);

// Convenience: full pipeline for one (diagram, crossing).
struct SkeinAnalysis {
  SkeinTriple triple;
  FourTermSequence maps;
  EPages pages;
  SkeinReport report;
};
SkeinAnalysis analyze_crossing(const LinkDiagram& d, int p);

std::string pages_report_json(const SkeinAnalysis& a);

}  // namespace khoskein
