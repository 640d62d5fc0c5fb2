#include "khoskein/spectral.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "khoskein/json_io.hpp"

namespace khoskein {
namespace {

std::uint32_t del_bit(std::uint32_t res, int p) {
  std::uint32_t low = res & ((1u << p) - 1);
  return low | ((res >> (p + 1)) << p);
}

std::uint32_t ins_bit(std::uint32_t res, int p, std::uint32_t bit) {
  std::uint32_t low = res & ((1u << p) - 1);
  return low | (bit << p) | ((res >> p) << (p + 1));
}

int sign_right_of(std::uint32_t res, int p) {
  return std::popcount(res >> (p + 1)) % 2 == 0 ? +1 : -1;
}

// Circle correspondence between a resolution of the unsmoothed diagram and
// the matching resolution of the smoothed one. Closed-off classes map to the
// new free circles sitting after the inherited ones.
std::vector<int> match_smoothed(const CircleSet& big, int big_free, const CircleSet& small,
                                const SmoothResult& sm,
                                const std::map<int, int>& closure_of_edge) {
  std::vector<int> perm(big.count, -1);
  for (const auto& [e, ib] : big.circle_of_edge) {
    int target;
    auto it = sm.edge_map.find(e);
    if (it != sm.edge_map.end()) {
      target = small.circle_of_edge.at(it->second);
    } else {
      auto jt = closure_of_edge.find(e);
      if (jt == closure_of_edge.end())
        throw InternalError("arc " + std::to_string(e) + " neither survives nor closes");
      target = small.edge_circle_count + big_free + jt->second;  // closures follow inherited frees
    }
    if (perm[ib] >= 0 && perm[ib] != target)
      throw InternalError("smoothed circle correspondence is not well defined");
    perm[ib] = target;
  }
  for (int f = 0; f < big_free; ++f) perm[big.edge_circle_count + f] = small.edge_circle_count + f;
  std::vector<bool> hit(small.count, false);
  for (int v : perm) {
    if (v < 0 || v >= small.count || hit[v])
      throw InternalError("smoothed circle correspondence is not a bijection");
    hit[v] = true;
  }
  return perm;
}

// Circle correspondence between two resolutions over the same arc ids.
std::vector<int> match_same_edges(const CircleSet& a, const CircleSet& b, int frees) {
  std::vector<int> perm(a.count, -1);
  for (const auto& [e, ia] : a.circle_of_edge) {
    int target = b.circle_of_edge.at(e);
    if (perm[ia] >= 0 && perm[ia] != target)
      throw InternalError("resolution circle sets differ");
    perm[ia] = target;
  }
  for (int f = 0; f < frees; ++f) perm[a.edge_circle_count + f] = b.edge_circle_count + f;
  return perm;
}

std::uint64_t transfer_word(std::uint64_t word, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (word & (std::uint64_t(1) << i)) out |= std::uint64_t(1) << perm[i];
  return out;
}

std::vector<int> invert_perm(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

RatMatrix get_block(const std::map<SlotKey, RatMatrix>& blocks, SlotKey s, const CubeComplex& src,
                    const CubeComplex& tgt, SlotKey off) {
  auto it = blocks.find(s);
  if (it != blocks.end()) return it->second;
  return RatMatrix(tgt.slot_dim(s + off), src.slot_dim(s));
}

void check_chain_map(const CubeComplex& src, const CubeComplex& tgt,
                     const std::map<SlotKey, RatMatrix>& blocks, SlotKey off, const char* name) {
  for (const auto& [s, basis] : src.groups) {
    RatMatrix f_here = get_block(blocks, s, src, tgt, off);
    RatMatrix f_next = get_block(blocks, SlotKey{s.i + 1, s.j}, src, tgt, off);
    RatMatrix lhs = f_next * src.diff_block(s);
    RatMatrix rhs = tgt.diff_block(s + off) * f_here;
    if (!(lhs - rhs).is_zero())
      throw NotChainMap(std::string(name) + " does not commute with the differential at (" +
                        std::to_string(s.i) + "," + std::to_string(s.j) + ")");
  }
}

std::map<int, int> closure_index_of_edge(const SmoothResult& sm) {
  std::map<int, int> out;
  for (int k = 0; k < static_cast<int>(sm.closed_classes.size()); ++k)
    for (int e : sm.closed_classes[k]) out[e] = k;
  return out;
}

HomologySlot empty_slot(SlotKey s) {
  HomologySlot hs;
  hs.grading = s;
  hs.chain_dim = 0;
  hs.dim = 0;
  hs.reps = RatMatrix(0, 0);
  hs.boundary_basis = RatMatrix(0, 0);
  return hs;
}

const HomologySlot& slot_or_empty(const HomologyTable& h, SlotKey s) {
  static thread_local std::map<SlotKey, HomologySlot> cache;
  const HomologySlot* found = h.slot(s);
  if (found) return *found;
  auto [it, inserted] = cache.try_emplace(s, empty_slot(s));
  return it->second;
}

}  // namespace

RatMatrix FourTermSequence::psi1_block(SlotKey s) const {
  return get_block(psi1, s, *cube_zero, *cube_minus, off_psi1);
}
RatMatrix FourTermSequence::phi_block(SlotKey s) const {
  return get_block(phi, s, *cube_minus, *cube_plus, off_phi);
}
RatMatrix FourTermSequence::psi2_block(SlotKey s) const {
  return get_block(psi2, s, *cube_plus, *cube_zero, off_psi2);
}
RatMatrix FourTermSequence::phi1_block(SlotKey s) const {
  return get_block(phi1, s, *cube_minus, *cube_one, off_phi1);
}
RatMatrix FourTermSequence::phi2_block(SlotKey s) const {
  return get_block(phi2, s, *cube_one, *cube_plus, off_phi2);
}

SkeinTriple build_triple(const LinkDiagram& d, int p) {
  if (p < 0 || p >= d.n_crossings()) throw IndexOutOfRange("crossing " + std::to_string(p));
  SkeinTriple t;
  t.p = p;
  if (d.crossings[p].sign > 0) {
    t.dplus = d;
    t.dminus = switch_crossing(d, p);
  } else {
    t.dminus = d;
    t.dplus = switch_crossing(d, p);
  }
  t.sm_oriented = smooth_oriented(t.dplus, p);
  t.sm_disoriented = smooth_disoriented(t.dplus, p);
  t.d0plus = t.sm_oriented.diagram;
  t.d1plus = t.sm_disoriented.diagram;
  t.cplus = t.d1plus.n_minus() - t.dplus.n_minus();
  t.cminus = t.d1plus.n_minus() - t.dminus.n_minus();
  if (t.cplus != t.cminus + 1) throw ShiftMismatch("c+ != c- + 1");
  return t;
}

FourTermSequence build_chain_maps(const SkeinTriple& t) {
  FourTermSequence f;
  f.triple = t;
  f.cube_plus = std::make_shared<const CubeComplex>(build_cube(t.dplus));
  f.cube_minus = std::make_shared<const CubeComplex>(build_cube(t.dminus));
  f.cube_zero = std::make_shared<const CubeComplex>(build_cube(t.d0plus));
  f.cube_one = std::make_shared<const CubeComplex>(build_cube(t.d1plus));
  const int p = t.p;
  const int base_free = t.dplus.free_circles;
  const auto closures = closure_index_of_edge(t.sm_oriented);

  std::map<std::uint32_t, std::vector<int>> perm_plus, perm_minus, perm_same;
  auto memo = [](auto& cache, std::uint32_t key, auto&& compute) -> const std::vector<int>& {
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute()).first;
    return it->second;
  };

  // psi2: projection of C(D+) onto its 0-smoothing quotient.
  for (const auto& [s, basis] : f.cube_plus->groups) {
    RatMatrix m(f.cube_zero->slot_dim(s + f.off_psi2), static_cast<int>(basis.size()));
    for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
      const BasisVector& v = basis[col];
      if ((v.res >> p) & 1) continue;
      std::uint32_t res2 = del_bit(v.res, p);
      const auto& perm = memo(perm_plus, v.res, [&] {
        return match_smoothed(f.cube_plus->circles[v.res], base_free,
                              f.cube_zero->circles[res2], t.sm_oriented, closures);
      });
      BasisVector w{res2, transfer_word(v.word, perm)};
      SlotKey tgt{f.cube_zero->i_of(res2), f.cube_zero->j_of(res2, w.word)};
      if (tgt != s + f.off_psi2) throw ShiftMismatch("psi2 grading bookkeeping");
      m.set(f.cube_zero->index_of(tgt, w), col, Rat(1));
    }
    f.psi2[s] = std::move(m);
  }

  // psi1: inclusion of the 1-smoothing subcube of C(D-), which is C(D0+)
  // up to the sign correction for the inserted bit.
  for (const auto& [s, basis] : f.cube_zero->groups) {
    RatMatrix m(f.cube_minus->slot_dim(s + f.off_psi1), static_cast<int>(basis.size()));
    for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
      const BasisVector& v = basis[col];
      std::uint32_t res = ins_bit(v.res, p, 1);
      const auto& perm = memo(perm_minus, v.res, [&] {
        return invert_perm(match_smoothed(f.cube_minus->circles[res], base_free,
                                          f.cube_zero->circles[v.res], t.sm_oriented, closures));
      });
      BasisVector w{res, transfer_word(v.word, perm)};
      SlotKey tgt{f.cube_minus->i_of(res), f.cube_minus->j_of(res, w.word)};
      if (tgt != s + f.off_psi1) throw ShiftMismatch("psi1 grading bookkeeping");
      m.set(f.cube_minus->index_of(tgt, w), col, Rat(sign_right_of(res, p)));
    }
    f.psi1[s] = std::move(m);
  }

  // phi: project C(D-) onto its 0-smoothing quotient, then include it as the
  // 1-smoothing subcube of C(D+). Both steps act on the same arc ids.
  for (const auto& [s, basis] : f.cube_minus->groups) {
    RatMatrix m(f.cube_plus->slot_dim(s + f.off_phi), static_cast<int>(basis.size()));
    for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
      const BasisVector& v = basis[col];
      if ((v.res >> p) & 1) continue;
      std::uint32_t res2 = v.res | (1u << p);
      const auto& perm = memo(perm_same, v.res, [&] {
        return match_same_edges(f.cube_minus->circles[v.res], f.cube_plus->circles[res2],
                                base_free);
      });
      BasisVector w{res2, transfer_word(v.word, perm)};
      SlotKey tgt{f.cube_plus->i_of(res2), f.cube_plus->j_of(res2, w.word)};
      if (tgt != s + f.off_phi) throw ShiftMismatch("phi grading bookkeeping");
      m.set(f.cube_plus->index_of(tgt, w), col, Rat(sign_right_of(v.res, p)));
    }
    f.phi[s] = std::move(m);
  }

  // The factorization phi = phi2 o phi1 through C(D1+), with the Case I and
  // Case II regrading constants.
  f.off_phi1 = SlotKey{-t.cminus, -3 * t.cminus - 1};
  f.off_phi2 = SlotKey{t.cplus + 1, 3 * t.cplus + 2};
  const auto closures_dis = closure_index_of_edge(t.sm_disoriented);
  std::map<std::uint32_t, std::vector<int>> perm_dis_m, perm_dis_p;
  for (const auto& [s, basis] : f.cube_minus->groups) {
    RatMatrix m(f.cube_one->slot_dim(s + f.off_phi1), static_cast<int>(basis.size()));
    for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
      const BasisVector& v = basis[col];
      if ((v.res >> p) & 1) continue;
      std::uint32_t res2 = del_bit(v.res, p);
      const auto& perm = memo(perm_dis_m, v.res, [&] {
        return match_smoothed(f.cube_minus->circles[v.res], base_free,
                              f.cube_one->circles[res2], t.sm_disoriented, closures_dis);
      });
      BasisVector w{res2, transfer_word(v.word, perm)};
      SlotKey tgt{f.cube_one->i_of(res2), f.cube_one->j_of(res2, w.word)};
      if (tgt != s + f.off_phi1) throw ShiftMismatch("phi1 grading bookkeeping");
      m.set(f.cube_one->index_of(tgt, w), col, Rat(1));
    }
    f.phi1[s] = std::move(m);
  }
  for (const auto& [s, basis] : f.cube_one->groups) {
    RatMatrix m(f.cube_plus->slot_dim(s + f.off_phi2), static_cast<int>(basis.size()));
    for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
      const BasisVector& v = basis[col];
      std::uint32_t res = ins_bit(v.res, p, 1);
      const auto& perm = memo(perm_dis_p, v.res, [&] {
        return invert_perm(match_smoothed(f.cube_plus->circles[res], base_free,
                                          f.cube_one->circles[v.res], t.sm_disoriented,
                                          closures_dis));
      });
      BasisVector w{res, transfer_word(v.word, perm)};
      SlotKey tgt{f.cube_plus->i_of(res), f.cube_plus->j_of(res, w.word)};
      if (tgt != s + f.off_phi2) throw ShiftMismatch("phi2 grading bookkeeping");
      m.set(f.cube_plus->index_of(tgt, w), col, Rat(sign_right_of(res, p)));
    }
    f.phi2[s] = std::move(m);
  }
  for (const auto& [s, basis] : f.cube_minus->groups) {
    RatMatrix composite = f.phi2_block(s + f.off_phi1) * f.phi1_block(s);
    if (!(composite - f.phi_block(s)).is_zero())
      throw ShiftMismatch("phi does not factor as phi2 o phi1");
  }

  check_chain_map(*f.cube_zero, *f.cube_minus, f.psi1, f.off_psi1, "psi1");
  check_chain_map(*f.cube_minus, *f.cube_plus, f.phi, f.off_phi, "phi");
  check_chain_map(*f.cube_plus, *f.cube_zero, f.psi2, f.off_psi2, "psi2");
  check_chain_map(*f.cube_minus, *f.cube_one, f.phi1, f.off_phi1, "phi1");
  check_chain_map(*f.cube_one, *f.cube_plus, f.phi2, f.off_phi2, "phi2");

  // Chain-level exactness of the combined sequence, slot by slot.
  std::set<SlotKey> bands;
  for (const auto& [s, b] : f.cube_zero->groups) {
    bands.insert(SlotKey{s.i + 2, s.j + 3});
    bands.insert(SlotKey{s.i, s.j + 1});
  }
  for (const auto& [s, b] : f.cube_minus->groups) bands.insert(SlotKey{s.i + 2, s.j + 4});
  for (const auto& [s, b] : f.cube_plus->groups) bands.insert(s);
  for (SlotKey ij : bands) {
    SlotKey s0t{ij.i - 2, ij.j - 3}, sm{ij.i - 2, ij.j - 4}, sp = ij, s0b{ij.i, ij.j - 1};
    int d0t = f.cube_zero->slot_dim(s0t);
    int dm = f.cube_minus->slot_dim(sm);
    int dp = f.cube_plus->slot_dim(sp);
    int d0b = f.cube_zero->slot_dim(s0b);
    RatMatrix p1 = f.psi1_block(s0t), ph = f.phi_block(sm), p2 = f.psi2_block(sp);
    int r1 = p1.rank(), rph = ph.rank(), r2 = p2.rank();
    bool ok = r1 == d0t && (ph * p1).is_zero() && dm - rph == r1 && (p2 * ph).is_zero() &&
              dp - r2 == rph && r2 == d0b && d0t - dm + dp - d0b == 0;
    if (!ok)
      throw InternalError("four-term sequence is not exact at (" + std::to_string(ij.i) + "," +
                          std::to_string(ij.j) + ")");
  }
  return f;
}

int EPages::e2_dim(const std::map<SlotKey, PageSlot>& row, SlotKey s) const {
  auto it = row.find(s);
  return it == row.end() ? 0 : it->second.e2_dim;
}

int EPages::e3_dim(const std::map<SlotKey, PageSlot>& row, SlotKey s) const {
  auto it = row.find(s);
  return it == row.end() ? 0 : it->second.e3_dim;
}

LaurentPoly EPages::kh_e2(const std::map<SlotKey, PageSlot>& row) const {
  LaurentPoly p;
  for (const auto& [s, slot] : row)
    if (slot.e2_dim > 0) p.add_term(Monomial{s.i, s.j, 0}, Rat(slot.e2_dim));
  return p;
}

LaurentPoly EPages::kh_e3(const std::map<SlotKey, PageSlot>& row) const {
  LaurentPoly p;
  for (const auto& [s, slot] : row)
    if (slot.e3_dim > 0) p.add_term(Monomial{s.i, s.j, 0}, Rat(slot.e3_dim));
  return p;
}

EPages compute_pages(const FourTermSequence& f) {
  EPages e;
  e.h_zero = homology(*f.cube_zero);
  e.h_minus = homology(*f.cube_minus);
  e.h_plus = homology(*f.cube_plus);
  e.kh_zero = khovanov_polynomial(e.h_zero);
  e.kh_minus = khovanov_polynomial(e.h_minus);
  e.kh_plus = khovanov_polynomial(e.h_plus);

  for (const auto& [s, hs] : e.h_zero.slots)
    e.alpha[s] = induced_map(f.psi1_block(s), hs, slot_or_empty(e.h_minus, s + f.off_psi1));
  for (const auto& [s, hs] : e.h_minus.slots)
    e.beta[s] = induced_map(f.phi_block(s), hs, slot_or_empty(e.h_plus, s + f.off_phi));
  for (const auto& [s, hs] : e.h_plus.slots)
    e.gamma[s] = induced_map(f.psi2_block(s), hs, slot_or_empty(e.h_zero, s + f.off_psi2));

  auto map_or_zero = [](const std::map<SlotKey, RatMatrix>& m, SlotKey s, int rows, int cols) {
    auto it = m.find(s);
    return it == m.end() ? RatMatrix(rows, cols) : it->second;
  };

  // E2 of the top and bottom rows (both are copies of KH(D0+)).
  for (const auto& [s, hs] : e.h_zero.slots) {
    PageSlot top;
    top.reps = e.alpha.at(s).kernel_basis();
    top.e2_dim = top.reps.cols();
    top.span = top.reps;
    e.top[s] = std::move(top);

    PageSlot bot;
    int src_dim = e.h_plus.dim(SlotKey{s.i, s.j + 1});
    RatMatrix g = map_or_zero(e.gamma, SlotKey{s.i, s.j + 1}, hs.dim, src_dim);
    RatMatrix killed = g.image_basis();
    RatMatrix full = RatMatrix::identity(hs.dim);
    std::vector<int> chosen = RatMatrix::independent_extension(killed, full);
    bot.reps = full.select_columns(chosen);
    bot.e2_dim = static_cast<int>(chosen.size());
    bot.span = killed.hconcat(bot.reps);
    e.bot[s] = std::move(bot);
  }
  // E2 of the middle rows.
  for (const auto& [s, hs] : e.h_minus.slots) {
    PageSlot mid;
    RatMatrix kerb = e.beta.at(s).kernel_basis();
    int src_dim = e.h_zero.dim(SlotKey{s.i, s.j + 1});
    RatMatrix a_in = map_or_zero(e.alpha, SlotKey{s.i, s.j + 1}, hs.dim, src_dim);
    RatMatrix killed = a_in.image_basis();
    std::vector<int> chosen = RatMatrix::independent_extension(killed, kerb);
    mid.reps = kerb.select_columns(chosen);
    mid.e2_dim = static_cast<int>(chosen.size());
    mid.span = killed.hconcat(mid.reps);
    e.minus[s] = std::move(mid);
  }
  for (const auto& [s, hs] : e.h_plus.slots) {
    PageSlot mid;
    RatMatrix kerg = e.gamma.at(s).kernel_basis();
    int src_dim = e.h_minus.dim(SlotKey{s.i - 2, s.j - 4});
    RatMatrix b_in = map_or_zero(e.beta, SlotKey{s.i - 2, s.j - 4}, hs.dim, src_dim);
    RatMatrix killed = b_in.image_basis();
    std::vector<int> chosen = RatMatrix::independent_extension(killed, kerg);
    mid.reps = kerg.select_columns(chosen);
    mid.e2_dim = static_cast<int>(chosen.size());
    mid.span = killed.hconcat(mid.reps);
    e.plus[s] = std::move(mid);
  }

  // Knight-move differentials realized on representatives by zig-zag lifts.
  auto class_coords = [](const HomologySlot& hs, const RatMatrix& chain_vecs) {
    RatMatrix span = hs.reps.hconcat(hs.boundary_basis);
    auto sol = span.solve_matrix(chain_vecs);
    if (!sol) throw CoordinateFailure("image is not a cycle modulo boundaries");
    RatMatrix out(hs.dim, chain_vecs.cols());
    for (int r = 0; r < hs.dim; ++r)
      for (const auto& [c, v] : sol->row(r)) out.set(r, c, v);
    return out;
  };
  auto quotient_coords = [](const PageSlot& slot, const RatMatrix& class_vecs) {
    auto sol = slot.span.solve_matrix(class_vecs);
    if (!sol) throw CoordinateFailure("class does not lie in the page subquotient");
    int killed_cols = slot.span.cols() - slot.e2_dim;
    RatMatrix out(slot.e2_dim, class_vecs.cols());
    for (int r = 0; r < slot.e2_dim; ++r)
      for (const auto& [c, v] : sol->row(killed_cols + r)) out.set(r, c, v);
    return out;
  };

  for (const auto& [s, top] : e.top) {
    SlotKey tgt{s.i + 1, s.j + 3};
    const PageSlot* plus_slot = e.plus.count(tgt) ? &e.plus.at(tgt) : nullptr;
    RatMatrix d2(plus_slot ? plus_slot->e2_dim : 0, top.e2_dim);
    if (top.e2_dim > 0) {
      const HomologySlot& h0 = *e.h_zero.slot(s);
      RatMatrix chains = h0.reps * top.reps;
      RatMatrix rhs = f.psi1_block(s) * chains;
      auto w = f.cube_minus->diff_block(SlotKey{s.i - 1, s.j - 1}).solve_matrix(rhs);
      if (!w) throw CoordinateFailure("d2 lift through C(D-) failed");
      RatMatrix x = f.phi_block(SlotKey{s.i - 1, s.j - 1}) * (*w);
      if (plus_slot) {
        RatMatrix xi = class_coords(slot_or_empty(e.h_plus, tgt), x);
        d2 = quotient_coords(*plus_slot, xi);
      } else if (!x.is_zero()) {
        // Classes must vanish when the target slot is absent.
        RatMatrix xi = class_coords(slot_or_empty(e.h_plus, tgt), x);
        if (!xi.is_zero()) throw CoordinateFailure("d2 lands in a missing slot");
      }
    }
    e.d2_top[s] = std::move(d2);
  }
  for (const auto& [s, mid] : e.minus) {
    SlotKey tgt{s.i + 1, s.j + 3};
    const PageSlot* bot_slot = e.bot.count(tgt) ? &e.bot.at(tgt) : nullptr;
    RatMatrix d2(bot_slot ? bot_slot->e2_dim : 0, mid.e2_dim);
    if (mid.e2_dim > 0) {
      const HomologySlot& hm = *e.h_minus.slot(s);
      RatMatrix chains = hm.reps * mid.reps;
      RatMatrix rhs = f.phi_block(s) * chains;
      auto w = f.cube_plus->diff_block(SlotKey{s.i + 1, s.j + 4}).solve_matrix(rhs);
      if (!w) throw CoordinateFailure("d2 lift through C(D+) failed");
      RatMatrix x = f.psi2_block(SlotKey{s.i + 1, s.j + 4}) * (*w);
      if (bot_slot) {
        RatMatrix xi = class_coords(slot_or_empty(e.h_zero, tgt), x);
        d2 = quotient_coords(*bot_slot, xi);
      } else if (!x.is_zero()) {
        RatMatrix xi = class_coords(slot_or_empty(e.h_zero, tgt), x);
        if (!xi.is_zero()) throw CoordinateFailure("d2 lands in a missing slot");
      }
    }
    e.d2_minus[s] = std::move(d2);
  }

  // E3 dimensions from the realized knight moves.
  auto rank_or_zero = [&](const std::map<SlotKey, RatMatrix>& m, SlotKey s) {
    auto it = m.find(s);
    return it == m.end() ? 0 : it->second.rank();
  };
  for (auto& [s, slot] : e.top) slot.e3_dim = slot.e2_dim - e.d2_top.at(s).rank();
  for (auto& [s, slot] : e.minus) slot.e3_dim = slot.e2_dim - e.d2_minus.at(s).rank();
  for (auto& [s, slot] : e.plus)
    slot.e3_dim = slot.e2_dim - rank_or_zero(e.d2_top, SlotKey{s.i - 1, s.j - 3});
  for (auto& [s, slot] : e.bot)
    slot.e3_dim = slot.e2_dim - rank_or_zero(e.d2_minus, SlotKey{s.i - 1, s.j - 3});

  // Page consistency: the middle rows die on the third page and the
  // surviving rows pair up, which is the content of the three short exact
  // sequences between the second and third pages.
  for (const auto& [s, slot] : e.plus)
    if (slot.e3_dim != 0)
      throw PageInconsistency("E3(D+) nonzero at (" + std::to_string(s.i) + "," +
                              std::to_string(s.j) + ")");
  for (const auto& [s, slot] : e.minus)
    if (slot.e3_dim != 0)
      throw PageInconsistency("E3(D-) nonzero at (" + std::to_string(s.i) + "," +
                              std::to_string(s.j) + ")");
  {
    std::set<SlotKey> keys;
    for (const auto& [s, slot] : e.top) keys.insert(s);
    for (const auto& [s, slot] : e.bot) keys.insert(SlotKey{s.i, s.j - 2});
    for (SlotKey s : keys)
      if (e.e3_dim(e.top, s) != e.e3_dim(e.bot, SlotKey{s.i, s.j + 2}))
        throw PageInconsistency("E3 top/bottom pairing fails at (" + std::to_string(s.i) + "," +
                                std::to_string(s.j) + ")");
  }
  return e;
}

LaurentPoly defect(const EPages& pages) {
  LaurentPoly t_plus_1 = LaurentPoly::t_pow(1) + LaurentPoly::one();
  LaurentPoly tq3 = LaurentPoly::t_pow(1) * LaurentPoly::q_pow(3);
  LaurentPoly q = LaurentPoly::q_pow(1);
  return t_plus_1 * (tq3 * pages.kh_e2(pages.top) - q * pages.kh_e2(pages.bot));
}

LaurentPoly defect_sym(const EPages& pages) {
  LaurentPoly q = LaurentPoly::q_pow(1);
  LaurentPoly qinv = LaurentPoly::q_pow(-1);
  LaurentPoly t_plus_1 = LaurentPoly::t_pow(1) + LaurentPoly::one();
  LaurentPoly tinv_plus_1 = LaurentPoly::t_pow(-1) + LaurentPoly::one();
  return t_plus_1 * q * pages.kh_e2(pages.top) - tinv_plus_1 * qinv * pages.kh_e2(pages.bot);
}

SkeinReport verify_skein(const FourTermSequence&, const EPages& pages) {
  SkeinReport r;
  r.kh_plus = pages.kh_plus;
  r.kh_minus = pages.kh_minus;
  r.kh_zero = pages.kh_zero;
  r.kh_e2_top = pages.kh_e2(pages.top);
  r.kh_e2_bot = pages.kh_e2(pages.bot);
  r.kh_e2_plus = pages.kh_e2(pages.plus);
  r.kh_e2_minus = pages.kh_e2(pages.minus);
  r.kh_e3_top = pages.kh_e3(pages.top);
  r.kh_e3_bot = pages.kh_e3(pages.bot);
  r.defect_c = defect(pages);
  r.defect_csym = defect_sym(pages);

  const LaurentPoly t2q3 = LaurentPoly::t_pow(2) * LaurentPoly::q_pow(3);
  const LaurentPoly t2q4 = LaurentPoly::t_pow(2) * LaurentPoly::q_pow(4);
  const LaurentPoly q = LaurentPoly::q_pow(1);
  r.lhs = (t2q3 - q) * r.kh_zero - t2q4 * r.kh_minus + r.kh_plus;
  if (!(r.lhs == r.defect_c))
    throw SkeinViolation("generalized skein relation fails: lhs = " + r.lhs.to_string() +
                         ", defect = " + r.defect_c.to_string());

  // Symmetric form.
  const LaurentPoly y = LaurentPoly::t_pow(1) * LaurentPoly::q_pow(2);
  LaurentPoly sym_lhs = y.inverse() * r.kh_plus - y * r.kh_minus;
  LaurentPoly tq = LaurentPoly::t_pow(1) * LaurentPoly::q_pow(1);
  LaurentPoly sym_rhs = (tq.inverse() - tq) * r.kh_zero + r.defect_csym;
  if (!(sym_lhs == sym_rhs)) throw SkeinViolation("symmetric skein relation fails");
  if (!(r.defect_csym == LaurentPoly::t_pow(-1) * LaurentPoly::q_pow(-2) * r.defect_c))
    throw SkeinViolation("C^sym != t^-1 q^-2 C");

  // Expansion of C through the four E2 rows.
  LaurentPoly c_rows = t2q3 * r.kh_e2_top - t2q4 * r.kh_e2_minus + r.kh_e2_plus - q * r.kh_e2_bot;
  if (!(c_rows == r.defect_c)) throw SkeinViolation("row expansion of the defect fails");

  // Page substitution identities.
  const LaurentPoly t = LaurentPoly::t_pow(1);
  const LaurentPoly tq3 = t * LaurentPoly::q_pow(3);
  const LaurentPoly tq1 = t * q;
  if (!(t * r.kh_e2_plus == t2q3 * r.kh_e2_top - t2q3 * r.kh_e3_top))
    throw SkeinViolation("subs identity for Kh(E2(D+)) fails");
  if (!(t2q4 * r.kh_e2_minus == tq1 * r.kh_e2_bot - tq1 * r.kh_e3_bot))
    throw SkeinViolation("subs identity for Kh(E2(D-)) fails");
  if (!(tq3 * r.kh_e3_top == tq1 * r.kh_e3_bot))
    throw SkeinViolation("subs identity for E3 pairing fails");

  if (!r.defect_c.substitute_t_minus_one().is_zero_poly())
    throw SkeinViolation("defect does not vanish at t = -1");
  return r;
}

SkeinAnalysis analyze_crossing(const LinkDiagram& d, int p) {
  SkeinAnalysis a;
  a.triple = build_triple(d, p);
  a.maps = build_chain_maps(a.triple);
  a.pages = compute_pages(a.maps);
  a.report = verify_skein(a.maps, a.pages);
  return a;
}

std::string pages_report_json(const SkeinAnalysis& a) {
  nlohmann::json j;
  j["crossing"] = a.triple.p;
  j["dplus"] = serialize(a.triple.dplus);
  j["dminus"] = serialize(a.triple.dminus);
  j["d0plus"] = serialize(a.triple.d0plus);
  j["d1plus"] = serialize(a.triple.d1plus);
  j["cplus"] = a.triple.cplus;
  j["cminus"] = a.triple.cminus;

  auto dims_json = [](const std::map<SlotKey, int>& dims) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [s, d] : dims) out.push_back({s.i, s.j, d});
    return out;
  };
  j["e1"]["d0plus_top"] = dims_json(a.pages.h_zero.dims());
  j["e1"]["dminus"] = dims_json(a.pages.h_minus.dims());
  j["e1"]["dplus"] = dims_json(a.pages.h_plus.dims());
  j["e1"]["d0plus_bot"] = dims_json(a.pages.h_zero.dims());

  auto page_json = [](const std::map<SlotKey, PageSlot>& row, bool third) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [s, slot] : row) {
      int d = third ? slot.e3_dim : slot.e2_dim;
      if (d > 0) out.push_back({s.i, s.j, d});
    }
    return out;
  };
  j["e2"]["d0plus_top"] = page_json(a.pages.top, false);
  j["e2"]["dminus"] = page_json(a.pages.minus, false);
  j["e2"]["dplus"] = page_json(a.pages.plus, false);
  j["e2"]["d0plus_bot"] = page_json(a.pages.bot, false);
  j["e3"]["d0plus_top"] = page_json(a.pages.top, true);
  j["e3"]["dminus"] = page_json(a.pages.minus, true);
  j["e3"]["dplus"] = page_json(a.pages.plus, true);
  j["e3"]["d0plus_bot"] = page_json(a.pages.bot, true);

  j["kh"]["dplus"] = poly_to_json(a.report.kh_plus);
  j["kh"]["dminus"] = poly_to_json(a.report.kh_minus);
  j["kh"]["d0plus"] = poly_to_json(a.report.kh_zero);
  j["defect"] = poly_to_json(a.report.defect_c);
  j["defect_sym"] = poly_to_json(a.report.defect_csym);
  return j.dump(2);
}

}  // namespace khoskein
