#include "khoskein/homology.hpp"

namespace khoskein {

std::map<SlotKey, int> HomologyTable::dims() const {
  std::map<SlotKey, int> out;
  for (const auto& [s, slot] : slots)
    if (slot.dim > 0) out[s] = slot.dim;
  return out;
}

HomologyTable homology(const CubeComplex& c) {
  HomologyTable h;
  for (const auto& [s, basis] : c.groups) {
    RatMatrix d_out = c.diff_block(s);
    RatMatrix d_in = c.diff_block(SlotKey{s.i - 1, s.j});
    if (d_in.cols() > 0 && !(d_out * d_in).is_zero())
      throw NotAComplex("d o d != 0 at (" + std::to_string(s.i) + "," + std::to_string(s.j) + ")");

    HomologySlot slot;
    slot.grading = s;
    slot.chain_dim = static_cast<int>(basis.size());
    RatMatrix kernel = d_out.kernel_basis();
    slot.boundary_basis = d_in.image_basis();
    std::vector<int> chosen = RatMatrix::independent_extension(slot.boundary_basis, kernel);
    slot.reps = kernel.select_columns(chosen);
    slot.dim = static_cast<int>(chosen.size());
    h.slots.emplace(s, std::move(slot));
  }
  return h;
}

LaurentPoly khovanov_polynomial(const HomologyTable& h) {
  LaurentPoly p;
  for (const auto& [s, slot] : h.slots)
    if (slot.dim > 0) p.add_term(Monomial{s.i, s.j, 0}, Rat(slot.dim));
  return p;
}

RatMatrix induced_map(const RatMatrix& f_block, const HomologySlot& src, const HomologySlot& tgt) {
  RatMatrix out(tgt.dim, src.dim);
  if (src.dim == 0) return out;
  if (f_block.rows() != tgt.chain_dim || f_block.cols() != src.chain_dim)
    throw CoordinateFailure("chain map block has wrong shape");
  RatMatrix images = f_block * src.reps;
  RatMatrix span = tgt.reps.hconcat(tgt.boundary_basis);
  auto coords = span.solve_matrix(images);
  if (!coords)
    throw CoordinateFailure("image of a representative is not a cycle modulo boundaries");
  for (int col = 0; col < src.dim; ++col)
    for (int row = 0; row < tgt.dim; ++row) {
      Rat v = coords->at(row, col);
      if (!is_zero(v)) out.set(row, col, v);
    }
  return out;
}

}  // namespace khoskein
