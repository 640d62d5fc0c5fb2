#pragma once

#include <map>

#include "khoskein/cube.hpp"
#include "khoskein/laurent.hpp"
#include "khoskein/linalg.hpp"

namespace khoskein {

// Homology of one bigraded slot, with explicit cycle representatives and a
// basis of the boundary subspace, all in chain coordinates of the slot.
struct HomologySlot {
  SlotKey grading;
  int chain_dim = 0;
  int dim = 0;
  RatMatrix reps;
  RatMatrix boundary_basis;
};

class HomologyTable {
 public:
  std::map<SlotKey, HomologySlot> slots;

  int dim(SlotKey s) const {
    auto it = slots.find(s);
    return it == slots.end() ? 0 : it->second.dim;
  }
  const HomologySlot* slot(SlotKey s) const {
    auto it = slots.find(s);
    return it == slots.end() ? nullptr : &it->second;
  }
  std::map<SlotKey, int> dims() const;
};

// Slot-by-slot homology with representatives; throws NotAComplex when the
// differentials do not square to zero.
HomologyTable homology(const CubeComplex& c);

LaurentPoly khovanov_polynomial(const HomologyTable& h);

// Matrix of the map induced on homology by a chain-level block f. The caller
// is responsible for the chain-map check across slots; this routine throws
// CoordinateFailure when the image of a representative is not a cycle of the
// target slot modulo boundaries.
RatMatrix induced_map(const RatMatrix& f_block, const HomologySlot& src, const HomologySlot& tgt);

}  // namespace khoskein
