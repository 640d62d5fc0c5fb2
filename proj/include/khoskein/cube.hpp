#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "khoskein/diagram.hpp"
#include "khoskein/laurent.hpp"
#include "khoskein/linalg.hpp"

namespace khoskein {

// Basis monomial of the chain complex: a cube vertex plus one letter per
// circle of its smoothing. Bit p of res is the smoothing of crossing p; bit
// i of word is 1 for the letter x on circle i and 0 for e.
struct BasisVector {
  std::uint32_t res = 0;
  std::uint64_t word = 0;
  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

struct SlotKey {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const SlotKey&, const SlotKey&) = default;
};

// The bigraded Khovanov complex of a diagram with explicit monomial bases
// and sparse differential blocks. Immutable once built.
class CubeComplex {
 public:
  LinkDiagram diagram;
  int n = 0;
  int n_plus = 0;
  int n_minus = 0;
  std::vector<CircleSet> circles;  // indexed by resolution
  std::map<SlotKey, std::vector<BasisVector>> groups;
  std::map<SlotKey, RatMatrix> diff;  // block C^{i,j} -> C^{i+1,j}

  int k_of(std::uint32_t res) const { return circles[res].count; }
  int i_of(std::uint32_t res) const;
  int word_degree(std::uint32_t res, std::uint64_t word) const;
  int j_of(std::uint32_t res, std::uint64_t word) const;

  int slot_dim(SlotKey s) const;
  const std::vector<BasisVector>& basis(SlotKey s) const;
  RatMatrix diff_block(SlotKey s) const;  // zero block when absent
  int index_of(SlotKey s, const BasisVector& v) const;

  std::vector<SlotKey> slots() const;
  std::pair<int, int> i_range() const;

 private:
  std::map<SlotKey, std::map<BasisVector, int>> index_;
  friend CubeComplex build_cube(const LinkDiagram& d, int cap);
};

int default_cube_cap();
CubeComplex build_cube(const LinkDiagram& d);
CubeComplex build_cube(const LinkDiagram& d, int cap);

// Graded dimension of a dimension-by-degree table.
LaurentPoly qdim(const std::map<int, int>& dim_by_degree);
LaurentPoly qdim_column(const CubeComplex& c, int i);
LaurentPoly euler_characteristic(const CubeComplex& c);

std::string basis_vector_to_string(const CubeComplex& c, const BasisVector& v);
std::string dump_cube(const CubeComplex& c);

}  // namespace khoskein
