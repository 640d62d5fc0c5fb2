#include "khoskein/cube.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace khoskein {

int CubeComplex::i_of(std::uint32_t res) const {
  return std::popcount(res) - n_minus;
}

int CubeComplex::word_degree(std::uint32_t res, std::uint64_t word) const {
  int k = k_of(res);
  int xs = std::popcount(word);
  return (k - xs) - xs;
}

int CubeComplex::j_of(std::uint32_t res, std::uint64_t word) const {
  return word_degree(res, word) + std::popcount(res) + n_plus - 2 * n_minus;
}

int CubeComplex::slot_dim(SlotKey s) const {
  auto it = groups.find(s);
  return it == groups.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<BasisVector>& CubeComplex::basis(SlotKey s) const {
  static const std::vector<BasisVector> empty;
  auto it = groups.find(s);
  return it == groups.end() ? empty : it->second;
}

RatMatrix CubeComplex::diff_block(SlotKey s) const {
  auto it = diff.find(s);
  if (it != diff.end()) return it->second;
  return RatMatrix(slot_dim(SlotKey{s.i + 1, s.j}), slot_dim(s));
}

int CubeComplex::index_of(SlotKey s, const BasisVector& v) const {
  return index_.at(s).at(v);
}

std::vector<SlotKey> CubeComplex::slots() const {
  std::vector<SlotKey> out;
  for (const auto& [k, v] : groups) out.push_back(k);
  return out;
}

std::pair<int, int> CubeComplex::i_range() const { return {-n_minus, n_plus}; }

int default_cube_cap() {
  if (const char* env = std::getenv("KHOSKEIN_MAX_CROSSINGS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 20;
}

CubeComplex build_cube(const LinkDiagram& d) { return build_cube(d, default_cube_cap()); }

CubeComplex build_cube(const LinkDiagram& d, int cap) {
  const int n = d.n_crossings();
  if (n > cap)
    throw CubeTooLarge(std::to_string(n) + " crossings exceeds cap " + std::to_string(cap));

  CubeComplex c;
  c.diagram = d;
  c.n = n;
  c.n_plus = d.n_plus();
  c.n_minus = d.n_minus();

  const std::uint32_t n_res = 1u << n;
  c.circles.reserve(n_res);
  for (std::uint32_t res = 0; res < n_res; ++res) {
    std::string bits(n, '0');
    for (int p = 0; p < n; ++p)
      if (res & (1u << p)) bits[p] = '1';
    c.circles.push_back(resolve(d, Resolution{bits}));
    // Each circle doubles the basis of its vertex.
    if (c.circles.back().count > 26)
      throw CubeTooLarge("a smoothing has " + std::to_string(c.circles.back().count) +
                         " circles; the chain groups would not fit in memory");
  }

  for (std::uint32_t res = 0; res < n_res; ++res) {
    const int k = c.k_of(res);
    const int i = c.i_of(res);
    for (std::uint64_t word = 0; word < (std::uint64_t(1) << k); ++word) {
      SlotKey s{i, c.j_of(res, word)};
      auto& vec = c.groups[s];
      c.index_[s].emplace(BasisVector{res, word}, static_cast<int>(vec.size()));
      vec.push_back(BasisVector{res, word});
    }
  }

  // Edge maps of the cube: identity away from the changing disc, m or delta
  // on it, with sign (-1)^{number of 1s below the changing position}.
  for (std::uint32_t res = 0; res < n_res; ++res) {
    const CircleSet& cs = c.circles[res];
    const int k = cs.count;
    const int i = c.i_of(res);
    for (int p = 0; p < n; ++p) {
      if (res & (1u << p)) continue;
      const std::uint32_t res2 = res | (1u << p);
      const CircleSet& cs2 = c.circles[res2];
      const int k2 = cs2.count;
      const int sign = (std::popcount(res & ((1u << p) - 1)) % 2 == 0) ? +1 : -1;

      // Circle correspondence through shared edge ids; free circles keep
      // their relative position after the edge circles.
      std::vector<std::vector<int>> pre(k2);  // res2 circle -> res circles feeding it
      {
        std::vector<bool> seen(static_cast<std::size_t>(k2) * k, false);
        for (const auto& [e, idx2] : cs2.circle_of_edge) {
          int idx = cs.circle_of_edge.at(e);
          if (!seen[static_cast<std::size_t>(idx2) * k + idx]) {
            seen[static_cast<std::size_t>(idx2) * k + idx] = true;
            pre[idx2].push_back(idx);
          }
        }
        for (int f = 0; f < c.diagram.free_circles; ++f)
          pre[cs2.edge_circle_count + f].push_back(cs.edge_circle_count + f);
      }

      auto emit = [&](std::uint64_t word, std::uint64_t word2, const Rat& coeff) {
        SlotKey from{i, c.j_of(res, word)};
        SlotKey to{i + 1, c.j_of(res2, word2)};
        if (from.j != to.j) throw InternalError("cube edge map does not preserve q-degree");
        auto& m = c.diff[SlotKey{i, from.j}];
        if (m.rows() == 0 && m.cols() == 0)
          m = RatMatrix(c.slot_dim(to), c.slot_dim(from));
        m.add_at(c.index_of(to, BasisVector{res2, word2}), c.index_of(from, BasisVector{res, word}),
                 coeff * sign);
      };

      if (k2 == k - 1) {
        // Two circles fuse: multiplication m.
        int u = -1, v = -1, target = -1;
        std::vector<int> fwd(k, -1);
        for (int b = 0; b < k2; ++b) {
          if (pre[b].size() == 2) {
            target = b;
            u = pre[b][0];
            v = pre[b][1];
          } else if (pre[b].size() == 1) {
            fwd[pre[b][0]] = b;
          } else {
            throw InternalError("cube merge bookkeeping failed");
          }
        }
        if (target < 0 || u == v) throw InternalError("cube merge bookkeeping failed");
        fwd[u] = fwd[v] = target;
        for (std::uint64_t word = 0; word < (std::uint64_t(1) << k); ++word) {
          bool xu = word & (std::uint64_t(1) << u);
          bool xv = word & (std::uint64_t(1) << v);
          if (xu && xv) continue;  // m(x,x) = 0
          std::uint64_t word2 = 0;
          for (int a = 0; a < k; ++a)
            if (a != u && a != v && (word & (std::uint64_t(1) << a)))
              word2 |= std::uint64_t(1) << fwd[a];
          if (xu || xv) word2 |= std::uint64_t(1) << target;
          emit(word, word2, Rat(1));
        }
      } else if (k2 == k + 1) {
        // One circle splits: comultiplication delta.
        int w1 = -1, w2 = -1, u = -1;
        std::vector<int> fwd(k, -1);
        std::vector<int> split_count(k, 0);
        for (int b = 0; b < k2; ++b) {
          if (pre[b].size() != 1) throw InternalError("cube split bookkeeping failed");
          ++split_count[pre[b][0]];
        }
        for (int a = 0; a < k; ++a)
          if (split_count[a] == 2) u = a;
        if (u < 0) throw InternalError("cube split bookkeeping failed");
        for (int b = 0; b < k2; ++b) {
          if (pre[b][0] == u)
            (w1 < 0 ? w1 : w2) = b;
          else
            fwd[pre[b][0]] = b;
        }
        if (w1 < 0 || w2 < 0) throw InternalError("cube split bookkeeping failed");
        for (std::uint64_t word = 0; word < (std::uint64_t(1) << k); ++word) {
          std::uint64_t base = 0;
          for (int a = 0; a < k; ++a)
            if (a != u && (word & (std::uint64_t(1) << a))) base |= std::uint64_t(1) << fwd[a];
          if (word & (std::uint64_t(1) << u)) {
            emit(word, base | (std::uint64_t(1) << w1) | (std::uint64_t(1) << w2), Rat(1));
          } else {
            emit(word, base | (std::uint64_t(1) << w1), Rat(1));
            emit(word, base | (std::uint64_t(1) << w2), Rat(1));
          }
        }
      } else {
        throw InternalError("cube edge changes circle count by " + std::to_string(k2 - k));
      }
    }
  }
  return c;
}

LaurentPoly qdim(const std::map<int, int>& dim_by_degree) {
  LaurentPoly p;
  for (const auto& [deg, dim] : dim_by_degree) p.add_term(Monomial{0, deg, 0}, Rat(dim));
  return p;
}

LaurentPoly qdim_column(const CubeComplex& c, int i) {
  std::map<int, int> dims;
  for (const auto& [s, basis] : c.groups)
    if (s.i == i) dims[s.j] += static_cast<int>(basis.size());
  return qdim(dims);
}

LaurentPoly euler_characteristic(const CubeComplex& c) {
  LaurentPoly out;
  auto [lo, hi] = c.i_range();
  for (int i = lo; i <= hi; ++i) {
    LaurentPoly q = qdim_column(c, i);
    out += (i % 2 == 0) ? q : -q;
  }
  return out;
}

std::string basis_vector_to_string(const CubeComplex& c, const BasisVector& v) {
  std::string bits(c.n, '0');
  for (int p = 0; p < c.n; ++p)
    if (v.res & (1u << p)) bits[p] = '1';
  std::string word(c.k_of(v.res), 'e');
  for (int a = 0; a < c.k_of(v.res); ++a)
    if (v.word & (std::uint64_t(1) << a)) word[a] = 'x';
  return bits + ":" + word;
}

std::string dump_cube(const CubeComplex& c) {
  std::ostringstream out;
  for (const auto& [s, basis] : c.groups) {
    out << "C(" << s.i << "," << s.j << ") dim " << basis.size() << ":";
    for (const auto& v : basis) out << " " << basis_vector_to_string(c, v);
    out << "\n";
    auto it = c.diff.find(s);
    if (it != c.diff.end() && !it->second.is_zero()) {
      out << "d(" << s.i << "," << s.j << "):";
      for (int r = 0; r < it->second.rows(); ++r)
        for (const auto& [col, val] : it->second.row(r))
          out << " (" << r << "," << col << "," << rat_to_string(val) << ")";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace khoskein
