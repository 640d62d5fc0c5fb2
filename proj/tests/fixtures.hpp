#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "khoskein/cube.hpp"
#include "khoskein/diagram.hpp"
#include "khoskein/laurent.hpp"

namespace fixtures {

using khoskein::LaurentPoly;
using khoskein::LinkDiagram;
using khoskein::Monomial;
using khoskein::Rat;
using khoskein::Resolution;

inline constexpr const char* kUnknot = "U";
inline constexpr const char* kUnlink2 = "U;U";
inline constexpr const char* kUnlink3 = "U;U;U";
inline constexpr const char* kKinkPos = "X(1,2,2,1)";
inline constexpr const char* kKinkNeg = "X(2,2,1,1)";
inline constexpr const char* kHopfNeg = "X(2,4,1,3);X(4,2,3,1)";
inline constexpr const char* kTrefoilLeft = "X(1,5,2,4);X(3,1,4,6);X(5,3,6,2)";
inline constexpr const char* kTrefoilRight = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";
inline constexpr const char* kFigureEight = "X(4,1,5,2);X(8,5,1,6);X(6,4,7,3);X(2,8,3,7)";

// Closure of a braid word; generators are 1-based, negative for inverse.
inline LinkDiagram from_braid(int strands, const std::vector<int>& word) {
  std::vector<int> cur(strands), init(strands);
  int next = 1;
  for (int i = 0; i < strands; ++i) cur[i] = init[i] = next++;
  std::vector<std::array<int, 4>> quads;
  for (int g : word) {
    int i = std::abs(g) - 1;
    int left = cur[i], right = cur[i + 1];
    int out_left = next++, out_right = next++;
    if (g > 0)
      quads.push_back({right, left, out_left, out_right});
    else
      quads.push_back({left, out_left, out_right, right});
    cur[i] = out_left;
    cur[i + 1] = out_right;
  }
  int frees = 0;
  for (int i = 0; i < strands; ++i) {
    if (cur[i] == init[i]) {
      ++frees;
      continue;
    }
    for (auto& q : quads)
      for (int& e : q)
        if (e == cur[i]) e = init[i];
  }
  std::string pd;
  for (const auto& q : quads) {
    if (!pd.empty()) pd += ";";
    pd += "X(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) +
          "," + std::to_string(q[3]) + ")";
  }
  for (int i = 0; i < frees; ++i) {
    if (!pd.empty()) pd += ";";
    pd += "U";
  }
  return khoskein::parse_pd(pd);
}

inline LinkDiagram torus2(int n) {
  std::vector<int> word(std::abs(n), n > 0 ? 1 : -1);
  return from_braid(2, word);
}

// The test corpus: named small diagrams up to seven crossings.
inline const std::vector<std::pair<std::string, LinkDiagram>>& corpus() {
  static const std::vector<std::pair<std::string, LinkDiagram>> all = [] {
    std::vector<std::pair<std::string, LinkDiagram>> v;
    v.emplace_back("unknot", khoskein::parse_pd(kUnknot));
    v.emplace_back("unlink2", khoskein::parse_pd(kUnlink2));
    v.emplace_back("unlink3", khoskein::parse_pd(kUnlink3));
    v.emplace_back("kink+", khoskein::parse_pd(kKinkPos));
    v.emplace_back("kink-", khoskein::parse_pd(kKinkNeg));
    v.emplace_back("unknot2c", from_braid(3, {1, 2}));
    v.emplace_back("hopf-", khoskein::parse_pd(kHopfNeg));
    v.emplace_back("hopf+", torus2(2));
    v.emplace_back("trefoil_left", khoskein::parse_pd(kTrefoilLeft));
    v.emplace_back("trefoil_right", khoskein::parse_pd(kTrefoilRight));
    v.emplace_back("figure8", khoskein::parse_pd(kFigureEight));
    v.emplace_back("solomon+", torus2(4));
    v.emplace_back("solomon-", torus2(-4));
    v.emplace_back("cinquefoil", torus2(5));
    v.emplace_back("torus6", torus2(6));
    v.emplace_back("torus7", torus2(7));
    v.emplace_back("chain3", from_braid(3, {1, 1, 2, 2}));
    v.emplace_back("twist6", from_braid(3, {1, 1, 1, -2, 1, -2}));
    v.emplace_back("link7", from_braid(3, {1, 1, 1, 1, 1, 2, 2}));
    return v;
  }();
  return all;
}

// Independent circle counter: walks half-edge cycles around the smoothed
// crossings instead of the union-find over arcs used by resolve().
inline int circle_count_oracle(const LinkDiagram& d, const Resolution& r) {
  using Occ = std::pair<int, int>;
  std::map<int, std::vector<Occ>> occ;
  for (int x = 0; x < d.n_crossings(); ++x)
    for (int s = 0; s < 4; ++s) occ[d.crossings[x].quad[s]].push_back({x, s});
  auto arc_partner = [&](Occ o) {
    const auto& v = occ.at(d.crossings[o.first].quad[o.second]);
    return v[0] == o ? v[1] : v[0];
  };
  auto smooth_partner = [&](Occ o) {
    bool one = r.bits[o.first] == '1';
    // 0-smoothing pairs slots (0,3) and (1,2); 1-smoothing pairs (0,1), (2,3).
    static const int zero_pair[4] = {3, 2, 1, 0};
    static const int one_pair[4] = {1, 0, 3, 2};
    return Occ{o.first, one ? one_pair[o.second] : zero_pair[o.second]};
  };
  std::set<Occ> visited;
  int circles = 0;
  for (int x = 0; x < d.n_crossings(); ++x)
    for (int s = 0; s < 4; ++s) {
      Occ start{x, s};
      if (visited.count(start)) continue;
      ++circles;
      Occ cur = start;
      do {
        visited.insert(cur);
        Occ hop = smooth_partner(cur);
        visited.insert(hop);
        cur = arc_partner(hop);
      } while (cur != start);
    }
  return circles + d.free_circles;
}

// Kauffman-style state sum of the unnormalized Jones polynomial: same 2^n
// states, no chain groups, no homology, circles counted by the oracle above.
inline LaurentPoly bracket_oracle(const LinkDiagram& d) {
  const int n = d.n_crossings();
  const int n_minus = d.n_minus();
  const int n_plus = d.n_plus();
  LaurentPoly sum;
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    std::string bits(n, '0');
    int r = 0;
    for (int p = 0; p < n; ++p)
      if (state & (1u << p)) {
        bits[p] = '1';
        ++r;
      }
    int k = circle_count_oracle(d, Resolution{bits});
    LaurentPoly circle_factor = khoskein::q_plus_qinv().pow(k);
    Rat sign = ((r - n_minus) % 2 == 0) ? Rat(1) : Rat(-1);
    sum += circle_factor * LaurentPoly(sign, Monomial{0, r + n_plus - 2 * n_minus, 0});
  }
  return sum;
}

}  // namespace fixtures
