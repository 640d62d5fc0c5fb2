#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "khoskein/diagram.hpp"
#include "khoskein/laurent.hpp"

namespace khoskein {

// Framing parameter d: an integer value by default, or kept symbolic as the
// third polynomial variable.
struct DValue {
  bool symbolic = false;
  long value = 1;

  static DValue numeric(long v) { return DValue{false, v}; }
  static DValue symbol() { return DValue{true, 1}; }
  LaurentPoly pow(int k) const;
};

struct ThetaParams {
  DValue d;
  LaurentPoly dprime = LaurentPoly::one();
};

// Coefficients of a generalized skein relation
//   r+ f(L+) + r- f(L-) + r0 f(L0) + rinf(L+,L-,L0) = 0
// together with the initial condition on unions of unlinked knots.
struct SkeinCoefficients {
  LaurentPoly rplus, rminus, rzero;
  std::function<LaurentPoly(const LinkDiagram&, const LinkDiagram&, const LinkDiagram&)> rinf;
  std::function<LaurentPoly(const LinkDiagram&)> initial;
};

enum class SkeinEvent { root, switched, smoothed };

struct SkeinNode {
  LinkDiagram diagram;
  SkeinEvent event = SkeinEvent::root;
  int crossing = -1;  // crossing processed at the parent to produce this node
  int switches = 0;   // r_v
  int smooths = 0;    // r'_v
  std::vector<int> pending;  // marked mixed crossings still to process, in order
  std::vector<std::unique_ptr<SkeinNode>> children;  // [0] switched, [1] smoothed

  bool is_leaf() const { return pending.empty(); }
  int distance() const { return static_cast<int>(pending.size()); }
};

struct SkeinTree {
  std::unique_ptr<SkeinNode> root;
  int leaf_count() const;
  int node_count() const;
};

// True when every mixed crossing is first met along its over-arc under the
// diagram's ordering, i.e. the set Cmix is empty.
bool is_descending_stack(const LinkDiagram& d);

// Step 1 of the descending-stack algorithm: walk the components in order
// from their basepoints and mark each mixed crossing first met on its
// under-arc. The marks come back in walk order and coincide with Cmix.
std::vector<int> step1_marks(const LinkDiagram& d);

SkeinTree mark_and_decompose(const LinkDiagram& d);

LaurentPoly evaluate_generic(const SkeinTree& tree, const SkeinCoefficients& co);
LaurentPoly evaluate_generic(const LinkDiagram& d, const SkeinCoefficients& co);

// Khovanov polynomial of an arbitrary diagram (cube + homology).
LaurentPoly khovanov_of(const LinkDiagram& d);

// Jones polynomial of a diagram, normalized to 1 on the unknot.
LaurentPoly jones_of(const LinkDiagram& d);

// The Jones evaluator as a generalized-skein instance, and the theta
// instance with framing d.
SkeinCoefficients jones_coefficients();
SkeinCoefficients theta_coefficients(DValue d);

LaurentPoly theta(const LinkDiagram& d, DValue dv);
LaurentPoly theta(const LinkDiagram& d, long dvalue);

// Kh_d on a diagram without mixed crossings: product of d*Kh over the knots.
LaurentPoly kh_d_union(const LinkDiagram& d, DValue dv);

// Shared memo for the recursive invariants: Khovanov polynomials and
// symmetric defects keyed by serialized diagrams.
struct EvalCache {
  std::map<std::string, LaurentPoly> kh;
  std::map<std::string, LaurentPoly> csym;
};

// One application of the deformed skein relation at a crossing of Cmix(D),
// then recursion down to descending stacks.
LaurentPoly kh_ddprime_at(const LinkDiagram& d, int p, const ThetaParams& params,
                          EvalCache* cache = nullptr);

// Minimal-diagram sets by ordering for the averaged invariant.
struct GammaSet {
  std::map<std::vector<int>, std::vector<LinkDiagram>> by_ordering;
};
GammaSet parse_gamma_file(const std::string& text, const LinkDiagram& reference);

// The averaged invariant Kh_{d,d'}: mean over orderings, minimal diagrams
// and crossings of Cmix. When gamma is null each ordering uses the given
// diagram alone.
LaurentPoly kh_ddprime(const LinkDiagram& d, const ThetaParams& params,
                       const GammaSet* gamma = nullptr, EvalCache* cache = nullptr);

}  // namespace khoskein
