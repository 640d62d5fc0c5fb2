#include "khoskein/skein.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "khoskein/cube.hpp"
#include "khoskein/homology.hpp"
#include "khoskein/spectral.hpp"

namespace khoskein {
namespace {

void require_generic(const LinkDiagram& d) {
  if (static_cast<int>(d.ordering.size()) != d.n_components())
    throw NonGenericDiagram("ordering does not cover all components");
  std::vector<int> sorted = d.ordering;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i) throw NonGenericDiagram("ordering is not a permutation");
  for (int c = 0; c < d.n_edged_components; ++c)
    if (!d.basepoints.count(c)) throw NonGenericDiagram("component without basepoint");
}

LaurentPoly kh_cached(const LinkDiagram& d, EvalCache* cache) {
  if (!cache) return khovanov_of(d);
  std::string key = serialize(d);
  auto it = cache->kh.find(key);
  if (it != cache->kh.end()) return it->second;
  LaurentPoly v = khovanov_of(d);
  cache->kh.emplace(std::move(key), v);
  return v;
}

// Kh_d of a diagram isotopic to a split union of knots: every component is
// extracted as its own knot diagram.
LaurentPoly kh_d_split_value(const LinkDiagram& d, DValue dv, EvalCache* cache) {
  LaurentPoly out = LaurentPoly::one();
  for (int c = 0; c < d.n_components(); ++c) {
    LinkDiagram knot = extract_component(d, c);
    out *= dv.pow(1) * kh_cached(knot, cache);
  }
  return out;
}

LaurentPoly csym_cached(const LinkDiagram& d, int p, EvalCache* cache) {
  if (!cache) return analyze_crossing(d, p).report.defect_csym;
  std::string key = serialize(d) + "#" + std::to_string(p);
  auto it = cache->csym.find(key);
  if (it != cache->csym.end()) return it->second;
  LaurentPoly v = analyze_crossing(d, p).report.defect_csym;
  cache->csym.emplace(std::move(key), v);
  return v;
}

}  // namespace

LaurentPoly DValue::pow(int k) const {
  if (symbolic) return LaurentPoly::d_pow(k);
  if (value < 1) throw InputError("framing parameter d must be a positive integer");
  Rat r(1);
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r *= value;
  return LaurentPoly(k >= 0 ? r : Rat(1) / r);
}

int SkeinTree::leaf_count() const {
  int n = 0;
  std::vector<const SkeinNode*> stack{root.get()};
  while (!stack.empty()) {
    const SkeinNode* v = stack.back();
    stack.pop_back();
    if (v->is_leaf()) ++n;
    for (const auto& c : v->children) stack.push_back(c.get());
  }
  return n;
}

int SkeinTree::node_count() const {
  int n = 0;
  std::vector<const SkeinNode*> stack{root.get()};
  while (!stack.empty()) {
    const SkeinNode* v = stack.back();
    stack.pop_back();
    ++n;
    for (const auto& c : v->children) stack.push_back(c.get());
  }
  return n;
}

bool is_descending_stack(const LinkDiagram& d) { return cmix(d).empty(); }

std::vector<int> step1_marks(const LinkDiagram& d) {
  require_generic(d);
  std::vector<int> marks;
  std::vector<bool> seen(d.n_crossings(), false);
  std::map<int, std::pair<int, int>> head_occ;  // arc -> (crossing, slot) of its arrival
  for (int x = 0; x < d.n_crossings(); ++x)
    for (int s = 0; s < 4; ++s)
      if (d.occ_is_head(x, s)) head_occ[d.crossings[x].quad[s]] = {x, s};
  for (int comp : d.ordering) {
    if (comp >= d.n_edged_components) continue;  // free circles meet no crossings
    int start = d.basepoints.at(comp);
    int cur = start;
    do {
      auto [cross, slot] = head_occ.at(cur);
      if (!seen[cross]) {
        seen[cross] = true;
        bool under_passage = slot == 0;
        if (under_passage && d.under_component(cross) != d.over_component(cross))
          marks.push_back(cross);
      }
      cur = d.crossings[cross].quad[(slot + 2) % 4];
    } while (cur != start);
  }
  return marks;
}

namespace {

std::unique_ptr<SkeinNode> grow_node(LinkDiagram diagram, SkeinEvent event, int crossing,
                                     int switches, int smooths, std::vector<int> pending) {
  auto node = std::make_unique<SkeinNode>();
  node->diagram = std::move(diagram);
  node->event = event;
  node->crossing = crossing;
  node->switches = switches;
  node->smooths = smooths;
  node->pending = std::move(pending);
  if (!node->pending.empty()) {
    int p = node->pending.front();
    std::vector<int> rest(node->pending.begin() + 1, node->pending.end());
    LinkDiagram switched = switch_crossing(node->diagram, p);
    node->children.push_back(grow_node(std::move(switched), SkeinEvent::switched, p,
                                       switches + 1, smooths, std::move(rest)));
    LinkDiagram smoothed = smooth_crossing(node->diagram, p);
    std::vector<int> fresh = step1_marks(smoothed);
    node->children.push_back(grow_node(std::move(smoothed), SkeinEvent::smoothed, p, switches,
                                       smooths + 1, std::move(fresh)));
  }
  return node;
}

}  // namespace

SkeinTree mark_and_decompose(const LinkDiagram& d) {
  SkeinTree tree;
  tree.root = grow_node(d, SkeinEvent::root, -1, 0, 0, step1_marks(d));
  return tree;
}

namespace {

LaurentPoly eval_node(const SkeinNode& v, const SkeinCoefficients& co) {
  if (v.is_leaf()) return co.initial(v.diagram);
  int p = v.pending.front();
  const SkeinNode& switched = *v.children[0];
  const SkeinNode& smoothed = *v.children[1];
  LaurentPoly f_switch = eval_node(switched, co);
  LaurentPoly f_zero = eval_node(smoothed, co);
  int eps = v.diagram.crossings[p].sign;
  const LinkDiagram& lp = eps > 0 ? v.diagram : switched.diagram;
  const LinkDiagram& lm = eps > 0 ? switched.diagram : v.diagram;
  LaurentPoly inf =
      co.rinf ? co.rinf(lp, lm, smoothed.diagram) : LaurentPoly::zero();
  if (eps > 0)
    return -(co.rplus.inverse() * (co.rminus * f_switch + co.rzero * f_zero + inf));
  return -(co.rminus.inverse() * (co.rplus * f_switch + co.rzero * f_zero + inf));
}

}  // namespace

LaurentPoly evaluate_generic(const SkeinTree& tree, const SkeinCoefficients& co) {
  return eval_node(*tree.root, co);
}

LaurentPoly evaluate_generic(const LinkDiagram& d, const SkeinCoefficients& co) {
  return evaluate_generic(mark_and_decompose(d), co);
}

LaurentPoly khovanov_of(const LinkDiagram& d) {
  return khovanov_polynomial(homology(build_cube(d)));
}

LaurentPoly jones_of(const LinkDiagram& d) {
  return euler_characteristic(build_cube(d)).divide_exact(q_plus_qinv());
}

SkeinCoefficients jones_coefficients() {
  SkeinCoefficients co;
  co.rplus = LaurentPoly::q_pow(-2);
  co.rminus = -LaurentPoly::q_pow(2);
  co.rzero = -(LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1));
  auto cache = std::make_shared<EvalCache>();
  co.initial = [cache](const LinkDiagram& stack) {
    LaurentPoly prod = LaurentPoly::one();
    for (int c = 0; c < stack.n_components(); ++c) {
      LinkDiagram knot = extract_component(stack, c);
      std::string key = serialize(knot);
      auto it = cache->kh.find(key);
      if (it == cache->kh.end()) it = cache->kh.emplace(key, jones_of(knot)).first;
      prod *= it->second;
    }
    return q_plus_qinv().pow(stack.n_components() - 1) * prod;
  };
  return co;
}

SkeinCoefficients theta_coefficients(DValue d) {
  SkeinCoefficients co = jones_coefficients();
  auto base_initial = co.initial;
  co.initial = [base_initial, d](const LinkDiagram& stack) {
    return d.pow(stack.n_components() - 1) * base_initial(stack);
  };
  return co;
}

LaurentPoly theta(const LinkDiagram& d, DValue dv) {
  return evaluate_generic(d, theta_coefficients(dv));
}

LaurentPoly theta(const LinkDiagram& d, long dvalue) { return theta(d, DValue::numeric(dvalue)); }

LaurentPoly kh_d_union(const LinkDiagram& d, DValue dv) {
  if (!mixed_crossings(d).empty())
    throw HasMixedCrossings("Kh_d union form needs a diagram without mixed crossings");
  return kh_d_split_value(d, dv, nullptr);
}

namespace {

LaurentPoly khdd_apply(const LinkDiagram& d, int p, std::vector<int> rest,
                       const ThetaParams& params, EvalCache* cache);

LaurentPoly khdd_eval(const LinkDiagram& d, const std::vector<int>& pending,
                      const ThetaParams& params, EvalCache* cache) {
  if (pending.empty()) return kh_d_split_value(d, params.d, cache);
  std::vector<int> rest(pending.begin() + 1, pending.end());
  return khdd_apply(d, pending.front(), std::move(rest), params, cache);
}

// One application of the deformed relation
//   Kh(L) = y^{2e} Kh(sigma L) - e y^e z d' Kh(s L) + d^{alpha(L)} C'(L, sigma L, s L)
// with C'(L, sigma L, s L) = e y^e Csym(s_P L, L-, L+).
LaurentPoly khdd_apply(const LinkDiagram& d, int p, std::vector<int> rest,
                       const ThetaParams& params, EvalCache* cache) {
  const int eps = d.crossings[p].sign;
  const LaurentPoly y = LaurentPoly::t_pow(1) * LaurentPoly::q_pow(2);
  const LaurentPoly tq = LaurentPoly::t_pow(1) * LaurentPoly::q_pow(1);
  const LaurentPoly z = tq - tq.inverse();

  LinkDiagram switched = switch_crossing(d, p);
  LinkDiagram smoothed = smooth_crossing(d, p);

  LaurentPoly f_switch = khdd_eval(switched, rest, params, cache);
  LaurentPoly f_smooth = khdd_eval(smoothed, step1_marks(smoothed), params, cache);

  LaurentPoly cprime = y.pow(eps) * csym_cached(d, p, cache) * Rat(eps);
  LaurentPoly d_alpha = params.d.pow(d.n_components());

  return y.pow(2 * eps) * f_switch -
         y.pow(eps) * z * params.dprime * f_smooth * Rat(eps) + d_alpha * cprime;
}

}  // namespace

LaurentPoly kh_ddprime_at(const LinkDiagram& d, int p, const ThetaParams& params,
                          EvalCache* cache) {
  std::vector<int> marks = step1_marks(d);
  if (std::find(marks.begin(), marks.end(), p) == marks.end())
    throw NotAMixedCrossing("crossing " + std::to_string(p) + " is not in Cmix");
  std::vector<int> rest;
  for (int m : marks)
    if (m != p) rest.push_back(m);
  EvalCache local;
  return khdd_apply(d, p, std::move(rest), params, cache ? cache : &local);
}

GammaSet parse_gamma_file(const std::string& text, const LinkDiagram& reference) {
  GammaSet out;
  std::istringstream in(text);
  std::string line;
  std::vector<int> current;
  for (int i = 0; i < reference.n_components(); ++i) current.push_back(i);
  while (std::getline(in, line)) {
    std::string s;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s[0] == '%') continue;
    if (s.rfind("#ordering:", 0) == 0) {
      current.clear();
      std::istringstream nums(s.substr(10));
      std::string tok;
      while (std::getline(nums, tok, ','))
        current.push_back(std::stoi(tok) - 1);  // file lists components 1-based
      continue;
    }
    LinkDiagram d = parse_pd(s).with_ordering(current);
    if (d.n_components() != reference.n_components())
      throw InputError("gamma diagram has a different number of components");
    out.by_ordering[current].push_back(std::move(d));
  }
  return out;
}

LaurentPoly kh_ddprime(const LinkDiagram& d, const ThetaParams& params, const GammaSet* gamma,
                       EvalCache* cache) {
  EvalCache local;
  if (!cache) cache = &local;
  if (is_descending_stack(d)) return kh_d_split_value(d, params.d, cache);

  const int r = d.n_components();
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i;
  LaurentPoly total;
  Rat orderings(0);
  do {
    LinkDiagram ordered = d.with_ordering(perm);
    std::vector<LinkDiagram> diagrams;
    if (gamma) {
      auto it = gamma->by_ordering.find(perm);
      if (it == gamma->by_ordering.end() || it->second.empty())
        throw EmptyGamma("no minimal diagrams supplied for an ordering");
      diagrams = it->second;
    } else {
      diagrams.push_back(ordered);
    }
    LaurentPoly per_ordering;
    for (const LinkDiagram& dia : diagrams) {
      std::vector<int> marks = step1_marks(dia);
      if (marks.empty())
        throw EmptyCmix("Cmix is empty for a diagram of a linked link");
      LaurentPoly per_diagram;
      for (int p : marks) per_diagram += kh_ddprime_at(dia, p, params, cache);
      per_ordering += per_diagram * (Rat(1) / Rat(static_cast<long>(marks.size())));
    }
    total += per_ordering * (Rat(1) / Rat(static_cast<long>(diagrams.size())));
    orderings += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total * (Rat(1) / orderings);
}

}  // namespace khoskein
