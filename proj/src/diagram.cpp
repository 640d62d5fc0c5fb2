#include "khoskein/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace khoskein {
namespace {

struct OccRef {
  int crossing = -1;
  int slot = -1;
  friend auto operator<=>(const OccRef&, const OccRef&) = default;
};

using OccList = std::map<int, std::vector<OccRef>>;  // edge -> its occurrences

OccList collect_occurrences(const std::vector<Crossing>& crossings) {
  OccList occ;
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x)
    for (int s = 0; s < 4; ++s) occ[crossings[x].quad[s]].push_back(OccRef{x, s});
  return occ;
}

// Union-find over edge ids.
struct EdgeUnion {
  std::map<int, int> parent;
  void add(int e) { parent.emplace(e, e); }
  int find(int e) {
    int r = e;
    while (parent[r] != r) r = parent[r];
    while (parent[e] != r) e = std::exchange(parent[e], r);
    return r;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int slot_across(int slot) { return (slot + 2) % 4; }

// Walks the oriented strands and assigns component data. Quads must already
// be normalized (incoming under-strand in slot 0, sign set).
void finalize_components(LinkDiagram& d) {
  OccList occ = collect_occurrences(d.crossings);
  std::map<int, int> comp_raw;
  int next_comp = 0;
  for (const auto& [edge, occs] : occ) {
    if (comp_raw.count(edge)) continue;
    int cur = edge;
    while (!comp_raw.count(cur)) {
      comp_raw[cur] = next_comp;
      OccRef head{};
      bool found = false;
      for (const OccRef& o : occ.at(cur))
        if (d.occ_is_head(o.crossing, o.slot)) {
          head = o;
          found = true;
          break;
        }
      if (!found) throw InternalError("arc without arrival end");
      int t = slot_across(head.slot);
      cur = d.crossings[head.crossing].quad[t];
      if (d.occ_is_head(head.crossing, t))
        throw InternalError("strand continuation is not a departure end");
    }
    ++next_comp;
  }
  // Renumber components by ascending minimal edge id.
  std::map<int, int> min_edge_of;
  for (const auto& [edge, c] : comp_raw)
    if (!min_edge_of.count(c) || edge < min_edge_of[c]) min_edge_of[c] = edge;
  std::vector<std::pair<int, int>> order;  // (min edge, raw comp)
  for (const auto& [c, e] : min_edge_of) order.emplace_back(e, c);
  std::sort(order.begin(), order.end());
  std::map<int, int> renum;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) renum[order[i].second] = i;

  d.component_of_edge.clear();
  for (const auto& [edge, c] : comp_raw) d.component_of_edge[edge] = renum[c];
  d.n_edged_components = static_cast<int>(order.size());

  d.ordering.resize(d.n_components());
  std::iota(d.ordering.begin(), d.ordering.end(), 0);
  d.basepoints.clear();
  for (int i = 0; i < d.n_edged_components; ++i) d.basepoints[i] = order[i].first;
}

}  // namespace

int LinkDiagram::n_plus() const {
  int n = 0;
  for (const auto& c : crossings) n += c.sign > 0;
  return n;
}

int LinkDiagram::n_minus() const {
  int n = 0;
  for (const auto& c : crossings) n += c.sign < 0;
  return n;
}

int LinkDiagram::order_position(int component) const {
  for (int i = 0; i < static_cast<int>(ordering.size()); ++i)
    if (ordering[i] == component) return i;
  throw IndexOutOfRange("component not in ordering");
}

int LinkDiagram::under_component(int p) const {
  return component_of_edge.at(crossings.at(p).quad[0]);
}

int LinkDiagram::over_component(int p) const {
  return component_of_edge.at(crossings.at(p).quad[1]);
}

bool LinkDiagram::occ_is_head(int crossing, int slot) const {
  const int sign = crossings[crossing].sign;
  switch (slot) {
    case 0: return true;
    case 2: return false;
    case 1: return sign > 0;
    case 3: return sign < 0;
  }
  throw IndexOutOfRange("slot");
}

std::vector<int> LinkDiagram::component_edges(int component) const {
  std::vector<int> out;
  for (const auto& [e, c] : component_of_edge)
    if (c == component) out.push_back(e);
  return out;
}

std::vector<int> LinkDiagram::all_edges() const {
  std::vector<int> out;
  for (const auto& [e, c] : component_of_edge) out.push_back(e);
  return out;
}

LinkDiagram LinkDiagram::with_ordering(const std::vector<int>& new_ordering) const {
  if (static_cast<int>(new_ordering.size()) != n_components())
    throw LengthMismatch("ordering length != number of components");
  std::vector<int> sorted = new_ordering;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i) throw InputError("ordering is not a permutation of components");
  LinkDiagram d = *this;
  d.ordering = new_ordering;
  return d;
}

LinkDiagram LinkDiagram::with_basepoint(int component, int edge) const {
  if (component < 0 || component >= n_edged_components)
    throw IndexOutOfRange("basepoint component");
  auto it = component_of_edge.find(edge);
  if (it == component_of_edge.end() || it->second != component)
    throw InputError("basepoint edge does not lie on the component");
  LinkDiagram d = *this;
  d.basepoints[component] = edge;
  return d;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::array<int, 4> parse_quad(const std::string& tok) {
  if (tok.size() < 4 || (tok[0] != 'X' && tok[0] != 'x') || tok[1] != '(' || tok.back() != ')')
    throw MalformedToken(tok);
  std::vector<std::string> parts = split(tok.substr(2, tok.size() - 3), ',');
  if (parts.size() != 4) throw MalformedToken(tok);
  std::array<int, 4> quad{};
  for (int i = 0; i < 4; ++i) {
    const std::string& p = parts[i];
    if (p.empty() || !std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw MalformedToken(tok);
    long v = std::stol(p);
    if (v <= 0 || v > 1000000000) throw MalformedToken(tok);
    quad[i] = static_cast<int>(v);
  }
  return quad;
}

// Assigns head/tail to every arc end. Slot 0 arrives and slot 2 departs by
// convention; the over-strand slots are resolved by propagation. Components
// that never pass under anything are oriented by directing their lowest arc
// out of its first-listed position.
std::map<OccRef, bool> solve_orientation(const std::vector<Crossing>& crossings, const OccList& occ) {
  std::map<OccRef, bool> head;
  std::vector<OccRef> queue;
  auto assign = [&](OccRef o, bool v) {
    auto it = head.find(o);
    if (it != head.end()) {
      if (it->second != v)
        throw OrientationConflict("no consistent orientation at crossing " + std::to_string(o.crossing));
      return;
    }
    head[o] = v;
    queue.push_back(o);
  };
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x) {
    assign(OccRef{x, 0}, true);
    assign(OccRef{x, 2}, false);
  }
  auto propagate = [&] {
    while (!queue.empty()) {
      OccRef o = queue.back();
      queue.pop_back();
      bool v = head.at(o);
      const auto& occs = occ.at(crossings[o.crossing].quad[o.slot]);
      for (const OccRef& other : occs)
        if (other != o) assign(other, !v);
      if (o.slot == 1 || o.slot == 3) assign(OccRef{o.crossing, 4 - o.slot}, !v);
    }
  };
  propagate();
  for (const auto& [edge, occs] : occ) {
    if (head.count(occs.front())) continue;
    assign(occs.front(), false);  // departs from its first-listed position
    propagate();
  }
  return head;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  std::string s = strip_ws(text);
  if (s.empty()) throw MalformedToken("empty PD string");
  LinkDiagram d;
  std::vector<std::array<int, 4>> quads;
  for (const std::string& tok : split(s, ';')) {
    if (tok == "U" || tok == "u") {
      ++d.free_circles;
    } else {
      quads.push_back(parse_quad(tok));
    }
  }
  d.crossings.reserve(quads.size());
  for (const auto& q : quads) d.crossings.push_back(Crossing{q, 0});

  OccList occ = collect_occurrences(d.crossings);
  for (const auto& [edge, occs] : occ)
    if (occs.size() != 2)
      throw InconsistentWiring("edge " + std::to_string(edge) + " used " +
                               std::to_string(occs.size()) + " times");

  auto head = solve_orientation(d.crossings, occ);
  for (int x = 0; x < d.n_crossings(); ++x)
    d.crossings[x].sign = head.at(OccRef{x, 1}) ? +1 : -1;

  finalize_components(d);
  return d;
}

std::string serialize(const LinkDiagram& d) {
  std::vector<const Crossing*> sorted;
  for (const auto& c : d.crossings) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](const Crossing* a, const Crossing* b) {
    return *std::min_element(a->quad.begin(), a->quad.end()) <
           *std::min_element(b->quad.begin(), b->quad.end());
  });
  std::ostringstream out;
  bool first = true;
  for (const Crossing* c : sorted) {
    if (!first) out << ";";
    first = false;
    out << "X(" << c->quad[0] << "," << c->quad[1] << "," << c->quad[2] << "," << c->quad[3] << ")";
  }
  for (int i = 0; i < d.free_circles; ++i) {
    if (!first) out << ";";
    first = false;
    out << "U";
  }
  return out.str();
}

std::string diagram_to_json(const LinkDiagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : d.crossings)
    j["crossings"].push_back({c.quad[0], c.quad[1], c.quad[2], c.quad[3], c.sign});
  j["freeCircles"] = d.free_circles;
  nlohmann::json comps = nlohmann::json::object();
  for (const auto& [e, c] : d.component_of_edge) comps[std::to_string(e)] = c;
  j["components"] = comps;
  j["ordering"] = d.ordering;
  nlohmann::json bps = nlohmann::json::object();
  for (const auto& [c, e] : d.basepoints) bps[std::to_string(c)] = e;
  j["basepoints"] = bps;
  return j.dump();
}

// ---------------------------------------------------------------------------
// Resolutions

CircleSet resolve(const LinkDiagram& d, const Resolution& r) {
  if (static_cast<int>(r.bits.size()) != d.n_crossings())
    throw LengthMismatch("resolution has " + std::to_string(r.bits.size()) + " bits, diagram has " +
                         std::to_string(d.n_crossings()) + " crossings");
  EdgeUnion uf;
  for (const auto& c : d.crossings)
    for (int e : c.quad) uf.add(e);
  for (int p = 0; p < d.n_crossings(); ++p) {
    const auto& q = d.crossings[p].quad;
    char b = r.bits[p];
    if (b == '0') {
      uf.unite(q[0], q[3]);
      uf.unite(q[1], q[2]);
    } else if (b == '1') {
      uf.unite(q[0], q[1]);
      uf.unite(q[2], q[3]);
    } else {
      throw LengthMismatch("resolution bits must be 0/1");
    }
  }
  std::map<int, std::vector<int>> classes;  // root -> members
  for (const auto& [e, p] : uf.parent) classes[uf.find(e)].push_back(e);
  std::vector<int> mins;
  for (auto& [root, members] : classes) mins.push_back(*std::min_element(members.begin(), members.end()));
  std::sort(mins.begin(), mins.end());
  std::map<int, int> index_of_min;
  for (int i = 0; i < static_cast<int>(mins.size()); ++i) index_of_min[mins[i]] = i;

  CircleSet cs;
  cs.edge_circle_count = static_cast<int>(classes.size());
  cs.count = cs.edge_circle_count + d.free_circles;
  for (auto& [root, members] : classes) {
    int idx = index_of_min[*std::min_element(members.begin(), members.end())];
    for (int e : members) cs.circle_of_edge[e] = idx;
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Switching

LinkDiagram switch_crossing(const LinkDiagram& d, int p) {
  if (p < 0 || p >= d.n_crossings()) throw IndexOutOfRange("crossing " + std::to_string(p));
  LinkDiagram out = d;
  const auto& q = d.crossings[p].quad;
  if (d.crossings[p].sign > 0)
    out.crossings[p].quad = {q[1], q[2], q[3], q[0]};
  else
    out.crossings[p].quad = {q[3], q[0], q[1], q[2]};
  out.crossings[p].sign = -d.crossings[p].sign;
  return out;
}

// ---------------------------------------------------------------------------
// Surgery: removing crossings and rewiring arcs through bridges.

namespace {

struct ChainArc {
  int arc;
  bool forward;  // traversed tail -> head while walking the chain
};

struct Chain {
  std::vector<ChainArc> members;
  OccRef end_a, end_b;  // old-diagram occurrences at kept crossings
  int new_id = 0;
  bool consistent = true;
};

struct SurgeryOutcome {
  std::vector<Chain> chains;
  std::vector<std::vector<int>> closures;
  std::vector<int> kept;                 // old crossing indices in order
  std::map<int, int> new_index_of_old;   // kept old crossing -> new index
  std::map<int, int> edge_map;
  std::map<int, int> chain_of_arc;       // old arc -> index into chains
};

OccRef other_occurrence(const OccList& occ, int edge, OccRef here) {
  const auto& v = occ.at(edge);
  if (v.size() != 2) throw InternalError("arc without exactly two ends");
  return v[0] == here ? v[1] : v[0];
}

SurgeryOutcome run_surgery(const LinkDiagram& d, const std::set<int>& removed,
                           const std::map<OccRef, OccRef>& bridge) {
  OccList occ = collect_occurrences(d.crossings);
  SurgeryOutcome out;
  for (int x = 0; x < d.n_crossings(); ++x)
    if (!removed.count(x)) {
      out.new_index_of_old[x] = static_cast<int>(out.kept.size());
      out.kept.push_back(x);
    }

  std::set<OccRef> visited;
  // Open chains, started from every arc end attached to a kept crossing.
  for (int x : out.kept) {
    for (int s = 0; s < 4; ++s) {
      OccRef start{x, s};
      if (visited.count(start)) continue;
      Chain chain;
      chain.end_a = start;
      OccRef cur = start;
      while (true) {
        int arc = d.crossings[cur.crossing].quad[cur.slot];
        OccRef other = other_occurrence(occ, arc, cur);
        visited.insert(cur);
        visited.insert(other);
        chain.members.push_back(ChainArc{arc, !d.occ_is_head(cur.crossing, cur.slot)});
        if (!removed.count(other.crossing)) {
          chain.end_b = other;
          break;
        }
        auto it = bridge.find(other);
        if (it == bridge.end()) throw InternalError("open chain reached an unbridged slot");
        cur = it->second;
      }
      for (std::size_t i = 1; i < chain.members.size(); ++i)
        if (chain.members[i].forward != chain.members[0].forward) chain.consistent = false;
      out.chains.push_back(std::move(chain));
    }
  }
  // Closed or deleted chains among the remaining arc ends.
  for (int x : std::vector<int>(removed.begin(), removed.end())) {
    for (int s = 0; s < 4; ++s) {
      OccRef start{x, s};
      if (visited.count(start)) continue;
      std::vector<int> members;
      bool deleted = !bridge.count(start);
      OccRef cur = start;
      while (!deleted) {
        int arc = d.crossings[cur.crossing].quad[cur.slot];
        OccRef other = other_occurrence(occ, arc, cur);
        visited.insert(cur);
        visited.insert(other);
        members.push_back(arc);
        auto it = bridge.find(other);
        if (it == bridge.end()) {
          deleted = true;
          visited.insert(other);
          break;
        }
        if (it->second == start) break;  // circle closed
        cur = it->second;
      }
      if (deleted) {
        // Arcs of a dropped strand; walk both directions marking visited.
        std::vector<OccRef> stack{start};
        while (!stack.empty()) {
          OccRef o = stack.back();
          stack.pop_back();
          if (visited.count(o)) continue;
          visited.insert(o);
          int arc = d.crossings[o.crossing].quad[o.slot];
          OccRef other = other_occurrence(occ, arc, o);
          if (!visited.count(other)) stack.push_back(other);
          auto it = bridge.find(other);
          if (it != bridge.end()) stack.push_back(it->second);
        }
      } else if (!members.empty()) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.closures.push_back(std::move(members));
      }
    }
  }
  std::sort(out.closures.begin(), out.closures.end());

  for (int i = 0; i < static_cast<int>(out.chains.size()); ++i) {
    Chain& chain = out.chains[i];
    int min_arc = chain.members.front().arc;
    for (const ChainArc& m : chain.members) min_arc = std::min(min_arc, m.arc);
    chain.new_id = min_arc;
    for (const ChainArc& m : chain.members) {
      out.edge_map[m.arc] = min_arc;
      out.chain_of_arc[m.arc] = i;
    }
  }
  return out;
}

// Rebuilds a LinkDiagram from surgery output. With inherit_orientation the
// chains must all be direction-consistent and quads survive untouched; the
// canonical mode rewalks every component from its lowest arc.
LinkDiagram assemble(const LinkDiagram& old, const SurgeryOutcome& out, bool inherit_orientation,
                     int base_free_circles) {
  LinkDiagram d;
  d.free_circles = base_free_circles + static_cast<int>(out.closures.size());
  d.crossings.reserve(out.kept.size());
  for (int x : out.kept) {
    Crossing c = old.crossings[x];
    for (int s = 0; s < 4; ++s) c.quad[s] = out.edge_map.at(c.quad[s]);
    d.crossings.push_back(c);
  }

  if (inherit_orientation) {
    for (const Chain& chain : out.chains)
      if (!chain.consistent)
        throw InternalError("orientation-preserving surgery produced an inconsistent chain");
    finalize_components(d);
    return d;
  }

  // Canonical reorientation. Desired direction of each new arc: the one that
  // keeps its lowest member's original direction.
  std::map<int, OccRef> desired_head;  // new arc -> head occurrence (new indices)
  for (const Chain& chain : out.chains) {
    bool min_forward = true;
    for (const ChainArc& m : chain.members)
      if (m.arc == chain.new_id) min_forward = m.forward;
    OccRef head_old = min_forward ? chain.end_b : chain.end_a;
    desired_head[chain.new_id] = OccRef{out.new_index_of_old.at(head_old.crossing), head_old.slot};
  }

  // Undirected components of the new quads.
  EdgeUnion comp;
  for (const auto& c : d.crossings) {
    for (int e : c.quad) comp.add(e);
    comp.unite(c.quad[0], c.quad[2]);
    comp.unite(c.quad[1], c.quad[3]);
  }
  std::map<int, std::vector<int>> comps;
  for (const auto& [e, p] : comp.parent) comps[comp.find(e)].push_back(e);

  OccList occ_new = collect_occurrences(d.crossings);
  std::map<OccRef, bool> head_status;
  for (auto& [root, members] : comps) {
    int anchor = *std::min_element(members.begin(), members.end());
    OccRef cur = desired_head.at(anchor);
    while (!head_status.count(cur)) {
      head_status[cur] = true;
      OccRef depart{cur.crossing, slot_across(cur.slot)};
      head_status[depart] = false;
      int next_arc = d.crossings[depart.crossing].quad[depart.slot];
      cur = other_occurrence(occ_new, next_arc, depart);
    }
  }

  for (int x = 0; x < d.n_crossings(); ++x) {
    Crossing& c = d.crossings[x];
    std::array<bool, 4> h{};
    for (int s = 0; s < 4; ++s) h[s] = head_status.at(OccRef{x, s});
    if (!h[0]) {
      c.quad = {c.quad[2], c.quad[3], c.quad[0], c.quad[1]};
      h = {h[2], h[3], h[0], h[1]};
    }
    if (!h[0] || h[2] || h[1] == h[3]) throw InternalError("bad orientation after surgery");
    c.sign = h[1] ? +1 : -1;
  }
  finalize_components(d);
  return d;
}

// Ordering and basepoint inheritance shared by the smoothing operations.
void inherit_metadata(const LinkDiagram& old, const SurgeryOutcome& out, LinkDiagram& d,
                      int base_free_circles) {
  // Origin components (old indices) of each new component.
  std::map<int, std::set<int>> origins;
  for (const Chain& chain : out.chains) {
    int new_comp = d.component_of_edge.at(chain.new_id);
    for (const ChainArc& m : chain.members)
      origins[new_comp].insert(old.component_of_edge.at(m.arc));
  }
  for (int k = 0; k < base_free_circles; ++k)
    origins[d.n_edged_components + k] = {old.n_edged_components + k};
  for (int k = 0; k < static_cast<int>(out.closures.size()); ++k) {
    std::set<int> o;
    for (int arc : out.closures[k]) o.insert(old.component_of_edge.at(arc));
    origins[d.n_edged_components + base_free_circles + k] = o;
  }

  // New ordering: walk the old beta-order; a component created from several
  // old ones sits at the position of the earliest (the merged component
  // inherits its numbering from the smaller of the components involved).
  std::vector<int> new_order;
  std::set<int> placed;
  for (int old_comp : old.ordering) {
    std::vector<int> at_this;
    for (const auto& [nc, os] : origins)
      if (!placed.count(nc) && os.count(old_comp)) {
        bool earliest = true;
        for (int o : os)
          if (old.order_position(o) < old.order_position(old_comp)) earliest = false;
        if (earliest) at_this.push_back(nc);
      }
    std::sort(at_this.begin(), at_this.end());
    for (int nc : at_this) {
      new_order.push_back(nc);
      placed.insert(nc);
    }
  }
  if (static_cast<int>(new_order.size()) != d.n_components())
    throw InternalError("component inheritance lost a component");
  d.ordering = new_order;

  // Basepoints: the merged component takes the basepoint of its
  // smallest-in-order origin, remapped through the surgery; fall back to the
  // lowest arc when the old basepoint did not survive on this component.
  for (int nc = 0; nc < d.n_edged_components; ++nc) {
    int best_old = -1;
    for (int o : origins[nc])
      if (o < old.n_edged_components &&
          (best_old < 0 || old.order_position(o) < old.order_position(best_old)))
        best_old = o;
    int bp = -1;
    if (best_old >= 0) {
      auto it = old.basepoints.find(best_old);
      if (it != old.basepoints.end()) {
        auto jt = out.edge_map.find(it->second);
        if (jt != out.edge_map.end() && d.component_of_edge.at(jt->second) == nc) bp = jt->second;
      }
    }
    if (bp < 0) {
      auto edges = d.component_edges(nc);
      bp = *std::min_element(edges.begin(), edges.end());
    }
    d.basepoints[nc] = bp;
  }
}

SmoothResult smooth_impl(const LinkDiagram& d, int p, bool oriented) {
  if (p < 0 || p >= d.n_crossings()) throw IndexOutOfRange("crossing " + std::to_string(p));
  const bool zero_table = oriented ? (d.crossings[p].sign > 0) : (d.crossings[p].sign < 0);
  // 0-smoothing joins a-d and b-c; 1-smoothing joins a-b and c-d.
  std::array<std::pair<int, int>, 2> pairs =
      zero_table ? std::array<std::pair<int, int>, 2>{{{0, 3}, {1, 2}}}
                 : std::array<std::pair<int, int>, 2>{{{0, 1}, {2, 3}}};
  std::map<OccRef, OccRef> bridge;
  for (auto [s1, s2] : pairs) {
    bridge[OccRef{p, s1}] = OccRef{p, s2};
    bridge[OccRef{p, s2}] = OccRef{p, s1};
  }
  SurgeryOutcome out = run_surgery(d, {p}, bridge);
  SmoothResult res;
  res.diagram = assemble(d, out, oriented, d.free_circles);
  inherit_metadata(d, out, res.diagram, d.free_circles);
  res.edge_map = out.edge_map;
  res.closed_classes = out.closures;
  return res;
}

}  // namespace

SmoothResult smooth_oriented(const LinkDiagram& d, int p) { return smooth_impl(d, p, true); }

SmoothResult smooth_disoriented(const LinkDiagram& d, int p) { return smooth_impl(d, p, false); }

LinkDiagram smooth_crossing(const LinkDiagram& d, int p) { return smooth_oriented(d, p).diagram; }

std::vector<int> mixed_crossings(const LinkDiagram& d) {
  std::vector<int> out;
  for (int p = 0; p < d.n_crossings(); ++p)
    if (d.under_component(p) != d.over_component(p)) out.push_back(p);
  return out;
}

std::vector<int> cmix(const LinkDiagram& d) {
  std::vector<int> out;
  for (int p : mixed_crossings(d))
    if (d.order_position(d.under_component(p)) < d.order_position(d.over_component(p)))
      out.push_back(p);
  return out;
}

LinkDiagram extract_component(const LinkDiagram& d, int component) {
  if (component < 0 || component >= d.n_components())
    throw IndexOutOfRange("component " + std::to_string(component));
  if (component >= d.n_edged_components) {
    LinkDiagram u;
    u.free_circles = 1;
    finalize_components(u);
    return u;
  }
  std::set<int> removed;
  std::map<OccRef, OccRef> bridge;
  for (int p = 0; p < d.n_crossings(); ++p) {
    bool under_in = d.under_component(p) == component;
    bool over_in = d.over_component(p) == component;
    if (under_in && over_in) continue;
    removed.insert(p);
    if (under_in) {
      bridge[OccRef{p, 0}] = OccRef{p, 2};
      bridge[OccRef{p, 2}] = OccRef{p, 0};
    }
    if (over_in) {
      bridge[OccRef{p, 1}] = OccRef{p, 3};
      bridge[OccRef{p, 3}] = OccRef{p, 1};
    }
  }
  SurgeryOutcome out = run_surgery(d, removed, bridge);
  // Drop everything that is not the requested component.
  SurgeryOutcome filtered = out;
  filtered.chains.clear();
  filtered.edge_map.clear();
  filtered.chain_of_arc.clear();
  for (const Chain& chain : out.chains)
    if (d.component_of_edge.at(chain.members.front().arc) == component) {
      for (const ChainArc& m : chain.members) filtered.edge_map[m.arc] = chain.new_id;
      filtered.chains.push_back(chain);
    }
  filtered.closures.clear();
  for (const auto& members : out.closures)
    if (d.component_of_edge.at(members.front()) == component) filtered.closures.push_back(members);
  return assemble(d, filtered, true, 0);
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  int shift = 0;
  for (const auto& c : a.crossings)
    for (int e : c.quad) shift = std::max(shift, e);
  LinkDiagram d;
  d.free_circles = a.free_circles + b.free_circles;
  d.crossings = a.crossings;
  for (const auto& c : b.crossings) {
    Crossing nc = c;
    for (int& e : nc.quad) e += shift;
    d.crossings.push_back(nc);
  }
  finalize_components(d);
  return d;
}

}  // namespace khoskein
