#include "vknot/planar_diagram.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <numeric>
#include <sstream>

#include "vknot/error.hpp"

namespace vknot {

std::size_t PlanarDiagram::count(CrossingKind kind) const noexcept {
  std::size_t n = 0;
  for (const auto& c : crossings) n += c.kind == kind;
  return n;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Unit direction of slot k, slots laid out counterclockwise from +x.
constexpr int kDx[4] = {1, 0, -1, 0};
constexpr int kDy[4] = {0, 1, 0, -1};

int cross_sign(int out_a, int out_b) {
  const int c = kDx[out_a] * kDy[out_b] - kDy[out_a] * kDx[out_b];
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

}  // namespace

PDTraversal traverse_pd(const PlanarDiagram& pd) {
  const std::size_t n_edges = pd.crossings.size() * 2;
  std::vector<std::vector<PDSlot>> where(n_edges);
  for (std::size_t x = 0; x < pd.crossings.size(); ++x) {
    for (int k = 0; k < 4; ++k) {
      const int label = pd.crossings[x].edges[static_cast<std::size_t>(k)];
      if (label < 1 || static_cast<std::size_t>(label) > n_edges)
        throw Error(ErrorCode::InvalidInput, "edge label out of range: " + std::to_string(label));
      where[static_cast<std::size_t>(label - 1)].push_back({x, k});
    }
  }
  for (std::size_t e = 0; e < n_edges; ++e)
    if (where[e].size() != 2)
      throw Error(ErrorCode::InvalidInput, "edge " + std::to_string(e + 1) + " must occur twice");

  PDTraversal tr;
  tr.edges.resize(n_edges);
  std::vector<bool> seen(n_edges, false);
  // Components are started from an edge touching slot 0 or 2 when they have
  // one, since that fixes the direction; otherwise labels decide.
  std::vector<std::size_t> starts;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t e = 0; e < n_edges; ++e) {
      const bool even = where[e][0].slot % 2 == 0 || where[e][1].slot % 2 == 0;
      if (even == (pass == 0)) starts.push_back(e);
    }
  for (std::size_t start : starts) {
    if (seen[start]) continue;
    // Orient the first edge: slot 0 is always incoming, slot 2 outgoing.
    // When both ends sit in odd slots, prefer the direction in which labels
    // increase.
    auto [a, b] = std::pair{where[start][0], where[start][1]};
    PDSlot head = b;
    if (a.slot == 0 || b.slot == 2) {
      head = a;
    } else if (a.slot % 2 == 1 && b.slot % 2 == 1) {
      const int after_a = pd.crossings[a.crossing].edges[static_cast<std::size_t>((a.slot + 2) % 4)];
      if (after_a == static_cast<int>(start) + 2) head = a;
    }
    std::vector<int> comp;
    std::size_t e = start;
    for (;;) {
      seen[e] = true;
      const auto& occ = where[e];
      const PDSlot tail = (occ[0].crossing == head.crossing && occ[0].slot == head.slot) ? occ[1] : occ[0];
      if (head.slot == 2 || tail.slot == 0)
        throw Error(ErrorCode::InvalidInput, "edge " + std::to_string(e + 1) + " runs against slot order");
      tr.edges[e] = {tail, head, tr.components.size()};
      comp.push_back(static_cast<int>(e + 1));
      const PDSlot out{head.crossing, (head.slot + 2) % 4};
      const auto ne = static_cast<std::size_t>(pd.crossings[out.crossing].edges[static_cast<std::size_t>(out.slot)] - 1);
      if (ne == start) {
        if (tr.edges[start].tail.crossing != out.crossing || tr.edges[start].tail.slot != out.slot)
          throw Error(ErrorCode::InvalidInput, "strand does not close up");
        break;
      }
      if (seen[ne]) throw Error(ErrorCode::InvalidInput, "inconsistent strand orientation");
      const auto& nocc = where[ne];
      head = (nocc[0].crossing == out.crossing && nocc[0].slot == out.slot) ? nocc[1] : nocc[0];
      e = ne;
    }
    std::rotate(comp.begin(), std::min_element(comp.begin(), comp.end()), comp.end());
    tr.components.push_back(std::move(comp));
  }
  // Report components by their lowest label.
  std::sort(tr.components.begin(), tr.components.end());
  for (std::size_t c = 0; c < tr.components.size(); ++c)
    for (int label : tr.components[c]) tr.edges[static_cast<std::size_t>(label - 1)].component = c;
  return tr;
}

int pd_crossing_sign(const PlanarDiagram& pd, const PDTraversal& tr, std::size_t crossing) {
  const auto& c = pd.crossings[crossing];
  const int label1 = c.edges[1];
  const auto& e1 = tr.edges[static_cast<std::size_t>(label1 - 1)];
  const bool slot1_out = e1.tail.crossing == crossing && e1.tail.slot == 1;
  const int over_out = slot1_out ? 1 : 3;
  return cross_sign(over_out, 2);
}

int pd_map_genus(const PlanarDiagram& pd) {
  const std::size_t v = pd.crossings.size();
  if (v == 0) return 0;
  std::map<int, std::vector<std::size_t>> darts_of;
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t k = 0; k < 4; ++k) darts_of[pd.crossings[x].edges[k]].push_back(4 * x + k);
  std::vector<std::size_t> alpha(4 * v);
  UnionFind uf(v);
  for (const auto& [label, ds] : darts_of) {
    if (ds.size() != 2) throw Error(ErrorCode::InvalidInput, "edge must occur twice");
    alpha[ds[0]] = ds[1];
    alpha[ds[1]] = ds[0];
    uf.unite(ds[0] / 4, ds[1] / 4);
  }
  std::vector<bool> used(4 * v, false);
  std::map<std::size_t, long> faces, verts;
  for (std::size_t d = 0; d < 4 * v; ++d) {
    if (used[d]) continue;
    ++faces[uf.find(d / 4)];
    std::size_t cur = d;
    while (!used[cur]) {
      used[cur] = true;
      const std::size_t o = alpha[cur];
      cur = 4 * (o / 4) + (o % 4 + 1) % 4;
    }
  }
  for (std::size_t x = 0; x < v; ++x) ++verts[uf.find(x)];
  long twice_genus = 0;
  for (const auto& [root, nv] : verts) twice_genus += 2 - (nv - 2 * nv + faces[root]);
  return static_cast<int>(twice_genus / 2);
}

GaussCode pd_to_gauss(const PlanarDiagram& pd) {
  const auto tr = traverse_pd(pd);
  std::optional<CodeKind> kind;
  for (const auto& c : pd.crossings) {
    if (c.kind == CrossingKind::Virtual) continue;
    const CodeKind k = c.kind == CrossingKind::Classical ? CodeKind::Classical : CodeKind::Flat;
    if (kind && *kind != k) throw Error(ErrorCode::InvalidInput, "diagram mixes classical and flat crossings");
    kind = k;
  }
  // Flat crossings: the strand met first plays the over role in the sign.
  std::vector<int> first_slot(pd.crossings.size(), -1);
  std::vector<Component> comps;
  for (const auto& labels : tr.components) {
    Component comp;
    for (int label : labels) {
      const auto head = tr.edges[static_cast<std::size_t>(label - 1)].head;
      const auto& c = pd.crossings[head.crossing];
      if (c.kind == CrossingKind::Virtual) continue;
      Token t;
      t.chord = static_cast<int>(head.crossing) + 1;
      if (c.kind == CrossingKind::Classical) {
        t.passage = head.slot == 0 ? Passage::Under : Passage::Over;
        t.sign = pd_crossing_sign(pd, tr, head.crossing);
      } else {
        t.passage = Passage::Flat;
        if (first_slot[head.crossing] < 0) first_slot[head.crossing] = head.slot;
        // Outgoing slot of each strand.
        const int a_out = (first_slot[head.crossing] + 2) % 4;
        const int other_in = (first_slot[head.crossing] + 1) % 4;
        const int other_label = c.edges[static_cast<std::size_t>(other_in)];
        const auto& oe = tr.edges[static_cast<std::size_t>(other_label - 1)];
        const bool other_in_is_head = oe.head.crossing == head.crossing && oe.head.slot == other_in;
        const int b_out = other_in_is_head ? (other_in + 2) % 4 : other_in;
        t.sign = cross_sign(a_out, b_out);
      }
      comp.push_back(t);
    }
    comps.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < pd.free_loops; ++i) comps.emplace_back();
  return GaussCode::from_components(std::move(comps), kind.value_or(CodeKind::Classical));
}

int inter_component_virtual_parity(const PlanarDiagram& pd) {
  const auto tr = traverse_pd(pd);
  int count = 0;
  for (const auto& c : pd.crossings) {
    if (c.kind != CrossingKind::Virtual) continue;
    const auto ca = tr.edges[static_cast<std::size_t>(c.edges[0] - 1)].component;
    const auto cb = tr.edges[static_cast<std::size_t>(c.edges[1] - 1)].component;
    count += ca != cb;
  }
  return count % 2;
}

PlanarDiagram parse_pd(std::string_view text) {
  PlanarDiagram pd;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "L") {
      std::size_t k = 0;
      if (!(ls >> k)) throw Error(ErrorCode::SyntaxError, "bad loop line: " + line);
      pd.free_loops += k;
      continue;
    }
    PDCrossing c;
    if (tag == "X") c.kind = CrossingKind::Classical;
    else if (tag == "V") c.kind = CrossingKind::Virtual;
    else if (tag == "F") c.kind = CrossingKind::Flat;
    else throw Error(ErrorCode::SyntaxError, "unknown crossing tag: " + tag);
    for (auto& e : c.edges)
      if (!(ls >> e)) throw Error(ErrorCode::SyntaxError, "crossing needs four edges: " + line);
    std::string extra;
    if (ls >> extra) throw Error(ErrorCode::SyntaxError, "trailing input: " + line);
    pd.crossings.push_back(c);
  }
  traverse_pd(pd);
  return pd;
}

std::string format_pd(const PlanarDiagram& pd) {
  std::ostringstream out;
  for (const auto& c : pd.crossings) {
    out << (c.kind == CrossingKind::Classical ? 'X' : c.kind == CrossingKind::Virtual ? 'V' : 'F');
    for (int e : c.edges) out << ' ' << e;
    out << '\n';
  }
  if (pd.free_loops) out << "L " << pd.free_loops << '\n';
  return out.str();
}

}  // namespace vknot
