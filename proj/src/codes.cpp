#include "vknot/codes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "vknot/error.hpp"

namespace vknot {

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

void require_signed(const GaussCode& code, const char* what) {
  if (code.kind() == CodeKind::Free)
    throw Error(ErrorCode::InvalidInput, std::string(what) + " needs a signed code");
}

// Darts: 2g is the strand arriving at position g, 2g+1 the strand leaving it.
std::size_t dart_in(std::size_t g) { return 2 * g; }
std::size_t dart_out(std::size_t g) { return 2 * g + 1; }

// Counterclockwise darts around the crossing of `id`.
std::array<std::size_t, 4> rotation(const CodeLayout& lay, int id) {
  const auto& ch = lay.chord(id);
  if (ch.sign > 0) return {dart_in(ch.under), dart_out(ch.over), dart_out(ch.under), dart_in(ch.over)};
  return {dart_in(ch.under), dart_in(ch.over), dart_out(ch.under), dart_out(ch.over)};
}

}  // namespace

int carrier_genus(const GaussCode& code) {
  require_signed(code, "carrier genus");
  const CodeLayout lay(code);
  const std::size_t n = lay.chord_count();
  if (n == 0) return 0;
  const std::size_t darts = 2 * lay.size();
  std::vector<std::size_t> sigma(darts), alpha(darts), owner(darts);
  for (int id = 1; id <= static_cast<int>(n); ++id) {
    const auto r = rotation(lay, id);
    for (std::size_t k = 0; k < 4; ++k) {
      sigma[r[k]] = r[(k + 1) % 4];
      owner[r[k]] = static_cast<std::size_t>(id - 1);
    }
  }
  UnionFind uf(n);
  for (std::size_t g = 0; g < lay.size(); ++g) {
    alpha[dart_out(g)] = dart_in(lay.next(g));
    alpha[dart_in(lay.next(g))] = dart_out(g);
    uf.unite(static_cast<std::size_t>(lay.token(g).chord - 1),
             static_cast<std::size_t>(lay.token(lay.next(g)).chord - 1));
  }
  std::map<std::size_t, long> faces, verts;
  std::vector<bool> used(darts, false);
  for (std::size_t d = 0; d < darts; ++d) {
    if (used[d]) continue;
    ++faces[uf.find(owner[d])];
    for (std::size_t cur = d; !used[cur]; cur = sigma[alpha[cur]]) used[cur] = true;
  }
  for (std::size_t c = 0; c < n; ++c) ++verts[uf.find(c)];
  long twice = 0;
  for (const auto& [root, v] : verts) twice += 2 + v - faces[root];
  return static_cast<int>(twice / 2);
}

IntersectionGraph intersection_graph(const GaussCode& code) {
  if (code.component_count() != 1)
    throw Error(ErrorCode::MultiComponent, "intersection graph needs one component");
  const CodeLayout lay(code);
  IntersectionGraph g;
  const int n = static_cast<int>(lay.chord_count());
  std::vector<std::pair<std::size_t, std::size_t>> span(static_cast<std::size_t>(n));
  for (int id = 1; id <= n; ++id) {
    const auto& ch = lay.chord(id);
    span[static_cast<std::size_t>(id - 1)] = std::minmax(ch.over, ch.under);
    g.vertices.push_back(id);
    g.labels.push_back(ch.sign);
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const auto [a0, a1] = span[static_cast<std::size_t>(a - 1)];
      const auto [b0, b1] = span[static_cast<std::size_t>(b - 1)];
      const bool b0_in = a0 < b0 && b0 < a1;
      const bool b1_in = a0 < b1 && b1 < a1;
      if (b0_in != b1_in) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

GaussCode project_flat(const GaussCode& code) {
  if (code.kind() == CodeKind::Flat) return code;
  require_signed(code, "flat projection");
  const CodeLayout lay(code);
  auto comps = code.components();
  for (auto& comp : comps) {
    for (auto& tok : comp) {
      const auto& ch = lay.chord(tok.chord);
      // The stored sign is taken with the first occurrence as over.
      const bool over_first = ch.over < ch.under;
      tok.sign = over_first ? ch.sign : -ch.sign;
      tok.passage = Passage::Flat;
    }
  }
  return GaussCode::from_components(std::move(comps), CodeKind::Flat);
}

GaussCode project_free(const GaussCode& code) {
  auto comps = code.components();
  for (auto& comp : comps)
    for (auto& tok : comp) {
      tok.passage = Passage::Free;
      tok.sign = 0;
    }
  return GaussCode::from_components(std::move(comps), CodeKind::Free);
}

namespace {

// Edge labels: the edge entering position g is labelled g + 1.
PlanarDiagram realize_planar(const GaussCode& code, const CodeLayout& lay) {
  PlanarDiagram pd;
  pd.free_loops = lay.free_loops();
  const auto in = [&](std::size_t g) { return static_cast<int>(g + 1); };
  const auto out = [&](std::size_t g) { return static_cast<int>(lay.next(g) + 1); };
  const auto kind = code.kind() == CodeKind::Flat ? CrossingKind::Flat : CrossingKind::Classical;
  for (int id = 1; id <= static_cast<int>(lay.chord_count()); ++id) {
    const auto& ch = lay.chord(id);
    PDCrossing c;
    c.kind = kind;
    if (ch.sign > 0) c.edges = {in(ch.under), out(ch.over), out(ch.under), in(ch.over)};
    else c.edges = {in(ch.under), in(ch.over), out(ch.under), out(ch.over)};
    pd.crossings.push_back(c);
  }
  return pd;
}

// Half-circle in the plane between two points on the x axis, travelled from
// `from` to `to`, above or below the axis.
struct Arc {
  double from = 0;
  double to = 0;
  bool upper = true;
  double lo() const { return std::min(from, to); }
  double hi() const { return std::max(from, to); }
  double centre() const { return (from + to) / 2; }
};

bool interleave(const Arc& a, const Arc& b) {
  if (a.upper != b.upper) return false;
  return (a.lo() < b.lo() && b.lo() < a.hi() && a.hi() < b.hi()) ||
         (b.lo() < a.lo() && a.lo() < b.hi() && b.hi() < a.hi());
}

double meet_x(const Arc& a, const Arc& b) {
  return (b.from * b.to - a.from * a.to) / ((b.from + b.to) - (a.from + a.to));
}

struct Dir {
  double dx = 0;
  double dy = 0;
};

Dir tangent(const Arc& a, double x) {
  const double r = (a.hi() - a.lo()) / 2;
  const double c = a.centre();
  const double y = std::sqrt(std::max(0.0, r * r - (x - c) * (x - c))) * (a.upper ? 1 : -1);
  const bool rightward = a.from < a.to;
  if (a.upper == rightward) return {y, -(x - c)};
  return {-y, x - c};
}

// A strand passing through a crossing, in travel order along its component.
struct Passing {
  std::size_t crossing = 0;
  Dir dir;
  bool under = false;  // classical under strand or second flat occurrence
};

struct Drawing {
  std::vector<CrossingKind> kinds;
  std::vector<std::vector<Passing>> strands;  // one per component with tokens
};

class ArcLayout {
 public:
  ArcLayout(const CodeLayout& lay, bool flat, unsigned jitter)
      : lay_(lay), flat_(flat), jitter_(jitter) {}

  double x_at(std::size_t g, int slot) const {
    // slot 0 and 2 are the approach and departure points of an excursion,
    // slot 1 the crossing point itself.
    const double wobble = static_cast<double>((g * 7 + jitter_ * 13) % 11) / 11.0;
    return 100.0 * static_cast<double>(g) + 20.0 + 30.0 * slot + wobble * 9.0;
  }

  bool axis_over(std::size_t g) const {
    const auto& tok = lay_.token(g);
    if (!flat_) return tok.passage == Passage::Over;
    return lay_.chord(tok.chord).over == g;
  }

  std::pair<Arc, Arc> excursion(int id, std::size_t host) const {
    const auto& ch = lay_.chord(id);
    const std::size_t away = host == ch.over ? ch.under : ch.over;
    const bool up = axis_over(host) == (ch.sign > 0);
    const Arc first{x_at(away, 0), x_at(host, 1), !up};
    const Arc second{x_at(host, 1), x_at(away, 2), up};
    return {first, second};
  }

  Drawing draw() {
    const int n = static_cast<int>(lay_.chord_count());
    std::vector<Arc> fixed;
    std::vector<std::size_t> comp_first(lay_.component_count(), SIZE_MAX), comp_last(lay_.component_count(), 0);
    for (std::size_t g = 0; g < lay_.size(); ++g) {
      const auto c = lay_.component_of(g);
      comp_first[c] = std::min(comp_first[c], g);
      comp_last[c] = std::max(comp_last[c], g);
    }
    std::vector<Arc> closing(lay_.component_count());
    for (std::size_t c = 0; c < lay_.component_count(); ++c) {
      if (comp_first[c] == SIZE_MAX) continue;
      closing[c] = Arc{100.0 * static_cast<double>(comp_last[c] + 1) - 1,
                       100.0 * static_cast<double>(comp_first[c]) + 1, true};
      fixed.push_back(closing[c]);
    }
    host_.assign(static_cast<std::size_t>(n), 0);
    for (int id = 1; id <= n; ++id) {
      const auto& ch = lay_.chord(id);
      std::size_t best = ch.over;
      long best_cost = -1;
      for (std::size_t h : {std::min(ch.over, ch.under), std::max(ch.over, ch.under)}) {
        const auto [a1, a2] = excursion(id, h);
        long cost = 0;
        for (const auto& f : fixed) cost += interleave(a1, f) + interleave(a2, f);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best = h;
        }
      }
      host_[static_cast<std::size_t>(id - 1)] = best;
      const auto [a1, a2] = excursion(id, best);
      fixed.push_back(a1);
      fixed.push_back(a2);
    }

    // Collect every arc with the component-order key of where it is travelled.
    struct Travelled {
      Arc arc;
      std::vector<std::pair<double, std::size_t>> hits;  // (x, crossing)
    };
    std::vector<Travelled> arcs;
    std::map<std::pair<std::size_t, int>, std::size_t> arc_of;  // (position, 0|1) or (comp, 2)
    for (int id = 1; id <= n; ++id) {
      const std::size_t host = host_[static_cast<std::size_t>(id - 1)];
      const auto& ch = lay_.chord(id);
      const std::size_t away = host == ch.over ? ch.under : ch.over;
      const auto [a1, a2] = excursion(id, host);
      arc_of[{away, 0}] = arcs.size();
      arcs.push_back({a1, {}});
      arc_of[{away, 1}] = arcs.size();
      arcs.push_back({a2, {}});
    }
    for (std::size_t c = 0; c < lay_.component_count(); ++c) {
      if (comp_first[c] == SIZE_MAX) continue;
      arc_of[{c, 2}] = arcs.size();
      arcs.push_back({closing[c], {}});
    }

    Drawing d;
    d.kinds.assign(static_cast<std::size_t>(n), flat_ ? CrossingKind::Flat : CrossingKind::Classical);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        if (!interleave(arcs[i].arc, arcs[j].arc)) continue;
        const double x = meet_x(arcs[i].arc, arcs[j].arc);
        const std::size_t id = d.kinds.size();
        d.kinds.push_back(CrossingKind::Virtual);
        arcs[i].hits.emplace_back(x, id);
        arcs[j].hits.emplace_back(x, id);
      }
    }
    for (auto& a : arcs) {
      const bool rightward = a.arc.from < a.arc.to;
      std::sort(a.hits.begin(), a.hits.end(), [&](const auto& p, const auto& q) {
        return rightward ? p.first < q.first : p.first > q.first;
      });
      for (std::size_t k = 1; k < a.hits.size(); ++k)
        if (std::abs(a.hits[k].first - a.hits[k - 1].first) < 1e-6) degenerate_ = true;
    }

    const auto emit = [&](std::vector<Passing>& strand, const Travelled& t) {
      for (const auto& [x, id] : t.hits) strand.push_back({id, tangent(t.arc, x), false});
    };
    for (std::size_t c = 0; c < lay_.component_count(); ++c) {
      if (comp_first[c] == SIZE_MAX) continue;
      std::vector<Passing> strand;
      for (std::size_t g = comp_first[c]; g <= comp_last[c]; ++g) {
        const int id = lay_.token(g).chord;
        const auto& ch = lay_.chord(id);
        const bool second = flat_ ? ch.under == g : lay_.token(g).passage == Passage::Under;
        if (host_[static_cast<std::size_t>(id - 1)] == g) {
          strand.push_back({static_cast<std::size_t>(id - 1), {1, 0}, second});
        } else {
          const auto& a1 = arcs[arc_of.at({g, 0})];
          const auto& a2 = arcs[arc_of.at({g, 1})];
          emit(strand, a1);
          strand.push_back({static_cast<std::size_t>(id - 1), {0, a2.arc.upper ? 1.0 : -1.0}, second});
          emit(strand, a2);
        }
      }
      emit(strand, arcs[arc_of.at({c, 2})]);
      d.strands.push_back(std::move(strand));
    }
    return d;
  }

  bool degenerate() const { return degenerate_; }

 private:
  const CodeLayout& lay_;
  bool flat_;
  unsigned jitter_;
  std::vector<std::size_t> host_;
  bool degenerate_ = false;
};

PlanarDiagram assemble(const Drawing& d, std::size_t free_loops) {
  struct HalfEdge {
    double angle = 0;
    int label = 0;
    bool incoming = false;
    bool under = false;
    std::size_t strand_rank = 0;  // order in which strands first reach the crossing
  };
  std::vector<std::vector<HalfEdge>> at(d.kinds.size());
  int base = 0;
  for (const auto& strand : d.strands) {
    const int k = static_cast<int>(strand.size());
    for (int i = 0; i < k; ++i) {
      const auto& p = strand[static_cast<std::size_t>(i)];
      const int in_label = base + i + 1;
      const int out_label = base + (i + 1) % k + 1;
      auto& list = at[p.crossing];
      const std::size_t rank = list.size() / 2;
      list.push_back({std::atan2(-p.dir.dy, -p.dir.dx), in_label, true, p.under, rank});
      list.push_back({std::atan2(p.dir.dy, p.dir.dx), out_label, false, p.under, rank});
    }
    base += k;
  }
  PlanarDiagram pd;
  pd.free_loops = free_loops;
  for (std::size_t x = 0; x < at.size(); ++x) {
    auto list = at[x];
    if (list.size() != 4) throw Error(ErrorCode::InvalidInput, "realization lost a crossing");
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.angle < b.angle; });
    std::size_t start = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const bool pick = d.kinds[x] == CrossingKind::Virtual ? list[k].strand_rank == 0 : list[k].under;
      if (list[k].incoming && pick) start = k;
    }
    PDCrossing c;
    c.kind = d.kinds[x];
    for (std::size_t k = 0; k < 4; ++k) c.edges[k] = list[(start + k) % 4].label;
    pd.crossings.push_back(c);
  }
  return pd;
}

}  // namespace

PlanarDiagram realize(const GaussCode& code) {
  require_signed(code, "realization");
  const CodeLayout lay(code);
  if (carrier_genus(code) == 0) return realize_planar(code, lay);
  for (unsigned jitter = 0; jitter < 64; ++jitter) {
    ArcLayout layout(lay, code.kind() == CodeKind::Flat, jitter);
    auto drawing = layout.draw();
    if (layout.degenerate()) continue;
    return assemble(drawing, lay.free_loops());
  }
  throw Error(ErrorCode::InvalidInput, "no generic drawing found");
}

DiagramStats diagram_stats(const GaussCode& code) {
  DiagramStats s;
  s.crossings = code.chord_count();
  s.components = code.component_count();
  if (code.kind() == CodeKind::Free) return s;
  s.genus = carrier_genus(code);
  s.virtual_crossings = realize(code).count(CrossingKind::Virtual);
  return s;
}

GaussCode rotate_component(const GaussCode& code, std::size_t component, std::size_t shift) {
  if (component >= code.component_count())
    throw Error(ErrorCode::IndexOutOfRange, "no component " + std::to_string(component));
  auto comps = code.components();
  auto& comp = comps[component];
  if (comp.empty()) return code;
  shift %= comp.size();
  if (code.kind() == CodeKind::Flat) {
    // A chord with both ends in this component changes occurrence order iff
    // exactly one end moves from behind the cut to the front.
    std::map<int, int> moved;
    for (std::size_t i = 0; i < comp.size(); ++i) moved[comp[i].chord] += i >= shift ? 0 : 1;
    std::map<int, int> count;
    for (const auto& t : comp) ++count[t.chord];
    for (auto& t : comp)
      if (count[t.chord] == 2 && moved[t.chord] == 1) t.sign = -t.sign;
  }
  std::rotate(comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(shift), comp.end());
  return GaussCode::from_components(std::move(comps), code.kind());
}

GaussCode canonical_rotation(const GaussCode& code) {
  std::set<GaussCode> frontier{code};
  for (std::size_t c = 0; c < code.component_count(); ++c) {
    std::set<GaussCode> next;
    std::vector<Component> best;
    for (const auto& cand : frontier) {
      const std::size_t len = std::max<std::size_t>(1, cand.components()[c].size());
      for (std::size_t s = 0; s < len; ++s) {
        auto r = rotate_component(cand, c, s);
        std::vector<Component> key(r.components().begin(), r.components().begin() + static_cast<std::ptrdiff_t>(c + 1));
        if (next.empty() || key < best) {
          next.clear();
          best = key;
        }
        if (key == best) next.insert(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return *frontier.begin();
}

GaussCode reverse_orientation(const GaussCode& code) {
  auto comps = code.components();
  for (auto& comp : comps) std::reverse(comp.begin(), comp.end());
  if (code.kind() == CodeKind::Flat) {
    // Both ends in one component: their order swaps. Ends in two components
    // keep their order, since component order is unchanged.
    for (auto& comp : comps) {
      std::map<int, int> count;
      for (const auto& t : comp) ++count[t.chord];
      for (auto& t : comp)
        if (count[t.chord] == 2) t.sign = -t.sign;
    }
  }
  return GaussCode::from_components(std::move(comps), code.kind());
}

}  // namespace vknot
