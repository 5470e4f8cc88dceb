#include "vknot/diagram_moves.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "vknot/error.hpp"

namespace vknot {

const char* to_string(DiagramMoveType type) {
  switch (type) {
    case DiagramMoveType::KinkAdd: return "kink-add";
    case DiagramMoveType::KinkRemove: return "kink-remove";
    case DiagramMoveType::BigonAdd: return "bigon-add";
    case DiagramMoveType::BigonRemove: return "bigon-remove";
    case DiagramMoveType::Triangle: return "triangle";
  }
  return "?";
}

namespace {

// Slot s = 4 * crossing + position; positions are counterclockwise.
int opp(int s) { return (s & ~3) | ((s + 2) & 3); }
int ccw(int s) { return (s & ~3) | ((s + 1) & 3); }
int owner(int s) { return s >> 2; }

struct Net {
  std::vector<CrossingKind> kind;
  std::vector<int> partner;
  std::vector<char> in;  // slot is the head end of its edge
  std::size_t loops = 0;

  int size() const { return static_cast<int>(kind.size()); }

  int add_crossing(CrossingKind k) {
    kind.push_back(k);
    partner.resize(partner.size() + 4, -1);
    in.resize(in.size() + 4, 0);
    return size() - 1;
  }

  void link(int out, int head) {
    partner[static_cast<std::size_t>(out)] = head;
    partner[static_cast<std::size_t>(head)] = out;
    in[static_cast<std::size_t>(out)] = 0;
    in[static_cast<std::size_t>(head)] = 1;
  }

  // Sends the strand from `up` (an outgoing slot) through the listed entry
  // slots in order and on to `down` (an incoming slot).
  void route(int up, int down, std::initializer_list<int> entries) {
    int cur = up;
    for (int e : entries) {
      link(cur, e);
      cur = opp(e);
    }
    link(cur, down);
  }

  // Splices out crossing x, joining the strands through it.
  void splice(int x) {
    for (int k = 0; k < 2; ++k) {
      const int a = 4 * x + k, b = a + 2;
      const int p = partner[static_cast<std::size_t>(a)], q = partner[static_cast<std::size_t>(b)];
      if (p == b) {
        ++loops;
        continue;
      }
      partner[static_cast<std::size_t>(p)] = q;
      partner[static_cast<std::size_t>(q)] = p;
    }
    const int last = size() - 1;
    if (x != last) {
      for (int k = 0; k < 4; ++k) {
        const auto from = static_cast<std::size_t>(4 * last + k), to = static_cast<std::size_t>(4 * x + k);
        int p = partner[from];
        if (owner(p) == last) p = 4 * x + (p & 3);
        partner[to] = p;
        in[to] = in[from];
        partner[static_cast<std::size_t>(p)] = static_cast<int>(to);
      }
      kind[static_cast<std::size_t>(x)] = kind[static_cast<std::size_t>(last)];
    }
    kind.pop_back();
    partner.resize(partner.size() - 4);
    in.resize(in.size() - 4);
  }

  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> used(partner.size(), 0);
    for (std::size_t d = 0; d < partner.size(); ++d) {
      if (used[d]) continue;
      std::vector<int> face;
      int cur = static_cast<int>(d);
      while (!used[static_cast<std::size_t>(cur)]) {
        used[static_cast<std::size_t>(cur)] = 1;
        face.push_back(cur);
        cur = ccw(partner[static_cast<std::size_t>(cur)]);
      }
      out.push_back(std::move(face));
    }
    return out;
  }

  bool has_face_on(std::vector<int> crossings) const {
    std::sort(crossings.begin(), crossings.end());
    for (const auto& f : faces()) {
      if (f.size() != crossings.size()) continue;
      std::vector<int> owners;
      for (int d : f) owners.push_back(owner(d));
      std::sort(owners.begin(), owners.end());
      if (owners == crossings) return true;
    }
    return false;
  }
};

Net from_pd(const PlanarDiagram& pd) {
  Net net;
  for (const auto& c : pd.crossings) {
    if (c.kind == CrossingKind::Classical)
      throw Error(ErrorCode::InvalidInput, "flat moves need a diagram without classical crossings");
    net.add_crossing(c.kind);
  }
  const auto tr = traverse_pd(pd);
  for (const auto& e : tr.edges)
    net.link(static_cast<int>(4 * e.tail.crossing) + e.tail.slot, static_cast<int>(4 * e.head.crossing) + e.head.slot);
  net.loops = pd.free_loops;
  return net;
}

// Picks, per crossing, the position pair that becomes 0/2 so that every
// component runs through positions 0 and 2 somewhere: the text format can
// only orient a component from those positions. Returns the pair (0 or 1).
std::vector<int> even_pairs(const Net& net) {
  const auto n = static_cast<std::size_t>(net.size());
  std::vector<int> comp_of(4 * n, -1);
  int comps = 0;
  for (std::size_t s = 0; s < 4 * n; ++s) {
    if (comp_of[s] >= 0) continue;
    int cur = static_cast<int>(s);
    while (comp_of[static_cast<std::size_t>(cur)] < 0) {
      comp_of[static_cast<std::size_t>(cur)] = comp_of[static_cast<std::size_t>(opp(cur))] = comps;
      cur = net.partner[static_cast<std::size_t>(opp(cur))];
    }
    ++comps;
  }
  std::vector<int> pair(n, 0);
  std::vector<bool> settled(static_cast<std::size_t>(comps), false);
  std::vector<std::vector<int>> options(static_cast<std::size_t>(comps));
  for (std::size_t x = 0; x < n; ++x) {
    const int a = comp_of[4 * x], b = comp_of[4 * x + 1];
    if (a == b) settled[static_cast<std::size_t>(a)] = true;
    else {
      options[static_cast<std::size_t>(a)].push_back(static_cast<int>(x));
      options[static_cast<std::size_t>(b)].push_back(static_cast<int>(x));
    }
  }
  std::vector<int> owner_of(n, -1);
  std::function<bool(int, std::vector<bool>&)> augment = [&](int c, std::vector<bool>& seen) {
    for (int x : options[static_cast<std::size_t>(c)]) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      seen[static_cast<std::size_t>(x)] = true;
      const int o = owner_of[static_cast<std::size_t>(x)];
      if (o < 0 || augment(o, seen)) {
        owner_of[static_cast<std::size_t>(x)] = c;
        return true;
      }
    }
    return false;
  };
  for (int c = 0; c < comps; ++c) {
    if (settled[static_cast<std::size_t>(c)]) continue;
    std::vector<bool> seen(n, false);
    augment(c, seen);
  }
  for (std::size_t x = 0; x < n; ++x)
    if (owner_of[x] >= 0) pair[x] = comp_of[4 * x] == owner_of[x] ? 0 : 1;
  return pair;
}

// Rotates crossings so that position 0 is incoming, then labels edges
// consecutively along each component.
PlanarDiagram to_pd(const Net& net) {
  const auto n = static_cast<std::size_t>(net.size());
  const auto pairs = even_pairs(net);
  std::vector<int> remap(4 * n);
  for (std::size_t x = 0; x < n; ++x) {
    const int first = pairs[x] + (net.in[4 * x + static_cast<std::size_t>(pairs[x])] ? 0 : 2);
    for (int k = 0; k < 4; ++k) remap[4 * x + static_cast<std::size_t>(k)] = static_cast<int>(4 * x) + ((k + 4 - first) & 3);
  }
  PlanarDiagram pd;
  pd.crossings.resize(n);
  for (std::size_t x = 0; x < n; ++x) pd.crossings[x].kind = net.kind[x];
  std::vector<int> label(4 * n, 0);
  int next = 1;
  for (std::size_t s = 0; s < 4 * n; ++s) {
    if (net.in[s] || label[s]) continue;
    int cur = static_cast<int>(s);
    while (!label[static_cast<std::size_t>(cur)]) {
      const int head = net.partner[static_cast<std::size_t>(cur)];
      label[static_cast<std::size_t>(cur)] = label[static_cast<std::size_t>(head)] = next++;
      cur = opp(head);
    }
  }
  for (std::size_t s = 0; s < 4 * n; ++s) {
    const auto t = static_cast<std::size_t>(remap[s]);
    pd.crossings[t >> 2].edges[t & 3] = label[s];
  }
  pd.free_loops = net.loops;
  return pd;
}

bool planar_and_valid(const Net& net, PlanarDiagram& out) {
  out = to_pd(net);
  try {
    traverse_pd(out);
  } catch (const Error&) {
    return false;
  }
  return pd_map_genus(out) == 0;
}

using Results = std::vector<std::pair<PlanarDiagram, DiagramMoveRecord>>;

void push_unique(Results& out, PlanarDiagram pd, DiagramMoveRecord rec) {
  for (const auto& [q, r] : out)
    if (q == pd) return;
  out.emplace_back(std::move(pd), rec);
}

Results kink_add(const Net& net) {
  Results out;
  std::vector<int> outs;
  for (int s = 0; s < 4 * net.size(); ++s)
    if (!net.in[static_cast<std::size_t>(s)]) outs.push_back(s);
  if (net.loops > 0) outs.push_back(-1);
  for (int s : outs) {
    for (auto k : {CrossingKind::Flat, CrossingKind::Virtual}) {
      for (int side : {1, 3}) {
        Net m = net;
        const int x = m.add_crossing(k);
        int up, down;
        if (s < 0) {
          // Knotting a crossingless loop: the new crossing is the whole strand.
          --m.loops;
          up = 4 * x + (side == 1 ? 3 : 1);
          down = 4 * x;
          m.link(up, down);
          m.link(4 * x + 2, 4 * x + side);
        } else {
          up = s;
          down = net.partner[static_cast<std::size_t>(s)];
          m.route(up, down, {4 * x, 4 * x + side});
        }
        PlanarDiagram pd;
        if (planar_and_valid(m, pd)) push_unique(out, std::move(pd), {DiagramMoveType::KinkAdd, k});
      }
    }
  }
  return out;
}

Results kink_remove(const Net& net) {
  Results out;
  for (int x = 0; x < net.size(); ++x) {
    bool kink = false;
    for (int k = 0; k < 4; ++k) {
      const int p = net.partner[static_cast<std::size_t>(4 * x + k)];
      kink = kink || p == 4 * x + ((k + 1) & 3);
    }
    if (!kink) continue;
    Net m = net;
    m.splice(x);
    PlanarDiagram pd;
    if (planar_and_valid(m, pd)) push_unique(out, std::move(pd), {DiagramMoveType::KinkRemove, net.kind[static_cast<std::size_t>(x)]});
  }
  return out;
}

// With `rng`, edge pairs are tried in random order and the first pair
// admitting a bigon is returned alone.
Results bigon_add(const Net& net, std::mt19937_64* rng = nullptr) {
  Results out;
  std::set<std::pair<int, int>> pair_set;
  for (const auto& f : net.faces()) {
    std::vector<int> edges;
    for (int d : f) edges.push_back(net.in[static_cast<std::size_t>(d)] ? net.partner[static_cast<std::size_t>(d)] : d);
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (edges[i] != edges[j]) pair_set.insert(std::minmax(edges[i], edges[j]));
  }
  std::vector<std::pair<int, int>> pairs(pair_set.begin(), pair_set.end());
  if (rng) std::shuffle(pairs.begin(), pairs.end(), *rng);
  for (auto [s1, s2] : pairs) {
    if (rng && !out.empty()) break;
    const int t1 = net.partner[static_cast<std::size_t>(s1)], t2 = net.partner[static_cast<std::size_t>(s2)];
    for (auto k : {CrossingKind::Flat, CrossingKind::Virtual}) {
      for (int e1 = 0; e1 < 4; ++e1)
        for (int e2 = 0; e2 < 4; ++e2)
          for (int d1 : {1, 3})
            for (int d2 : {1, 3})
              for (bool same_order : {true, false}) {
                Net m = net;
                const int a = m.add_crossing(k), b = m.add_crossing(k);
                m.route(s1, t1, {4 * a + e1, 4 * b + e2});
                const int f1 = 4 * a + ((e1 + d1) & 3), f2 = 4 * b + ((e2 + d2) & 3);
                if (same_order) m.route(s2, t2, {f1, f2});
                else m.route(s2, t2, {f2, f1});
                if (!m.has_face_on({a, b})) continue;
                PlanarDiagram pd;
                if (planar_and_valid(m, pd)) push_unique(out, std::move(pd), {DiagramMoveType::BigonAdd, k});
              }
    }
  }
  return out;
}

Results bigon_remove(const Net& net) {
  Results out;
  for (const auto& f : net.faces()) {
    if (f.size() != 2) continue;
    const int a = owner(f[0]), b = owner(f[1]);
    const auto ka = net.kind[static_cast<std::size_t>(a)];
    if (a == b || ka != net.kind[static_cast<std::size_t>(b)]) continue;
    Net m = net;
    m.splice(std::max(a, b));
    m.splice(std::min(a, b));
    PlanarDiagram pd;
    if (planar_and_valid(m, pd)) push_unique(out, std::move(pd), {DiagramMoveType::BigonRemove, ka});
  }
  return out;
}

Results triangle(const Net& net) {
  Results out;
  for (const auto& f : net.faces()) {
    if (f.size() != 3) continue;
    std::array<int, 3> xs{owner(f[0]), owner(f[1]), owner(f[2])};
    if (xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2]) continue;
    int flats = 0;
    for (int x : xs) flats += net.kind[static_cast<std::size_t>(x)] == CrossingKind::Flat;
    if (flats == 2) continue;  // forbidden configuration
    // Each face dart d leaves its crossing along a side; the side's strand
    // runs from the opposite slot of d through to the opposite slot of the
    // side's far end.
    struct Side {
      int up, down;             // external slots, up is outgoing
      int first, second;        // crossings met in order, along the flow
      std::array<int, 2> pos;   // entry positions before the move
    };
    std::vector<Side> sides;
    bool ok = true;
    for (int d : f) {
      const int e = net.partner[static_cast<std::size_t>(d)];
      int near = d, far = e;
      if (net.in[static_cast<std::size_t>(d)]) std::swap(near, far);  // flow near -> far
      const int up = net.partner[static_cast<std::size_t>(opp(near))];
      const int down = net.partner[static_cast<std::size_t>(opp(far))];
      for (int ext : {up, down})
        if (std::find(xs.begin(), xs.end(), owner(ext)) != xs.end()) ok = false;
      sides.push_back({up, down, owner(near), owner(far), {opp(near) & 3, far & 3}});
    }
    if (!ok) continue;
    for (int choice = 0; choice < 64; ++choice) {
      Net m = net;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& sd = sides[i];
        const int bits = (choice >> (2 * i)) & 3;
        // Reversed order: the strand meets `second` first, then `first`.
        const int e2 = 4 * sd.second + ((sd.pos[1] + 2 * (bits & 1)) & 3);
        const int e1 = 4 * sd.first + ((sd.pos[0] + (bits & 2)) & 3);
        m.route(sd.up, sd.down, {e2, e1});
      }
      if (!m.has_face_on({xs[0], xs[1], xs[2]})) continue;
      PlanarDiagram pd;
      if (!planar_and_valid(m, pd)) continue;
      if (pd == to_pd(net)) continue;
      const auto k = flats ? CrossingKind::Flat : CrossingKind::Virtual;
      push_unique(out, std::move(pd), {DiagramMoveType::Triangle, k, flats == 1});
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<PlanarDiagram, DiagramMoveRecord>> flat_move_results(const PlanarDiagram& pd,
                                                                           DiagramMoveType type) {
  const Net net = from_pd(pd);
  switch (type) {
    case DiagramMoveType::KinkAdd: return kink_add(net);
    case DiagramMoveType::KinkRemove: return kink_remove(net);
    case DiagramMoveType::BigonAdd: return bigon_add(net);
    case DiagramMoveType::BigonRemove: return bigon_remove(net);
    case DiagramMoveType::Triangle: return triangle(net);
  }
  return {};
}

std::optional<DiagramMoveRecord> apply_random_flat_move(PlanarDiagram& pd, std::mt19937_64& rng,
                                                        std::size_t max_crossings) {
  std::vector<DiagramMoveType> types{DiagramMoveType::KinkRemove, DiagramMoveType::BigonRemove,
                                     DiagramMoveType::Triangle};
  if (pd.crossings.size() + 2 <= max_crossings) {
    types.push_back(DiagramMoveType::KinkAdd);
    types.push_back(DiagramMoveType::BigonAdd);
  }
  std::shuffle(types.begin(), types.end(), rng);
  for (auto t : types) {
    auto results = t == DiagramMoveType::BigonAdd ? bigon_add(from_pd(pd), &rng) : flat_move_results(pd, t);
    if (results.empty()) continue;
    auto& pick = results[std::uniform_int_distribution<std::size_t>(0, results.size() - 1)(rng)];
    pd = std::move(pick.first);
    return pick.second;
  }
  return std::nullopt;
}

}  // namespace vknot
