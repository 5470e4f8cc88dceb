#include "vknot/state_sum.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

#include "vknot/error.hpp"

namespace vknot {

namespace {

void require_classical(const GaussCode& code) {
  if (code.kind() != CodeKind::Classical)
    throw Error(ErrorCode::InvalidInput, "state sums need a classical code");
}

// Loops of one state, with edges (edge g leaves position g) as the nodes.
class LoopCounter {
 public:
  explicit LoopCounter(const CodeLayout& lay) : lay_(lay), parent_(lay.size()) {}

  std::size_t count(std::uint64_t a_mask) {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::size_t loops = lay_.size();
    for (int id = 1; id <= static_cast<int>(lay_.chord_count()); ++id) {
      const auto& ch = lay_.chord(id);
      const bool a = (a_mask >> (id - 1)) & 1;
      const bool oriented = a == (ch.sign > 0);
      const auto in_u = lay_.prev(ch.under), in_o = lay_.prev(ch.over);
      if (oriented) {
        loops -= unite(in_u, ch.over);
        loops -= unite(in_o, ch.under);
      } else {
        loops -= unite(in_u, in_o);
        loops -= unite(ch.under, ch.over);
      }
    }
    return loops + lay_.free_loops();
  }

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return 0;
    parent_[a] = b;
    return 1;
  }

  const CodeLayout& lay_;
  std::vector<std::size_t> parent_;
};

constexpr std::size_t kMaxChords = 40;
constexpr std::size_t kThreadFrom = 14;

}  // namespace

std::size_t state_loops(const GaussCode& code, std::uint64_t a_mask) {
  require_classical(code);
  const CodeLayout lay(code);
  return LoopCounter(lay).count(a_mask);
}

LaurentPoly1 bracket(const GaussCode& code) {
  require_classical(code);
  const CodeLayout lay(code);
  const std::size_t n = lay.chord_count();
  if (n > kMaxChords) throw Error(ErrorCode::SizeCap, "bracket limited to " + std::to_string(kMaxChords) + " crossings");
  const std::size_t max_loops = lay.size() + lay.free_loops() + 1;
  // tally[a][loops]: number of states with `a` A-smoothings and `loops` loops.
  using Tally = std::vector<std::vector<std::uint64_t>>;
  const auto run = [&](std::uint64_t lo, std::uint64_t hi, Tally& tally) {
    tally.assign(n + 1, std::vector<std::uint64_t>(max_loops + 1, 0));
    LoopCounter counter(lay);
    for (std::uint64_t s = lo; s < hi; ++s)
      ++tally[static_cast<std::size_t>(std::popcount(s))][counter.count(s)];
  };
  const std::uint64_t states = std::uint64_t{1} << n;
  std::size_t workers = 1;
  if (n >= kThreadFrom) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Tally> parts(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    const auto lo = states * w / workers, hi = states * (w + 1) / workers;
    if (workers == 1) run(lo, hi, parts[w]);
    else pool.emplace_back(run, lo, hi, std::ref(parts[w]));
  }
  for (auto& t : pool) t.join();

  const LaurentPoly1 delta = LaurentPoly1::monomial(-1, 2) + LaurentPoly1::monomial(-1, -2);
  std::vector<LaurentPoly1> delta_pow{LaurentPoly1(1)};
  for (std::size_t k = 1; k <= max_loops; ++k) delta_pow.push_back(delta_pow.back() * delta);
  LaurentPoly1 result;
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t loops = 1; loops <= max_loops; ++loops) {
      std::uint64_t total = 0;
      for (const auto& part : parts) total += part[a][loops];
      if (!total) continue;
      const int exp = static_cast<int>(a) - static_cast<int>(n - a);
      result += LaurentPoly1::monomial(static_cast<std::int64_t>(total), exp) * delta_pow[loops - 1];
    }
  }
  return result;
}

LaurentPoly1 f_polynomial(const GaussCode& code) {
  const int w = code.writhe();
  return LaurentPoly1::monomial(-1, 3).pow(-w) * bracket(code);
}

namespace {

// Walks the loops of a state. A loop is a cyclic sequence of (edge,
// direction) steps; each edge appears in exactly one loop.
struct LoopTrace {
  std::vector<int> loop_of;  // per edge
  std::vector<int> dir;      // +1 when the loop runs along the edge orientation
  std::size_t loops = 0;
};

LoopTrace trace_state(const CodeLayout& lay, bool all_a) {
  const std::size_t e = lay.size();
  // End k of position p: 2p is "in" (head of edge prev(p)), 2p+1 is "out".
  std::vector<std::size_t> partner(2 * e);
  for (int id = 1; id <= static_cast<int>(lay.chord_count()); ++id) {
    const auto& ch = lay.chord(id);
    const bool oriented = all_a == (ch.sign > 0);
    const auto in_u = 2 * ch.under, out_u = 2 * ch.under + 1;
    const auto in_o = 2 * ch.over, out_o = 2 * ch.over + 1;
    const auto join = [&](std::size_t a, std::size_t b) {
      partner[a] = b;
      partner[b] = a;
    };
    if (oriented) {
      join(in_u, out_o);
      join(in_o, out_u);
    } else {
      join(in_u, in_o);
      join(out_u, out_o);
    }
  }
  LoopTrace tr;
  tr.loop_of.assign(e, -1);
  tr.dir.assign(e, 0);
  for (std::size_t start = 0; start < e; ++start) {
    if (tr.loop_of[start] >= 0) continue;
    const int id = static_cast<int>(tr.loops++);
    std::size_t edge = start;
    bool forward = true;
    while (tr.loop_of[edge] < 0) {
      tr.loop_of[edge] = id;
      tr.dir[edge] = forward ? 1 : -1;
      // The end we arrive at, then the end joined to it.
      const std::size_t end = forward ? 2 * lay.next(edge) : 2 * edge + 1;
      const std::size_t other = partner[end];
      const std::size_t p = other / 2;
      if (other % 2 == 1) {
        edge = p;
        forward = true;
      } else {
        edge = lay.prev(p);
        forward = false;
      }
    }
  }
  tr.loops += lay.free_loops();
  return tr;
}

// Parity union-find: x[a] xor x[b] = w constraints.
class ParityUF {
 public:
  explicit ParityUF(std::size_t n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }
  bool relate(std::size_t a, std::size_t b, int w) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == w;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ w;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

}  // namespace

AtomProfile atom_profile(const GaussCode& code) {
  require_classical(code);
  const CodeLayout lay(code);
  const auto a = trace_state(lay, true);
  const auto b = trace_state(lay, false);
  AtomProfile prof;
  prof.sA = a.loops;
  prof.sB = b.loops;

  // Connected pieces: chords linked through shared strands, plus bare circles.
  const std::size_t n = lay.chord_count();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  const auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t g = 0; g < lay.size(); ++g)
    root[find(static_cast<std::size_t>(lay.token(g).chord - 1))] =
        find(static_cast<std::size_t>(lay.token(lay.next(g)).chord - 1));
  std::size_t pieces = lay.free_loops();
  for (std::size_t c = 0; c < n; ++c) pieces += find(c) == c;
  prof.twice_genus = static_cast<int>(2 * pieces + n) - static_cast<int>(prof.sA + prof.sB);

  // Orient every A-cell and B-cell so that the two cells along each edge
  // induce opposite directions on it.
  const std::size_t cells_a = a.loops - lay.free_loops();
  ParityUF uf(cells_a + b.loops);
  for (std::size_t e = 0; e < lay.size() && prof.orientable; ++e) {
    const int w = a.dir[e] == b.dir[e] ? 1 : 0;
    prof.orientable = uf.relate(static_cast<std::size_t>(a.loop_of[e]),
                                cells_a + static_cast<std::size_t>(b.loop_of[e]), w);
  }
  return prof;
}

SpanBound span_bound_check(const GaussCode& code) {
  const auto br = bracket(code);
  if (br.is_zero()) throw Error(ErrorCode::ZeroBracket, "bracket vanishes; span undefined");
  const auto prof = atom_profile(code);
  SpanBound sb;
  sb.span = br.span();
  sb.bound = 4 * static_cast<int>(code.chord_count()) - 2 * prof.twice_genus;
  sb.holds = sb.span <= sb.bound;
  return sb;
}

}  // namespace vknot
