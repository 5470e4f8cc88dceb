#include "vknot/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "vknot/codes.hpp"
#include "vknot/error.hpp"

namespace vknot {

namespace {

#include "vknot/r3_table.inc"

bool r3_pattern_ok(unsigned key) {
  return std::find(std::begin(kR3Patterns), std::end(kR3Patterns), key) != std::end(kR3Patterns);
}

[[noreturn]] void not_applicable(const std::string& what) { throw Error(ErrorCode::NotApplicable, what); }

std::vector<std::size_t> offsets_of(const GaussCode& code) {
  std::vector<std::size_t> off;
  std::size_t total = 0;
  for (const auto& comp : code.components()) {
    off.push_back(total);
    total += comp.size();
  }
  return off;
}

std::size_t position(const GaussCode& code, const std::vector<std::size_t>& off, const Site& s) {
  if (s.component >= code.component_count() || s.index >= code.components()[s.component].size())
    not_applicable("site out of range");
  return off[s.component] + s.index;
}

Site site_of(const CodeLayout& lay, std::size_t g) {
  const auto [c, i] = lay.locate(g);
  return {c, i};
}

GaussCode without(const GaussCode& code, const CodeLayout& lay, const std::set<std::size_t>& drop) {
  std::vector<Component> comps(code.component_count());
  for (std::size_t g = 0; g < lay.size(); ++g)
    if (!drop.count(g)) comps[lay.component_of(g)].push_back(lay.token(g));
  return GaussCode::from_components(std::move(comps), code.kind());
}

// The chord of a segment's under token, its partner, and whether the
// segment reads under-then-over.
struct Triangle {
  int tm = 0, tb = 0, mb = 0;
  std::size_t t = 0, m = 0, b = 0;  // first positions of the segments
};

std::optional<unsigned> r3_key(const CodeLayout& lay, const Triangle& tri) {
  const auto t2 = lay.next(tri.t), m2 = lay.next(tri.m), b2 = lay.next(tri.b);
  unsigned key = 0;
  if (lay.token(tri.t).chord == tri.tm) key |= 1;
  if (lay.token(tri.m).chord == tri.tm) key |= 2;
  if (lay.token(tri.b).chord == tri.tb) key |= 4;
  if (lay.chord(tri.tm).sign > 0) key |= 8;
  if (lay.chord(tri.tb).sign > 0) key |= 16;
  if (lay.chord(tri.mb).sign > 0) key |= 32;
  const auto is = [&](std::size_t g, Passage p) { return lay.token(g).passage == p; };
  if (!is(tri.t, Passage::Over) || !is(t2, Passage::Over)) return std::nullopt;
  if (!is(tri.b, Passage::Under) || !is(b2, Passage::Under)) return std::nullopt;
  std::set<int> ts{lay.token(tri.t).chord, lay.token(t2).chord};
  std::set<int> ms{lay.token(tri.m).chord, lay.token(m2).chord};
  std::set<int> bs{lay.token(tri.b).chord, lay.token(b2).chord};
  if (ts != std::set<int>{tri.tm, tri.tb} || ms != std::set<int>{tri.tm, tri.mb} ||
      bs != std::set<int>{tri.tb, tri.mb})
    return std::nullopt;
  const auto mu = lay.token(tri.m).chord == tri.tm ? tri.m : m2;
  const auto mo = mu == tri.m ? m2 : tri.m;
  if (!is(mu, Passage::Under) || !is(mo, Passage::Over)) return std::nullopt;
  if (tri.tm == tri.tb || tri.tm == tri.mb || tri.tb == tri.mb) return std::nullopt;
  return key;
}

GaussCode insert_tokens(const GaussCode& code, std::vector<std::pair<Site, std::vector<Token>>> inserts) {
  auto comps = code.components();
  for (const auto& [s, toks] : inserts) {
    if (s.component >= comps.size()) not_applicable("insertion site out of range");
    if (s.index > comps[s.component].size()) not_applicable("insertion site out of range");
  }
  // Later sites first so earlier indices stay valid.
  std::stable_sort(inserts.begin(), inserts.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
  for (const auto& [s, toks] : inserts) {
    auto& comp = comps[s.component];
    comp.insert(comp.begin() + static_cast<std::ptrdiff_t>(s.index), toks.begin(), toks.end());
  }
  return GaussCode::from_components(std::move(comps), code.kind());
}

void require_classical(const GaussCode& code) {
  if (code.kind() != CodeKind::Classical)
    throw Error(ErrorCode::InvalidInput, "Reidemeister moves act on classical codes");
}

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Insert: return "R1+";
    case MoveKind::R1Delete: return "R1-";
    case MoveKind::R2Insert: return "R2+";
    case MoveKind::R2Delete: return "R2-";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

GaussCode apply_move(const GaussCode& code, const MoveDescriptor& move) {
  require_classical(code);
  const CodeLayout lay(code);
  const auto off = offsets_of(code);
  const auto need_sites = [&](std::size_t k) {
    if (move.sites.size() != k) not_applicable(to_string(move.kind) + " needs " + std::to_string(k) + " sites");
  };
  const int fresh = static_cast<int>(code.chord_count()) + 1;

  switch (move.kind) {
    case MoveKind::R1Delete: {
      need_sites(1);
      const auto g = position(code, off, move.sites[0]);
      const auto h = lay.next(g);
      if (g == h || lay.token(g).chord != lay.token(h).chord) not_applicable("no curl at site");
      return without(code, lay, {g, h});
    }
    case MoveKind::R2Delete: {
      need_sites(2);
      const auto o1 = position(code, off, move.sites[0]);
      const auto u1 = position(code, off, move.sites[1]);
      const auto o2 = lay.next(o1), u2 = lay.next(u1);
      const auto& a = lay.token(o1);
      const auto& b = lay.token(o2);
      if (o1 == o2 || u1 == u2 || a.passage != Passage::Over || b.passage != Passage::Over || a.chord == b.chord)
        not_applicable("no over pair at site");
      if (lay.token(u1).passage != Passage::Under || lay.token(u2).passage != Passage::Under)
        not_applicable("no under pair at site");
      if (std::set<int>{lay.token(u1).chord, lay.token(u2).chord} != std::set<int>{a.chord, b.chord})
        not_applicable("under pair belongs to other chords");
      if (a.sign == b.sign) not_applicable("R2 needs opposite signs");
      return without(code, lay, {o1, o2, u1, u2});
    }
    case MoveKind::R3: {
      need_sites(3);
      Triangle tri;
      tri.t = position(code, off, move.sites[0]);
      tri.m = position(code, off, move.sites[1]);
      tri.b = position(code, off, move.sites[2]);
      const auto m2 = lay.next(tri.m);
      const bool under_first = lay.token(tri.m).passage == Passage::Under;
      tri.tm = lay.token(under_first ? tri.m : m2).chord;
      tri.mb = lay.token(under_first ? m2 : tri.m).chord;
      const int t1 = lay.token(tri.t).chord, t2 = lay.token(lay.next(tri.t)).chord;
      tri.tb = t1 == tri.tm ? t2 : t1;
      const auto key = r3_key(lay, tri);
      if (!key || !r3_pattern_ok(*key)) not_applicable("no R3 triangle at sites");
      auto comps = code.components();
      for (auto g : {tri.t, tri.m, tri.b}) {
        const auto s = site_of(lay, g);
        const auto n = site_of(lay, lay.next(g));
        std::swap(comps[s.component][s.index], comps[n.component][n.index]);
      }
      return GaussCode::from_components(std::move(comps), code.kind());
    }
    case MoveKind::R1Insert: {
      need_sites(1);
      if (move.sign != 1 && move.sign != -1) not_applicable("bad sign");
      Token o{fresh, Passage::Over, move.sign}, u{fresh, Passage::Under, move.sign};
      return insert_tokens(code, {{move.sites[0], move.flag ? std::vector{u, o} : std::vector{o, u}}});
    }
    case MoveKind::R2Insert: {
      need_sites(2);
      if (move.sign != 1 && move.sign != -1) not_applicable("bad sign");
      const Token oa{fresh, Passage::Over, move.sign}, ob{fresh + 1, Passage::Over, -move.sign};
      const Token ua{fresh, Passage::Under, move.sign}, ub{fresh + 1, Passage::Under, -move.sign};
      std::vector<Token> over{oa, ob};
      std::vector<Token> under = move.flag ? std::vector{ub, ua} : std::vector{ua, ub};
      if (move.sites[0] == move.sites[1]) {
        auto both = move.under_first ? under : over;
        const auto& rest = move.under_first ? over : under;
        both.insert(both.end(), rest.begin(), rest.end());
        return insert_tokens(code, {{move.sites[0], both}});
      }
      return insert_tokens(code, {{move.sites[0], over}, {move.sites[1], under}});
    }
  }
  not_applicable("unknown move");
}

std::vector<MoveDescriptor> enumerate_moves(const GaussCode& code, bool with_r2_insertions) {
  require_classical(code);
  const CodeLayout lay(code);
  std::vector<MoveDescriptor> out;
  std::set<std::set<std::size_t>> removed;

  for (std::size_t g = 0; g < lay.size(); ++g) {
    const auto h = lay.next(g);
    if (g != h && lay.token(g).chord == lay.token(h).chord && removed.insert({g, h}).second)
      out.push_back({MoveKind::R1Delete, {site_of(lay, g)}});
  }
  for (std::size_t g = 0; g < lay.size(); ++g) {
    const auto h = lay.next(g);
    const auto &a = lay.token(g), &b = lay.token(h);
    if (g == h || a.passage != Passage::Over || b.passage != Passage::Over || a.chord == b.chord) continue;
    if (a.sign == b.sign) continue;
    const auto ua = lay.chord(a.chord).under, ub = lay.chord(b.chord).under;
    for (auto u : {ua, ub}) {
      const auto u2 = lay.next(u);
      if (!((u == ua && u2 == ub) || (u == ub && u2 == ua))) continue;
      if (removed.insert({g, h, u, u2}).second)
        out.push_back({MoveKind::R2Delete, {site_of(lay, g), site_of(lay, u)}});
    }
  }
  std::set<std::vector<std::size_t>> triangles;
  for (std::size_t t = 0; t < lay.size(); ++t) {
    const auto t2 = lay.next(t);
    if (t == t2 || lay.token(t).passage != Passage::Over || lay.token(t2).passage != Passage::Over) continue;
    for (int pick = 0; pick < 2; ++pick) {
      Triangle tri;
      tri.t = t;
      tri.tm = lay.token(pick ? t2 : t).chord;
      tri.tb = lay.token(pick ? t : t2).chord;
      if (tri.tm == tri.tb) continue;
      const auto u = lay.chord(tri.tm).under;
      for (auto m : {lay.prev(u), u}) {
        const auto m2 = lay.next(m);
        if (m == m2) continue;
        const auto other = m == u ? m2 : m;
        if (lay.token(other).passage != Passage::Over) continue;
        tri.m = m;
        tri.mb = lay.token(other).chord;
        if (tri.mb == tri.tm || tri.mb == tri.tb) continue;
        const auto bu = lay.chord(tri.tb).under, mu = lay.chord(tri.mb).under;
        for (auto b : {bu, mu}) {
          const auto b2 = lay.next(b);
          if (!((b == bu && b2 == mu) || (b == mu && b2 == bu))) continue;
          tri.b = b;
          const auto key = r3_key(lay, tri);
          if (key && r3_pattern_ok(*key) && triangles.insert({t, m, b}).second)
            out.push_back({MoveKind::R3, {site_of(lay, t), site_of(lay, m), site_of(lay, b)}});
        }
      }
    }
  }

  std::vector<Site> sites;
  for (std::size_t c = 0; c < code.component_count(); ++c) {
    const auto len = std::max<std::size_t>(1, code.components()[c].size());
    for (std::size_t i = 0; i < len; ++i) sites.push_back({c, i});
  }
  for (const auto& s : sites)
    for (int sign : {1, -1})
      for (bool flag : {false, true}) out.push_back({MoveKind::R1Insert, {s}, sign, flag});
  if (with_r2_insertions) {
    for (const auto& so : sites)
      for (const auto& su : sites)
        for (int sign : {1, -1})
          for (bool flag : {false, true}) {
            out.push_back({MoveKind::R2Insert, {so, su}, sign, flag, false});
            if (so == su) out.push_back({MoveKind::R2Insert, {so, su}, sign, flag, true});
          }
  }
  return out;
}

namespace {

GaussCode edit_chord(const GaussCode& code, int chord, bool swap_passage) {
  require_classical(code);
  if (chord < 1 || static_cast<std::size_t>(chord) > code.chord_count())
    throw Error(ErrorCode::NoSuchChord, "no chord " + std::to_string(chord));
  auto comps = code.components();
  for (auto& comp : comps)
    for (auto& t : comp) {
      if (t.chord != chord) continue;
      t.sign = -t.sign;
      if (swap_passage) t.passage = t.passage == Passage::Over ? Passage::Under : Passage::Over;
    }
  return GaussCode::from_components(std::move(comps), code.kind());
}

}  // namespace

GaussCode switch_crossing(const GaussCode& code, int chord) { return edit_chord(code, chord, true); }

GaussCode virtualize(const GaussCode& code, int chord) { return edit_chord(code, chord, false); }

GaussCode replay(const GaussCode& code, const std::vector<MoveDescriptor>& moves) {
  GaussCode cur = code;
  for (const auto& m : moves) cur = apply_move(cur, m);
  return cur;
}

namespace {

// Deletes curls and bigons until none remain, R1 before R2, leftmost first.
GaussCode greedy_delete(GaussCode code, std::vector<MoveDescriptor>& log) {
  for (;;) {
    std::optional<MoveDescriptor> pick;
    for (const auto& m : enumerate_moves(code, false)) {
      if (m.kind == MoveKind::R1Delete) {
        pick = m;
        break;
      }
      if (m.kind == MoveKind::R2Delete && !pick) pick = m;
    }
    if (!pick) return code;
    code = apply_move(code, *pick);
    log.push_back(*pick);
  }
}

constexpr std::size_t kSearchCap = 200000;

}  // namespace

SimplifyResult simplify(const GaussCode& code, int budget) {
  SimplifyResult res;
  res.code = greedy_delete(code, res.certificate);
  for (;;) {
    struct Node {
      GaussCode code;
      std::size_t parent;
      MoveDescriptor move;
      int depth;
    };
    const std::size_t start_chords = res.code.chord_count();
    if (start_chords == 0 || budget <= 0) return res;
    std::vector<Node> nodes{{res.code, 0, {}, 0}};
    std::set<GaussCode> seen{canonical_rotation(res.code)};
    std::optional<std::size_t> found;
    for (std::size_t head = 0; head < nodes.size() && !found; ++head) {
      if (nodes[head].depth >= budget) continue;
      const auto moves = enumerate_moves(nodes[head].code, true);
      for (const auto& m : moves) {
        const int grow = m.kind == MoveKind::R1Insert ? 1 : m.kind == MoveKind::R2Insert ? 2 : 0;
        if (nodes[head].code.chord_count() + static_cast<std::size_t>(grow) > start_chords + 2) continue;
        auto next = apply_move(nodes[head].code, m);
        if (!seen.insert(canonical_rotation(next)).second) continue;
        nodes.push_back({std::move(next), head, m, nodes[head].depth + 1});
        if (nodes.back().code.chord_count() < start_chords) {
          found = nodes.size() - 1;
          break;
        }
        if (nodes.size() >= kSearchCap) {
          res.exhausted = true;
          break;
        }
      }
      if (res.exhausted) break;
    }
    if (!found) return res;
    std::vector<MoveDescriptor> path;
    for (auto i = *found; i != 0; i = nodes[i].parent) path.push_back(nodes[i].move);
    std::reverse(path.begin(), path.end());
    res.certificate.insert(res.certificate.end(), path.begin(), path.end());
    res.code = greedy_delete(nodes[*found].code, res.certificate);
  }
}

}  // namespace vknot
