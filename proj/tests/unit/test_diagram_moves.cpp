#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <doctest.h>

#include "support.hpp"
#include "vknot/codes.hpp"
#include "vknot/diagram_moves.hpp"
#include "vknot/error.hpp"

using namespace vknot;

namespace {

PlanarDiagram load_flat_h() {
  std::ifstream in(std::string(VKNOT_DATA_DIR) + "/flatH.pd");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pd(ss.str());
}

// Key for a flat code up to rotation, chord relabelling and component order.
std::string key(const GaussCode& code) {
  auto comps = code.components();
  std::vector<std::size_t> order(comps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::string best;
  // A flat sign is read from the strand met first, so moving a component
  // ahead of another flips the chords shared between them.
  std::map<int, std::size_t> first;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (const auto& t : comps[i]) first.try_emplace(t.chord, i);
  do {
    std::vector<std::size_t> rank(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
    std::vector<Component> perm;
    for (auto i : order) {
      auto c = comps[i];
      for (auto& t : c) {
        const auto f = first.at(t.chord);
        std::size_t now = f;
        for (std::size_t j = 0; j < comps.size(); ++j)
          for (const auto& u : comps[j])
            if (u.chord == t.chord && rank[j] < rank[now]) now = j;
        if (now != f) t.sign = -t.sign;
      }
      perm.push_back(std::move(c));
    }
    const auto s = canonical_rotation(GaussCode::from_components(perm, code.kind())).to_string();
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

GaussCode without(const GaussCode& code, const std::set<int>& chords) {
  std::vector<Component> comps;
  for (const auto& c : code.components()) {
    Component kept;
    for (const auto& t : c)
      if (!chords.contains(t.chord)) kept.push_back(t);
    comps.push_back(std::move(kept));
  }
  return GaussCode::from_components(std::move(comps), code.kind());
}

std::set<int> chord_ids(const GaussCode& code) {
  std::set<int> out;
  for (const auto& c : code.components())
    for (const auto& t : c) out.insert(t.chord);
  return out;
}

// Does deleting some `k` chords of `big` give `small`?
bool reduces_to(const GaussCode& big, const GaussCode& small, std::size_t k) {
  const auto ids = chord_ids(big);
  const std::vector<int> v(ids.begin(), ids.end());
  const auto target = key(small);
  std::vector<bool> mask(v.size(), false);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(k), mask.end(), true);
  do {
    std::set<int> drop;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask[i]) drop.insert(v[i]);
    if (key(without(big, drop)) == target) return true;
  } while (std::next_permutation(mask.begin(), mask.end()));
  return false;
}

void check_move(const PlanarDiagram& before, const PlanarDiagram& after, const DiagramMoveRecord& rec) {
  CHECK(pd_map_genus(after) == 0);
  const auto a = pd_to_gauss(before), b = pd_to_gauss(after);
  INFO(std::string(to_string(rec.type)), " ", format_pd(before), "->\n", format_pd(after));
  if (rec.kind == CrossingKind::Virtual || rec.mixed) {
    CHECK(key(a) == key(b));
    return;
  }
  switch (rec.type) {
    case DiagramMoveType::KinkAdd: CHECK(reduces_to(b, a, 1)); break;
    case DiagramMoveType::KinkRemove: CHECK(reduces_to(a, b, 1)); break;
    case DiagramMoveType::BigonAdd: CHECK(reduces_to(b, a, 2)); break;
    case DiagramMoveType::BigonRemove: CHECK(reduces_to(a, b, 2)); break;
    case DiagramMoveType::Triangle: CHECK(a.chord_count() == b.chord_count()); break;
  }
}

}  // namespace

TEST_CASE("flat H parity") {
  const auto h = load_flat_h();
  CHECK(h.count(CrossingKind::Flat) == 1);
  CHECK(h.count(CrossingKind::Virtual) == 1);
  CHECK(traverse_pd(h).components.size() == 2);
  CHECK(inter_component_virtual_parity(h) == 1);
  CHECK(pd_map_genus(h) == 0);
}

TEST_CASE("move enumeration on flat H") {
  const auto h = load_flat_h();
  // Four edges, two crossing kinds, two sides.
  CHECK(flat_move_results(h, DiagramMoveType::KinkAdd).size() == 16);
  CHECK(flat_move_results(h, DiagramMoveType::KinkRemove).empty());
  CHECK(flat_move_results(h, DiagramMoveType::BigonRemove).empty());
  CHECK(flat_move_results(h, DiagramMoveType::Triangle).empty());
  for (const auto& [pd, rec] : flat_move_results(h, DiagramMoveType::BigonAdd)) {
    check_move(h, pd, rec);
    // Undoing is available.
    const auto back = flat_move_results(pd, DiagramMoveType::BigonRemove);
    CHECK(std::any_of(back.begin(), back.end(), [&](const auto& r) {
      return key(pd_to_gauss(r.first)) == key(pd_to_gauss(h)) && r.first.crossings.size() == 2;
    }));
  }
}

TEST_CASE("kinks undo") {
  const auto h = load_flat_h();
  for (const auto& [pd, rec] : flat_move_results(h, DiagramMoveType::KinkAdd)) {
    check_move(h, pd, rec);
    CHECK(!flat_move_results(pd, DiagramMoveType::KinkRemove).empty());
  }
  PlanarDiagram loop;
  loop.free_loops = 1;
  const auto kinked = flat_move_results(loop, DiagramMoveType::KinkAdd);
  CHECK(kinked.size() == 4);
  for (const auto& [pd, rec] : kinked) {
    const auto back = flat_move_results(pd, DiagramMoveType::KinkRemove);
    REQUIRE(back.size() == 1);
    CHECK(back[0].first == loop);
  }
}

TEST_CASE("classical crossings are rejected") {
  const auto pd = realize(parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+"));
  CHECK_THROWS_AS(flat_move_results(pd, DiagramMoveType::KinkAdd), Error);
}

TEST_CASE("random moves keep flat H parity") {
  std::mt19937_64 rng(42);
  auto pd = load_flat_h();
  std::set<DiagramMoveType> seen;
  for (int step = 0; step < 100; ++step) {
    const auto before = pd;
    const auto rec = apply_random_flat_move(pd, rng);
    REQUIRE(rec.has_value());
    seen.insert(rec->type);
    check_move(before, pd, *rec);
    CHECK(inter_component_virtual_parity(pd) == 1);
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("random moves on drawn flat codes") {
  std::mt19937 gen(8);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    const auto code = testing::random_code(gen, 2 + trial % 3, 1 + trial % 2, CodeKind::Flat);
    auto pd = realize(code);
    const int parity = inter_component_virtual_parity(pd);
    for (int step = 0; step < 40; ++step) {
      const auto before = pd;
      const auto rec = apply_random_flat_move(pd, rng, before.crossings.size() + 4);
      REQUIRE(rec.has_value());
      check_move(before, pd, *rec);
      CHECK(inter_component_virtual_parity(pd) == parity);
    }
  }
}
