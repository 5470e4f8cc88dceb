#include <random>

#include "catalog_codes.hpp"
#include "doctest.h"
#include "support.hpp"
#include "vknot/codes.hpp"
#include "vknot/error.hpp"
#include "vknot/moves.hpp"
#include "vknot/state_sum.hpp"

using namespace vknot;
using vknot::testing::kTrefoil;
using vknot::testing::kVirtualTrefoil;

namespace {

std::size_t count_kind(const std::vector<MoveDescriptor>& ms, MoveKind k) {
  return static_cast<std::size_t>(std::count_if(ms.begin(), ms.end(), [&](const auto& m) { return m.kind == k; }));
}

}  // namespace

TEST_CASE("deletions on small codes") {
  CHECK(apply_move(parse_gauss("O1+,U1+"), {MoveKind::R1Delete, {{0, 0}}}) == parse_gauss(""));
  const auto r2 = parse_gauss("O1+,U2-,U1+,O2-");
  const auto moves = enumerate_moves(r2);
  REQUIRE(count_kind(moves, MoveKind::R2Delete) == 1);
  for (const auto& m : moves)
    if (m.kind == MoveKind::R2Delete) CHECK(apply_move(r2, m) == parse_gauss(""));
  CHECK_THROWS_AS(apply_move(parse_gauss(kTrefoil), {MoveKind::R1Delete, {{0, 0}}}), Error);
}

TEST_CASE("insertions") {
  CHECK(apply_move(parse_gauss(""), {MoveKind::R1Insert, {{0, 0}}, 1, false}).to_string() == "O1+,U1+");
  CHECK(apply_move(parse_gauss(""), {MoveKind::R1Insert, {{0, 0}}, -1, true}).to_string() == "U1-,O1-");
  const auto two = apply_move(parse_gauss(""), {MoveKind::R2Insert, {{0, 0}, {0, 0}}, 1, false, false});
  CHECK(two.to_string() == "O1+,O2-,U1+,U2-");
  const auto empty_moves = enumerate_moves(parse_gauss(""));
  for (const auto& m : empty_moves) CHECK((m.kind == MoveKind::R1Insert || m.kind == MoveKind::R2Insert));
}

TEST_CASE("enumerated moves") {
  CHECK(count_kind(enumerate_moves(parse_gauss("O1+,U1+")), MoveKind::R1Delete) == 1);
  const auto vt = enumerate_moves(parse_gauss(kVirtualTrefoil));
  CHECK(count_kind(vt, MoveKind::R1Delete) == 0);
  CHECK(count_kind(vt, MoveKind::R2Delete) == 0);
}

TEST_CASE("every enumerated move applies and round-trips through its inverse") {
  std::mt19937 rng(31);
  std::size_t r3_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto code = testing::random_code(rng, 1 + trial % 5);
    for (int step = 0; step < 5; ++step) code = testing::random_move(code, rng, 7);
    for (const auto& m : enumerate_moves(code)) {
      const auto out = apply_move(code, m);
      CHECK(out.chord_count() <= code.chord_count() + 2);
      if (m.kind == MoveKind::R3) {
        ++r3_seen;
        // The image carries an R3 triangle leading back.
        bool back = false;
        for (const auto& m2 : enumerate_moves(out, false))
          if (m2.kind == MoveKind::R3 && apply_move(out, m2) == code) back = true;
        CHECK(back);
        CHECK(bracket(out) == bracket(code));
      }
    }
  }
  CHECK(r3_seen > 20);
}

TEST_CASE("R3 on the standard braid triangle") {
  // Three two-passage strands forming one triangle. Each strand is a closed
  // loop, so the triangle is found once per reading of each loop.
  std::size_t found = 0;
  const auto tri = parse_gauss("O1+,O2+|U1+,O3+|U2+,U3+");
  for (const auto& m : enumerate_moves(tri, false))
    if (m.kind == MoveKind::R3) {
      ++found;
      CHECK(apply_move(tri, m) == parse_gauss("O2+,O1+|O3+,U1+|U3+,U2+"));
    }
  CHECK(found >= 1);
}

TEST_CASE("switch and virtualize") {
  const auto curl = parse_gauss("O1+,U1+");
  CHECK(switch_crossing(curl, 1).to_string() == "U1-,O1-");
  std::mt19937 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const auto code = testing::random_code(rng, 1 + trial % 6);
    for (int i = 1; i <= static_cast<int>(code.chord_count()); ++i) {
      CHECK(switch_crossing(switch_crossing(code, i), i) == code);
      CHECK(virtualize(virtualize(code, i), i) == code);
      const auto arrow_reversed = [&] {
        auto comps = code.components();
        for (auto& c : comps)
          for (auto& t : c)
            if (t.chord == i) t.passage = t.passage == Passage::Over ? Passage::Under : Passage::Over;
        return GaussCode::from_components(std::move(comps));
      }();
      CHECK(project_flat(virtualize(code, i)) == project_flat(arrow_reversed));
    }
  }
  CHECK_THROWS_AS(switch_crossing(curl, 2), Error);
  CHECK_THROWS_AS(virtualize(curl, 0), Error);
}

TEST_CASE("simplify") {
  const auto curl = simplify(parse_gauss("O1+,U1+"), 2);
  CHECK(curl.code == parse_gauss(""));
  CHECK(replay(parse_gauss("O1+,U1+"), curl.certificate) == curl.code);

  const auto vt = simplify(parse_gauss(kVirtualTrefoil), 4);
  CHECK(vt.code.chord_count() == 2);

  const auto unknotted = switch_crossing(parse_gauss(kTrefoil), 1);
  CHECK(carrier_genus(unknotted) == 0);
  const auto res = simplify(unknotted, 3);
  CHECK(res.code == parse_gauss(""));
  CHECK(replay(unknotted, res.certificate) == res.code);
}
