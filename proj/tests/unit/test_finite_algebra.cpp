#include <algorithm>
#include <random>
#include <set>

#include "catalog_codes.hpp"
#include "doctest.h"
#include "support.hpp"
#include "vknot/finite_algebra.hpp"
#include "vknot/moves.hpp"

using namespace vknot;
using vknot::testing::kTrefoil;
using vknot::testing::kVirtualTrefoil;

TEST_CASE("axioms of small examples") {
  for (int m = 1; m <= 4; ++m) {
    const auto r = check_axioms(trivial_birack(m));
    CHECK(r.birack);
    CHECK(r.biquandle);
    CHECK(r.strong);
  }
  const auto r3 = dihedral_quandle(3);
  CHECK(check_axioms(r3).biquandle);
  CHECK(check_switch_axioms(r3).biquandle);

  auto up = r3.up_table();
  std::swap(up[0], up[3]);  // column 0 stays a permutation, YB breaks
  const FiniteBirack bad(3, up, r3.down_table(), r3.upbar_table(), r3.downbar_table());
  const auto rep = check_axioms(bad);
  CHECK_FALSE(rep.birack);
  bool named = false;
  for (const auto& f : rep.failures) named |= f.find("(") != std::string::npos;
  CHECK(named);
}

TEST_CASE("the two axiom checkers agree on every order-2 table tuple") {
  std::size_t biquandles = 0;
  for (int bits = 0; bits < (1 << 16); ++bits) {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int k = 0; k < 16; ++k) t[static_cast<std::size_t>(k / 4)][static_cast<std::size_t>(k % 4)] = (bits >> k) & 1;
    const FiniteBirack b(2, t[0], t[1], t[2], t[3]);
    const auto r1 = check_axioms(b);
    const auto r2 = check_switch_axioms(b);
    CHECK(r1.birack == r2.birack);
    CHECK(r1.biquandle == r2.biquandle);
    CHECK(r1.strong == r2.strong);
    biquandles += r1.biquandle;
  }
  CHECK(biquandles > 0);
}

TEST_CASE("the two axiom checkers agree on random order-3 tables") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> v(0, 2);
  for (int trial = 0; trial < 20000; ++trial) {
    std::vector<std::vector<int>> t(4, std::vector<int>(9));
    for (auto& table : t)
      for (auto& x : table) x = v(rng);
    const FiniteBirack b(3, t[0], t[1], t[2], t[3]);
    CHECK(check_axioms(b).birack == check_switch_axioms(b).birack);
  }
  for (const auto& b : enumerate_biracks(3, BirackFamily::Biracks)) {
    const auto r1 = check_axioms(b), r2 = check_switch_axioms(b);
    CHECK(r1.birack == r2.birack);
    CHECK(r1.biquandle == r2.biquandle);
    CHECK(r1.strong == r2.strong);
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_biracks(1, BirackFamily::Biracks).size() == 1);

  // Order-2 biquandles by brute force over all table tuples, up to relabelling.
  std::set<std::vector<int>> brute;
  for (int bits = 0; bits < (1 << 16); ++bits) {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int k = 0; k < 16; ++k) t[static_cast<std::size_t>(k / 4)][static_cast<std::size_t>(k % 4)] = (bits >> k) & 1;
    const FiniteBirack b(2, t[0], t[1], t[2], t[3]);
    if (!check_switch_axioms(b).biquandle) continue;
    const auto swapped = b.relabel({1, 0});
    brute.insert(std::min(b.flat(), swapped.flat()));
  }
  CHECK(enumerate_biracks(2, BirackFamily::Biquandles).size() == brute.size());

  const auto quandles = enumerate_biracks(3, BirackFamily::Quandles);
  const auto r3 = canonical_form(dihedral_quandle(3));
  CHECK(std::find(quandles.begin(), quandles.end(), r3) != quandles.end());
  for (const auto& q : quandles) CHECK(q == canonical_form(q));
  CHECK_FALSE(enumerate_biracks(4, BirackFamily::Quandles).empty());
}

TEST_CASE("colorings") {
  const auto r3 = dihedral_quandle(3);
  CHECK(colorings(parse_gauss(""), r3) == 3);
  CHECK(colorings(parse_gauss(""), trivial_birack(5)) == 5);
  CHECK(colorings(parse_gauss(kTrefoil), r3) == 9);
  CHECK(colorings(parse_gauss("O1+,U2+|O2+,U1+"), trivial_birack(3)) == 9);
  CHECK(colorings(parse_gauss("|"), trivial_birack(2)) == 4);
  CHECK(iq_colorings(parse_gauss(""), dihedral_iq(3)) == 3);
  CHECK(iq_colorings(parse_gauss(kTrefoil), dihedral_iq(3)) == 9);

  // Brute force over all labellings of the trefoil's six edges.
  const auto code = parse_gauss(kTrefoil);
  const CodeLayout lay(code);
  std::uint64_t brute = 0;
  for (int w = 0; w < 729; ++w) {
    std::vector<int> l(6);
    for (int k = 0, x = w; k < 6; ++k, x /= 3) l[static_cast<std::size_t>(k)] = x % 3;
    bool ok = true;
    for (int id = 1; id <= 3; ++id) {
      const auto& ch = lay.chord(id);
      const int u = l[lay.prev(ch.under)], o = l[lay.prev(ch.over)];
      ok &= l[ch.under] == r3.up(u, o) && l[ch.over] == r3.down(o, u);
    }
    brute += ok;
  }
  CHECK(brute == 9);
}

TEST_CASE("colorings are unchanged by moves for every small biquandle") {
  std::vector<FiniteBirack> all;
  for (int m = 1; m <= 3; ++m)
    for (auto& b : enumerate_biracks(m, BirackFamily::Biquandles)) all.push_back(b);
  CHECK(all.size() > 3);
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto start = testing::random_code(rng, 1 + trial % 4);
    auto code = start;
    for (int step = 0; step < 8; ++step) code = testing::random_move(code, rng, 7);
    for (const auto& b : all) CHECK(colorings(code, b) == colorings(start, b));
  }
}

TEST_CASE("involutory quandles") {
  for (int m = 1; m <= 4; ++m)
    for (const auto& q : enumerate_involutory_quandles(m)) CHECK(q.valid());
  CHECK(enumerate_involutory_quandles(1).size() == 1);
  CHECK(dihedral_iq(5).valid());
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const auto code = testing::random_code(rng, 1 + trial % 5);
    for (int i = 1; i <= static_cast<int>(code.chord_count()); ++i)
      for (const auto& q : enumerate_involutory_quandles(3)) CHECK(iq_colorings(virtualize(code, i), q) == iq_colorings(code, q));
  }
}

TEST_CASE("birack text round trip") {
  const auto r3 = dihedral_quandle(3);
  CHECK(parse_birack(format_birack(r3)) == r3);
  CHECK(named_birack("R3") == r3);
  CHECK(named_birack("T2") == trivial_birack(2));
}
