#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "vknot/gauss_code.hpp"

namespace vknot::testing {

/// Random classical code with `chords` chords spread over `components`
/// components (each non-empty when chords allow).
inline GaussCode random_code(std::mt19937& rng, int chords, int components = 1,
                             CodeKind kind = CodeKind::Classical) {
  std::vector<Token> pool;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int c = 1; c <= chords; ++c) {
    const int sign = kind == CodeKind::Free ? 0 : (coin(rng) ? 1 : -1);
    Passage a = Passage::Over, b = Passage::Under;
    if (kind == CodeKind::Flat) a = b = Passage::Flat;
    if (kind == CodeKind::Free) a = b = Passage::Free;
    pool.push_back({c, a, sign});
    pool.push_back({c, b, sign});
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Component> comps(static_cast<std::size_t>(components));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const std::size_t slot = i < comps.size() ? i : std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng);
    comps[slot].push_back(pool[i]);
  }
  return GaussCode::from_components(std::move(comps), kind);
}

}  // namespace vknot::testing

#include "vknot/moves.hpp"

namespace vknot::testing {

/// Applies one random applicable Reidemeister move, keeping the chord count
/// at most `max_chords`. Deletions and R3 moves are favoured when present so
/// that walks stay small.
inline GaussCode random_move(const GaussCode& code, std::mt19937& rng, std::size_t max_chords,
                             MoveDescriptor* chosen = nullptr) {
  const auto moves = enumerate_moves(code, true);
  std::vector<const MoveDescriptor*> shrink, same, grow;
  for (const auto& m : moves) {
    switch (m.kind) {
      case MoveKind::R1Delete:
      case MoveKind::R2Delete: shrink.push_back(&m); break;
      case MoveKind::R3: same.push_back(&m); break;
      case MoveKind::R1Insert:
        if (code.chord_count() + 1 <= max_chords) grow.push_back(&m);
        break;
      case MoveKind::R2Insert:
        if (code.chord_count() + 2 <= max_chords) grow.push_back(&m);
        break;
    }
  }
  std::vector<const MoveDescriptor*>* pools[] = {&shrink, &same, &grow};
  std::uniform_int_distribution<int> pick_pool(0, 2);
  for (;;) {
    auto& pool = *pools[pick_pool(rng)];
    if (pool.empty()) continue;
    const auto* m = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    if (chosen) *chosen = *m;
    return apply_move(code, *m);
  }
}

}  // namespace vknot::testing
