#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vknot/gauss_code.hpp"

namespace vknot {

enum class MoveKind : std::uint8_t { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

/// A place in a code: component and token index. Insertion sites put the
/// new tokens in front of `index`; an empty component only has index 0.
struct Site {
  std::size_t component = 0;
  std::size_t index = 0;

  friend auto operator<=>(const Site&, const Site&) = default;
};

/// One Reidemeister rewrite on a Gauss code.
///
/// R1Delete: sites = {first token of the adjacent pair}.
/// R2Delete: sites = {first of the adjacent over pair, first of the adjacent under pair}.
/// R3: sites = {first token of the top, middle and bottom segments}.
/// R1Insert: sites = {insertion point}; `sign` of the new chord; `flag` puts
///   the under passage first.
/// R2Insert: sites = {over insertion, under insertion}; `sign` of the chord
///   met first by the over strand; `flag` makes the under strand run
///   antiparallel. When both sites coincide the over pair goes first unless
///   `under_first`.
struct MoveDescriptor {
  MoveKind kind = MoveKind::R1Delete;
  std::vector<Site> sites;
  int sign = 1;
  bool flag = false;
  bool under_first = false;

  friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

std::string to_string(MoveKind kind);

/// Throws NotApplicable when the pattern does not match at the given sites.
GaussCode apply_move(const GaussCode& code, const MoveDescriptor& move);

/// All deletions and R3 moves, plus insertions: every R1 variant at every
/// site and, when `with_r2_insertions`, every R2 variant at every site pair.
std::vector<MoveDescriptor> enumerate_moves(const GaussCode& code, bool with_r2_insertions = true);

/// Crossing change: passages swapped and sign flipped.
GaussCode switch_crossing(const GaussCode& code, int chord);

/// Flanks a crossing with two virtual crossings. The same strand stays over
/// while the local picture is mirrored, so only the sign flips.
GaussCode virtualize(const GaussCode& code, int chord);

struct SimplifyResult {
  GaussCode code;
  std::vector<MoveDescriptor> certificate;  // replaying these on the input gives `code`
  bool exhausted = false;                   // search space cut off by the budget
};

/// Greedy R1/R2 deletions, then a breadth-first search over insertion and
/// deletion sequences up to `budget` moves for a code with fewer chords.
/// The search never holds codes with more than two extra chords.
SimplifyResult simplify(const GaussCode& code, int budget);

/// Replays a certificate; throws NotApplicable if any step fails.
GaussCode replay(const GaussCode& code, const std::vector<MoveDescriptor>& moves);

}  // namespace vknot
