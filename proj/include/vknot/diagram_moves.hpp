#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "vknot/planar_diagram.hpp"

namespace vknot {

/// Plane moves on diagrams whose crossings are all flat or virtual.
enum class DiagramMoveType : std::uint8_t { KinkAdd, KinkRemove, BigonAdd, BigonRemove, Triangle };

struct DiagramMoveRecord {
  DiagramMoveType type = DiagramMoveType::KinkAdd;
  CrossingKind kind = CrossingKind::Flat;  // kind of the crossings created or removed
  bool mixed = false;                      // triangle with one flat and two virtual crossings
};

const char* to_string(DiagramMoveType type);

/// Every diagram reachable by one move of `type`, each paired with its record.
/// Results stay planar: a bigon is pushed across a face shared by two edges
/// and a triangle move needs a triangular face whose crossings are all flat,
/// all virtual, or one flat and two virtual. Throws InvalidInput if `pd` has
/// classical crossings.
std::vector<std::pair<PlanarDiagram, DiagramMoveRecord>> flat_move_results(const PlanarDiagram& pd,
                                                                           DiagramMoveType type);

/// Applies one uniformly chosen applicable move. Adding moves are skipped
/// once the diagram has `max_crossings` crossings.
std::optional<DiagramMoveRecord> apply_random_flat_move(PlanarDiagram& pd, std::mt19937_64& rng,
                                                        std::size_t max_crossings = 10);

}  // namespace vknot
