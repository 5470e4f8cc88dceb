#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_code.hpp"

namespace vknot {

enum class CrossingKind : std::uint8_t { Classical, Virtual, Flat };

/// A crossing as four edge labels in counterclockwise order. Classical
/// crossings start from the incoming under-edge; virtual and flat crossings
/// start from an incoming edge, so positions 0 and 2 always belong to one
/// strand (in, out) and positions 1 and 3 to the other.
struct PDCrossing {
  CrossingKind kind = CrossingKind::Classical;
  std::array<int, 4> edges{};

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

/// PD-style diagram. Edges are positive labels; each appears exactly twice,
/// once entering and once leaving a crossing. Components without any
/// crossing are counted in `free_loops`.
struct PlanarDiagram {
  std::vector<PDCrossing> crossings;
  std::size_t free_loops = 0;

  std::size_t count(CrossingKind kind) const noexcept;
  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

/// Where an edge label sits: crossing index and slot (0..3).
struct PDSlot {
  std::size_t crossing = 0;
  int slot = 0;
};

/// Oriented traversal of a diagram. Slots 0 and 2 of a crossing always carry
/// one strand; the direction of the other strand is recovered by walking.
struct PDTraversal {
  struct Edge {
    PDSlot tail;  // crossing the edge leaves
    PDSlot head;  // crossing the edge enters
    std::size_t component = 0;
  };
  std::vector<std::vector<int>> components;  // edge labels in traversal order
  std::vector<Edge> edges;                   // indexed by label - 1
};

/// Throws InvalidInput unless the labels are 1..E, each used exactly twice,
/// and every strand can be oriented consistently.
PDTraversal traverse_pd(const PlanarDiagram& pd);

/// Sign of a classical crossing as determined by the strand directions.
int pd_crossing_sign(const PlanarDiagram& pd, const PDTraversal& tr, std::size_t crossing);

/// Genus of the map obtained by treating every crossing (virtual included)
/// as a vertex with the stored counterclockwise rotation. A faithful plane
/// drawing has genus 0.
int pd_map_genus(const PlanarDiagram& pd);

/// Reads the classical (or flat) crossings back off a diagram as a Gauss
/// code. Virtual crossings are skipped.
GaussCode pd_to_gauss(const PlanarDiagram& pd);

/// Number of virtual crossings between distinct components, mod 2.
int inter_component_virtual_parity(const PlanarDiagram& pd);

/// Text form: one crossing per line `X|V|F a b c d`, plus optional `L k`
/// for k crossingless loops. `#` starts a comment.
PlanarDiagram parse_pd(std::string_view text);
std::string format_pd(const PlanarDiagram& pd);

}  // namespace vknot
