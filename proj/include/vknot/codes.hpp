#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vknot/gauss_code.hpp"
#include "vknot/planar_diagram.hpp"

namespace vknot {

/// Labelled interlacement graph of a one-component chord diagram.
struct IntersectionGraph {
  std::vector<int> vertices;                 // chord ids
  std::vector<int> labels;                   // chord signs, parallel to vertices
  std::vector<std::pair<int, int>> edges;    // (a, b) with a < b, sorted

  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;
};

struct DiagramStats {
  std::size_t crossings = 0;
  std::size_t virtual_crossings = 0;
  int genus = 0;
  std::size_t components = 0;
};

/// Genus of the closed oriented surface carrying the code's ribbon graph.
///
/// At a crossing with over strand O and under strand U the darts are ordered
/// counterclockwise as (U in, O out, U out, O in) when the sign is +1 and
/// (U in, O in, U out, O out) when it is -1. Faces are the orbits of
/// rotation-after-edge-swap; each connected piece contributes (2 - V + E - F) / 2.
int carrier_genus(const GaussCode& code);

IntersectionGraph intersection_graph(const GaussCode& code);

GaussCode project_flat(const GaussCode& code);
GaussCode project_free(const GaussCode& code);

/// Planar diagram whose classical crossings read back as `code`. Codes of
/// carrier genus 0 are drawn from their rotation system with no virtual
/// crossings. Otherwise the strand is laid along a line, each chord is
/// closed by a pair of half-circle excursions and every excursion overlap
/// becomes a virtual crossing; the endpoint choice per chord is greedy.
PlanarDiagram realize(const GaussCode& code);

DiagramStats diagram_stats(const GaussCode& code);

/// Rotates component `component` so that index `shift` comes first. Flat
/// signs are adjusted when a chord's occurrence order flips.
GaussCode rotate_component(const GaussCode& code, std::size_t component, std::size_t shift);

/// Lexicographically least code over all cyclic rotations of every
/// component, for use as a dedup key. Component order is kept.
GaussCode canonical_rotation(const GaussCode& code);

/// Reverses every component. Classical signs are unchanged because both
/// strands at a crossing flip; flat signs flip with the occurrence order.
GaussCode reverse_orientation(const GaussCode& code);

}  // namespace vknot
