#pragma once

#include <cstddef>
#include <cstdint>

#include "vknot/gauss_code.hpp"
#include "vknot/laurent1.hpp"

namespace vknot {

/// Kauffman bracket with the one-loop diagram normalised to 1. At a crossing
/// the A-smoothing joins the strands the way the orientation does exactly
/// when the sign is +1.
LaurentPoly1 bracket(const GaussCode& code);

/// (-A^3)^(-w) times the bracket, w the sum of the chord signs.
LaurentPoly1 f_polynomial(const GaussCode& code);

/// Number of loops in the state given by `a_mask` (bit i set: chord i+1
/// takes the A-smoothing). Free loops are counted.
std::size_t state_loops(const GaussCode& code, std::uint64_t a_mask);

struct AtomProfile {
  std::size_t sA = 0;
  std::size_t sB = 0;
  /// 2 - Euler characteristic summed over connected pieces. Odd values only
  /// occur for non-orientable atoms.
  int twice_genus = 0;
  bool orientable = true;

  double genus() const { return twice_genus / 2.0; }
};

AtomProfile atom_profile(const GaussCode& code);

struct SpanBound {
  int span = 0;
  int bound = 0;  // 4n - 4g with g the atom genus
  bool holds = true;
};

/// Throws ZeroBracket when the bracket vanishes.
SpanBound span_bound_check(const GaussCode& code);

}  // namespace vknot
