#pragma once

#include <cstddef>

#include "vknot/bareiss.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/laurent2.hpp"

namespace vknot {

/// Rows are crossing relations (two per chord, chords in id order: the
/// under-out row, then the over-out row); columns are edges in code
/// position order, edge g leaving position g.
using RelationMatrix = Matrix<LaurentPoly2>;

/// Linear switch of the Alexander biquandle: under-out = t*a + (1 - st)*b
/// and over-out = s*b at a positive crossing with under-in a and over-in b;
/// t^-1, 1 - s^-1 t^-1 and s^-1 at a negative one. Throws EmptyCode when
/// there are no crossings.
RelationMatrix relation_matrix(const GaussCode& code);

LaurentPoly2 determinant(const RelationMatrix& m);

/// Determinant of the relation matrix in canonical unit form. Zero for
/// crossingless codes and for links with a crossingless component.
LaurentPoly2 generalized_alexander(const GaussCode& code);

/// Canonical primitive gcd of all (d - k) x (d - k) minors.
LaurentPoly2 elementary_ideal_gcd(const RelationMatrix& m, std::size_t codim);

}  // namespace vknot
