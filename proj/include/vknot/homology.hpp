#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vknot/finite_algebra.hpp"

namespace vknot {

/// An n-cube a_1 ... a_n of birack labels.
struct CubeWord {
  std::vector<int> labels;

  std::size_t dimension() const noexcept { return labels.size(); }
  /// a_i = a_{i+1} for some i.
  bool degenerate() const;
  friend bool operator==(const CubeWord&, const CubeWord&) = default;
};

/// The two operations used by the cube complex, read off the switch as
/// S(a, b_a) = (b, a^b). With the stored tables S(a, c) = (c_a, a^c) this
/// gives b_a = the c with down(c, a) = b, and a^b = up(a, b_a). For racks
/// they coincide with the stored up and down.
struct CubeOperations {
  int m = 0;
  std::vector<int> sup, sub;  // row-major a^b and a_b

  explicit CubeOperations(const FiniteBirack& b);
  int up(int a, int b) const { return sup[static_cast<std::size_t>(a * m + b)]; }
  int down(int a, int b) const { return sub[static_cast<std::size_t>(a * m + b)]; }
  /// a^a = a_a for every label.
  bool biquandle() const;
};

/// Inverse of CubeOperations: the birack whose switch has the given
/// operations. Throws InvalidInput when the lower operation is not right
/// invertible or the switch is not a bijection.
FiniteBirack birack_from_cube_operations(int m, const std::vector<int>& sup, const std::vector<int>& sub);

enum class FaceSign : std::uint8_t { Minus, Plus };

/// Face i (1-based) of a cube. The minus face deletes a_i; the plus face also
/// deletes it and replaces a_j by a_j^{a_i} for j < i and by (a_j)_{a_i} for
/// j > i. Throws IndexOutOfRange.
CubeWord face(const FiniteBirack& b, const CubeWord& w, std::size_t i, FaceSign sign);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Cubical chain complex in degrees 1..max_dim. boundary[n] is the matrix of
/// d_n : C_n -> C_{n-1} (rows indexed by (n-1)-cubes, columns by n-cubes,
/// both in lexicographic order); d_1 = 0 and boundary[0] is unused.
struct ChainComplex {
  FiniteBirack birack;
  std::size_t max_dim = 0;
  std::vector<std::size_t> ranks;  // ranks[n] = m^n, ranks[0] unused
  std::vector<IntMatrix> boundary;
};

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1, each dividing the next

  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

enum class HomologyVariant : std::uint8_t { Full, BiquandleQuotient };

inline constexpr std::size_t kDefaultCubeCap = 4096;

/// d = sum_i (-1)^i (d_i^- - d_i^+). Throws SizeCap when m^max_dim exceeds
/// `cube_cap` and InvalidInput when d o d != 0, which happens exactly when
/// the tables break the Yang-Baxter equations.
ChainComplex boundary_matrices(const FiniteBirack& b, std::size_t max_dim,
                               std::size_t cube_cap = kDefaultCubeCap);

/// H_k for 1 <= k < max_dim. The quotient variant divides out the degenerate
/// cubes first and throws NotBiquandle unless a^a = a_a for all a.
HomologyGroup homology(const ChainComplex& c, std::size_t k, HomologyVariant variant = HomologyVariant::Full);

/// Rows and columns of d_n restricted to non-degenerate cubes.
IntMatrix quotient_boundary(const ChainComplex& c, std::size_t n);

/// Invariant factors of an integer matrix (nonzero diagonal of its Smith
/// normal form, each dividing the next); the rank is their count.
std::vector<std::int64_t> smith_invariants(const IntMatrix& m);

/// The pairs of pairs (ac, bc) with c^a = c^b, as (a, b, c).
std::vector<std::array<int, 3>> double_pair_set(const FiniteBirack& b);

/// Double on the label set X x X, label (a, c) numbered a*m + c, in cube
/// operations: (a c)^{(b d)} = a^b c^b and (b d)_{(a c)} = b_a d^a, which
/// restrict to the stated formulas on W.
FiniteBirack double_birack(const FiniteBirack& b);

/// Group presentation with generators x0 .. x{m-1}.
struct GroupPresentation {
  std::size_t generators = 0;
  /// Each relator is a word of (generator, +1 | -1) letters.
  std::vector<std::vector<std::pair<int, int>>> relators;

  /// `< x0, x1 | x0*x1*x0^-1*x1^-1, ... >`
  std::string to_string() const;
};

/// Relators x y_x (x^y)^-1 y^-1 for every ordered pair (x, y).
GroupPresentation pi1_presentation(const FiniteBirack& b);

/// Abelianization via the Smith form of the exponent-sum matrix.
HomologyGroup abelianization(const GroupPresentation& p);

}  // namespace vknot
