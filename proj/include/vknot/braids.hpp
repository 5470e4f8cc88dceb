#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_code.hpp"

namespace vknot {

struct BraidLetter {
  enum class Kind : std::uint8_t { Sigma, Rho };
  Kind kind = Kind::Sigma;
  int index = 1;     // 1 <= index <= n - 1
  int exponent = 1;  // +1 or -1; always +1 for Rho

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 2;
  std::vector<BraidLetter> letters;

  /// Whitespace-separated `s<i>`, `S<i>` (inverse) and `r<i>`.
  std::string to_string() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Throws SyntaxError on a bad token and IndexOutOfRange when an index falls
/// outside 1..strands-1.
BraidWord parse_braid(std::string_view text, int strands);

/// Reduced word in a free group: letter g > 0 is generator g, -g its inverse.
using FreeWord = std::vector<int>;

FreeWord free_reduce(FreeWord w);
FreeWord free_inverse(const FreeWord& w);

/// Automorphism given by the images of generators 1..rank.
struct FreeGroupAutomorphism {
  std::size_t rank = 0;
  std::vector<FreeWord> images;  // images[g - 1]

  static FreeGroupAutomorphism identity(std::size_t rank);
  /// Image of an arbitrary word, freely reduced.
  FreeWord apply(const FreeWord& w) const;
  /// This map followed by `next`: x -> next(this(x)).
  FreeGroupAutomorphism then(const FreeGroupAutomorphism& next) const;
  /// Images written with x1..x{rank-1} and y for the last generator.
  std::string to_string() const;

  friend bool operator==(const FreeGroupAutomorphism&, const FreeGroupAutomorphism&) = default;
};

/// Representation into Aut(F_{n+1}) on x1..xn (generators 1..n) and y
/// (generator n+1). sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i;
/// rho_i: x_i -> y x_{i+1} y^-1, x_{i+1} -> y^-1 x_i y. Letters act left to
/// right, so rho_image(uv) = rho_image(u).then(rho_image(v)).
FreeGroupAutomorphism rho_image(const BraidWord& w);

struct RelationCheck {
  std::string family;  // braid, symmetric, mixed, welded
  BraidWord lhs, rhs;
  bool holds = false;
};

struct PresentationReport {
  int strands = 0;
  std::vector<RelationCheck> checks;
  bool all_hold() const;
  /// Ignores the welded family, which is not a relation of VB_n.
  bool defining_relations_hold() const;
  std::vector<RelationCheck> failures() const;
};

/// Checks every defining relation of VB_n, and the welded relation
/// rho_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i rho_{i+1}, under rho_image.
/// Throws InvalidInput unless 2 <= n <= 6.
PresentationReport verify_presentation(int strands);

/// Gauss code of the closure. Strand tracing starts from the lowest unused
/// top position; sigma_i^e is one chord of sign e on which the strand coming
/// from position i passes over for e = +1 and under for e = -1; rho letters
/// only permute positions.
GaussCode close_braid(const BraidWord& w);

/// Image in the flat virtual braid group: signs dropped, then adjacent
/// sigma_i sigma_i and rho_i rho_i cancelled until none remain.
BraidWord flat_quotient(const BraidWord& w);

}  // namespace vknot
