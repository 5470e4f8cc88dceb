#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "vknot/bareiss.hpp"
#include "vknot/bigint.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/laurent2.hpp"

namespace vknot {

/// w + x i + y j + z k with integer coefficients.
struct IntegerQuaternion {
  BigInt w = 0, x = 0, y = 0, z = 0;

  IntegerQuaternion() = default;
  IntegerQuaternion(BigInt w_, BigInt x_ = 0, BigInt y_ = 0, BigInt z_ = 0)  // NOLINT: integers convert
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  IntegerQuaternion(int c) : w(c) {}  // NOLINT

  static IntegerQuaternion i() { return {0, 1, 0, 0}; }
  static IntegerQuaternion j() { return {0, 0, 1, 0}; }
  static IntegerQuaternion k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  IntegerQuaternion conj() const { return {w, -x, -y, -z}; }
  BigInt norm() const { return w * w + x * x + y * y + z * z; }

  /// q = zc + wc j with zc = w + x i and wc = y + z i.
  GaussInt complex_part() const { return {w, x}; }
  GaussInt j_part() const { return {y, z}; }

  IntegerQuaternion& operator+=(const IntegerQuaternion& o);
  IntegerQuaternion& operator-=(const IntegerQuaternion& o);
  friend IntegerQuaternion operator+(IntegerQuaternion a, const IntegerQuaternion& b) { return a += b; }
  friend IntegerQuaternion operator-(IntegerQuaternion a, const IntegerQuaternion& b) { return a -= b; }
  friend IntegerQuaternion operator*(const IntegerQuaternion& a, const IntegerQuaternion& b);
  IntegerQuaternion operator-() const { return {-w, -x, -y, -z}; }
  friend bool operator==(const IntegerQuaternion&, const IntegerQuaternion&) = default;

  /// `w+xi+yj+zk` with all four coefficients, e.g. `1-1i+0j+2k`.
  std::string to_string() const;
};

/// Laurent polynomial in a central variable t with quaternion coefficients.
class QuatLaurent {
 public:
  QuatLaurent() = default;
  QuatLaurent(IntegerQuaternion q) { add_term(0, q); }  // NOLINT: constants convert
  QuatLaurent(int c) : QuatLaurent(IntegerQuaternion(c)) {}  // NOLINT

  static QuatLaurent monomial(const IntegerQuaternion& q, int exp);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, IntegerQuaternion>& terms() const noexcept { return terms_; }
  void add_term(int exp, const IntegerQuaternion& q);

  QuatLaurent& operator+=(const QuatLaurent& o);
  QuatLaurent& operator-=(const QuatLaurent& o);
  friend QuatLaurent operator+(QuatLaurent a, const QuatLaurent& b) { return a += b; }
  friend QuatLaurent operator-(QuatLaurent a, const QuatLaurent& b) { return a -= b; }
  friend QuatLaurent operator*(const QuatLaurent& a, const QuatLaurent& b);
  QuatLaurent operator-() const;
  friend bool operator==(const QuatLaurent&, const QuatLaurent&) = default;

  /// The z and w of q = z + w j, as Gaussian Laurent polynomials in t.
  GaussLaurent complex_part() const;
  GaussLaurent j_part() const;

  std::string to_string() const;

 private:
  std::map<int, IntegerQuaternion> terms_;
};

using QuatMatrix = Matrix<QuatLaurent>;

/// Linear switch of the quaternionic biquandle. At a positive crossing with
/// under-in a and over-in b:
///   under-out = -j t^-1 a + (1+i) b,   over-out = (1+i) a + j t b,
/// so that (a, b) -> (over-out, under-out) is the matrix
/// ((1+i, jt), (-jt^-1, 1+i)). Negative crossings use the inverse matrix.
/// Entry (r, c) of the switch is the left coefficient of input c in output r
/// (0 = under, 1 = over).
std::array<std::array<QuatLaurent, 2>, 2> quaternionic_switch(int sign);

/// Presentation matrix laid out as relation_matrix: two rows per chord,
/// one column per edge, relations out - (coefficients * ins) = 0 with
/// coefficients multiplying generators on the left. Throws EmptyCode.
QuatMatrix quaternionic_relations(const GaussCode& code);

/// Determinant of the complex adjoint, computed fraction-free. Each entry
/// q = z + w j becomes the block ((z, w), (-conj w, conj z)); conjugation acts
/// on coefficients only. The 0 x 0 matrix gives 1.
GaussLaurent study_det(const QuatMatrix& m);

/// gcd of the Study determinants of all (d-1) x (d-1) submatrices, as a
/// primitive integer polynomial in t (s-exponent zero) with zero minimal
/// exponent and positive leading coefficient. Throws InvalidInput when a
/// minor is not an integer polynomial.
LaurentPoly2 codim1_gcd(const QuatMatrix& m);

/// Study determinant of the presentation matrix as an integer polynomial in
/// t, normalized like codim1_gcd but without removing integer content.
LaurentPoly2 study_invariant(const GaussCode& code);

/// Integer polynomial in t from a Gaussian one; throws InvalidInput when an
/// imaginary part is nonzero.
LaurentPoly2 real_polynomial(const GaussLaurent& p);

/// Primitive form with zero minimal exponent and positive leading
/// coefficient; zero stays zero.
LaurentPoly2 normalize_t_polynomial(const LaurentPoly2& p, bool primitive);

}  // namespace vknot
