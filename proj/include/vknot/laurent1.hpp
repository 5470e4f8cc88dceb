#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

/// Laurent polynomial in one variable with integer coefficients. Zero
/// coefficients are never stored.
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;
  LaurentPoly1(std::int64_t c) { add_term(0, c); }  // NOLINT: constants convert

  static LaurentPoly1 monomial(std::int64_t coeff, int exp);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coeff(int exp) const;
  int min_exp() const;
  int max_exp() const;
  int span() const { return max_exp() - min_exp(); }

  void add_term(int exp, std::int64_t coeff);

  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator-=(const LaurentPoly1& o);
  LaurentPoly1& operator*=(const LaurentPoly1& o);
  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
    LaurentPoly1 r = a;
    return r *= b;
  }
  LaurentPoly1 operator-() const;
  LaurentPoly1 pow(int k) const;

  /// Ascending exponents, e.g. `A^-4+A^-12` prints as `A^-12+A^-4`.
  std::string to_string(const char* var = "A") const;
  /// [[exp, coeff], ...] ascending.
  std::vector<std::pair<int, std::int64_t>> pairs() const;

  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace vknot
