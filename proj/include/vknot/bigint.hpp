#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vknot {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Gaussian integer re + im*i.
struct GaussInt {
  BigInt re = 0;
  BigInt im = 0;

  GaussInt() = default;
  GaussInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT: integers convert
  GaussInt(int r) : re(r) {}                                                // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt conj() const { return {re, -im}; }

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }
  GaussInt operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;

  std::string to_string() const;
};

/// Exact quotient; throws InvalidInput when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);
GaussInt exact_div(const GaussInt& a, const GaussInt& b);

inline bool is_zero(const BigInt& x) { return x == 0; }
inline bool is_zero(const GaussInt& x) { return x.is_zero(); }

}  // namespace vknot
