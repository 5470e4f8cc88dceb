#pragma once

#include <array>
#include <map>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "vknot/bigint.hpp"
#include "vknot/error.hpp"

namespace vknot {

/// Laurent polynomial in two commuting variables (s, t) over a coefficient
/// ring C with exact division. Terms are keyed by (s-exponent, t-exponent)
/// in lexicographic order; zero coefficients are never stored.
template <class C>
class BasicLaurent2 {
 public:
  using Exp = std::pair<int, int>;
  using Terms = std::map<Exp, C>;

  BasicLaurent2() = default;
  BasicLaurent2(C c) { add_term({0, 0}, std::move(c)); }  // NOLINT: constants convert
  BasicLaurent2(int c) : BasicLaurent2(C(c)) {}           // NOLINT

  static BasicLaurent2 monomial(C coeff, int s_exp, int t_exp) {
    BasicLaurent2 p;
    p.add_term({s_exp, t_exp}, std::move(coeff));
    return p;
  }
  static BasicLaurent2 s(int e = 1) { return monomial(C(1), e, 0); }
  static BasicLaurent2 t(int e = 1) { return monomial(C(1), 0, e); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  C coeff(int s_exp, int t_exp) const {
    auto it = terms_.find({s_exp, t_exp});
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Lexicographically greatest term.
  const std::pair<const Exp, C>& lead() const {
    if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "zero polynomial has no terms");
    return *terms_.rbegin();
  }
  /// Componentwise minimum and maximum exponents: {min_s, min_t, max_s, max_t}.
  std::array<int, 4> box() const {
    if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "zero polynomial has no terms");
    std::array<int, 4> b{terms_.begin()->first.first, terms_.begin()->first.second,
                         terms_.rbegin()->first.first, terms_.begin()->first.second};
    for (const auto& [e, c] : terms_) {
      b[1] = std::min(b[1], e.second);
      b[3] = std::max(b[3], e.second);
    }
    return b;
  }

  void add_term(Exp e, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  BasicLaurent2& operator+=(const BasicLaurent2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicLaurent2& operator-=(const BasicLaurent2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BasicLaurent2& operator*=(const BasicLaurent2& o) { return *this = *this * o; }
  friend BasicLaurent2 operator+(BasicLaurent2 a, const BasicLaurent2& b) { return a += b; }
  friend BasicLaurent2 operator-(BasicLaurent2 a, const BasicLaurent2& b) { return a -= b; }
  friend BasicLaurent2 operator*(const BasicLaurent2& a, const BasicLaurent2& b) {
    BasicLaurent2 r;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    return r;
  }
  BasicLaurent2 operator-() const {
    BasicLaurent2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend bool operator==(const BasicLaurent2&, const BasicLaurent2&) = default;

  /// Multiplies by c * s^a * t^b.
  BasicLaurent2 shifted(int a, int b, const C& c = C(1)) const {
    BasicLaurent2 r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(Exp{e.first + a, e.second + b}, x * c);
    return r;
  }

  /// Exact quotient a / b. Throws InvalidInput when b does not divide a.
  friend BasicLaurent2 exact_div(BasicLaurent2 a, const BasicLaurent2& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero polynomial");
    BasicLaurent2 q;
    if (a.is_zero()) return q;
    if (b.term_count() == 1) {
      const auto& [be, bc] = b.lead();
      for (const auto& [e, c] : a.terms_) q.terms_.emplace(Exp{e.first - be.first, e.second - be.second}, exact_div(c, bc));
      return q;
    }
    // Every quotient exponent lies in this box when the division is exact.
    const auto ab = a.box(), bb = b.box();
    const int lo_s = ab[0] - bb[0], lo_t = ab[1] - bb[1], hi_s = ab[2] - bb[2], hi_t = ab[3] - bb[3];
    const auto [be, bc] = b.lead();
    while (!a.is_zero()) {
      const auto [ae, ac] = a.lead();
      const int qs = ae.first - be.first, qt = ae.second - be.second;
      if (qs < lo_s || qs > hi_s || qt < lo_t || qt > hi_t)
        throw Error(ErrorCode::InvalidInput, "inexact polynomial division");
      const C qc = exact_div(ac, bc);
      q.terms_.emplace(Exp{qs, qt}, qc);
      a -= b.shifted(qs, qt, qc);
    }
    return q;
  }

  /// Terms as `c*s^a*t^b` in ascending lexicographic order; unit
  /// coefficients, zero exponents and exponents of one are elided.
  std::string to_string(const char* s_var = "s", const char* t_var = "t") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      auto var = [&](const char* v, int k) {
        if (k == 0) return;
        if (!mono.empty()) mono += '*';
        mono += v;
        if (k != 1) mono += "^" + std::to_string(k);
      };
      var(s_var, e.first);
      var(t_var, e.second);
      out += format_term(c, mono, out.empty());
    }
    return out;
  }

 private:
  static bool is_zero_coeff(const C& c) { return vknot::is_zero(c); }

  static std::string format_term(const C& c, const std::string& mono, bool first) {
    if constexpr (std::is_same_v<C, BigInt>) {
      std::string out = c < 0 ? "-" : (first ? "" : "+");
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (mono.empty()) return out + mag.str();
      if (mag != 1) out += mag.str() + "*";
      return out + mono;
    } else {
      std::string out = first ? "" : "+";
      const std::string cs = c.to_string();
      if (mono.empty()) return out + "(" + cs + ")";
      if (c == C(1)) return out + mono;
      return out + "(" + cs + ")*" + mono;
    }
  }

  Terms terms_;
};

using LaurentPoly2 = BasicLaurent2<BigInt>;
/// Gaussian-integer Laurent polynomials; only the t variable is used.
using GaussLaurent = BasicLaurent2<GaussInt>;

/// Canonical unit representative: multiplied by +-s^a t^b so that the
/// minimal s and t exponents are zero and the lexicographically least term
/// is positive. Zero stays zero.
LaurentPoly2 normalize_units(const LaurentPoly2& p);

/// Exact evaluation at rational points.
BigRational evaluate(const LaurentPoly2& p, const BigRational& s, const BigRational& t);

/// Divides out the gcd of the integer coefficients.
LaurentPoly2 primitive_part(const LaurentPoly2& p);

/// Greatest common divisor over Q[s, t] up to units, returned as a
/// primitive integer polynomial in canonical form. gcd(0, 0) = 0.
LaurentPoly2 gcd(const LaurentPoly2& a, const LaurentPoly2& b);

}  // namespace vknot
