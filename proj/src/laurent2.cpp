#include "vknot/laurent2.hpp"

#include <algorithm>

#include <boost/integer/common_factor_rt.hpp>

namespace vknot {

LaurentPoly2 normalize_units(const LaurentPoly2& p) {
  if (p.is_zero()) return p;
  const auto b = p.box();
  const bool negate = p.terms().begin()->second < 0;
  return p.shifted(-b[0], -b[1], negate ? BigInt(-1) : BigInt(1));
}

BigRational evaluate(const LaurentPoly2& p, const BigRational& s, const BigRational& t) {
  auto power = [](const BigRational& x, int k) {
    if (k < 0 && x == 0) throw Error(ErrorCode::InvalidInput, "negative power of zero");
    BigRational r = 1;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) r *= x;
    return k < 0 ? BigRational(1) / r : r;
  };
  BigRational sum = 0;
  for (const auto& [e, c] : p.terms()) sum += BigRational(c) * power(s, e.first) * power(t, e.second);
  return sum;
}

namespace {

// Dense univariate polynomials over an integral domain R, used only for the
// recursive primitive remainder sequence: Z[t] and then Z[t][s].
template <class R>
struct Dense;

bool is_zero_r(const BigInt& x) { return x == 0; }
template <class R>
bool is_zero_r(const Dense<R>& x) { return x.c.empty(); }

template <class R>
struct Dense {
  std::vector<R> c;  // c[k] is the coefficient of x^k

  void trim() {
    while (!c.empty() && is_zero_r(c.back())) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const R& lc() const { return c.back(); }
  friend bool operator==(const Dense&, const Dense&) = default;
};

using ZPoly = Dense<BigInt>;
using ZZPoly = Dense<ZPoly>;

template <class R>
Dense<R> operator-(Dense<R> a, const Dense<R>& b) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), R{});
  for (std::size_t k = 0; k < b.c.size(); ++k) a.c[k] = a.c[k] - b.c[k];
  a.trim();
  return a;
}

template <class R>
Dense<R> operator*(const Dense<R>& a, const Dense<R>& b) {
  Dense<R> r;
  if (a.zero() || b.zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, R{});
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  r.trim();
  return r;
}

template <class R>
Dense<R> scale(Dense<R> a, const R& k) {
  for (auto& x : a.c) x = x * k;
  a.trim();
  return a;
}

template <class R>
Dense<R> shift_up(const Dense<R>& a, int k) {
  Dense<R> r;
  if (a.zero()) return r;
  r.c.assign(static_cast<std::size_t>(k), R{});
  r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  return r;
}

BigInt divide_exact(const BigInt& a, const BigInt& b) { return exact_div(a, b); }

ZPoly divide_exact(ZPoly a, const ZPoly& b) {
  ZPoly q;
  if (a.zero()) return q;
  if (a.deg() < b.deg()) throw Error(ErrorCode::InvalidInput, "inexact polynomial division");
  q.c.assign(static_cast<std::size_t>(a.deg() - b.deg() + 1), 0);
  while (!a.zero()) {
    const int k = a.deg() - b.deg();
    if (k < 0) throw Error(ErrorCode::InvalidInput, "inexact polynomial division");
    const BigInt qc = exact_div(a.lc(), b.lc());
    q.c[static_cast<std::size_t>(k)] = qc;
    a = a - shift_up(scale(b, qc), k);
  }
  return q;
}

template <class R>
Dense<R> divide_scalar(Dense<R> a, const R& k) {
  for (auto& x : a.c) x = divide_exact(x, k);
  return a;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
Dense<R> prem(Dense<R> a, const Dense<R>& b) {
  while (!a.zero() && a.deg() >= b.deg()) {
    const int k = a.deg() - b.deg();
    const R la = a.lc();
    a = scale(a, b.lc()) - shift_up(scale(b, la), k);
  }
  return a;
}

int sign_r(const BigInt& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }
int sign_r(const ZPoly& x) { return x.zero() ? 0 : sign_r(x.lc()); }

template <class R>
Dense<R> negate(Dense<R> a) {
  for (auto& x : a.c) x = R{} - x;
  return a;
}

BigInt gcd_r(const BigInt& a, const BigInt& b) { return boost::integer::gcd(a, b); }
ZPoly gcd_r(const ZPoly& a, const ZPoly& b);

template <class R>
R content(const Dense<R>& a) {
  R g{};
  for (const auto& x : a.c) g = gcd_r(g, x);
  return g;
}

template <class R>
Dense<R> gcd_dense(Dense<R> a, Dense<R> b) {
  if (a.zero() && b.zero()) return a;
  if (a.zero()) std::swap(a, b);
  if (b.zero()) {
    const R ca = content(a);
    Dense<R> r = scale(divide_scalar(a, ca), ca);
    return sign_r(r.lc()) < 0 ? negate(r) : r;
  }
  const R ca = content(a), cb = content(b);
  const R g = gcd_r(ca, cb);
  a = divide_scalar(a, ca);
  b = divide_scalar(b, cb);
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.zero()) {
    Dense<R> r = prem(a, b);
    a = std::move(b);
    b = r.zero() ? r : divide_scalar(r, content(r));
  }
  a = scale(a, g);
  return sign_r(a.lc()) < 0 ? negate(a) : a;
}

ZPoly gcd_r(const ZPoly& a, const ZPoly& b) { return gcd_dense(a, b); }

ZZPoly to_dense(const LaurentPoly2& p, int min_s, int min_t) {
  ZZPoly d;
  for (const auto& [e, c] : p.terms()) {
    const auto i = static_cast<std::size_t>(e.first - min_s);
    const auto j = static_cast<std::size_t>(e.second - min_t);
    if (d.c.size() <= i) d.c.resize(i + 1);
    auto& inner = d.c[i].c;
    if (inner.size() <= j) inner.resize(j + 1, 0);
    inner[j] = c;
  }
  return d;
}

LaurentPoly2 from_dense(const ZZPoly& d) {
  LaurentPoly2 p;
  for (std::size_t i = 0; i < d.c.size(); ++i)
    for (std::size_t j = 0; j < d.c[i].c.size(); ++j)
      p.add_term({static_cast<int>(i), static_cast<int>(j)}, d.c[i].c[j]);
  return p;
}

}  // namespace

LaurentPoly2 primitive_part(const LaurentPoly2& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) g = boost::integer::gcd(g, c);
  if (g == 0) return p;
  LaurentPoly2 r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c / g);
  return r;
}

LaurentPoly2 gcd(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (a.is_zero()) return normalize_units(primitive_part(b));
  if (b.is_zero()) return normalize_units(primitive_part(a));
  const auto ba = a.box(), bb = b.box();
  auto g = from_dense(gcd_dense(to_dense(a, ba[0], ba[1]), to_dense(b, bb[0], bb[1])));
  return normalize_units(primitive_part(g));
}

}  // namespace vknot
