#include "vknot/bigint.hpp"

#include "vknot/error.hpp"

namespace vknot {

std::string GaussInt::to_string() const {
  if (im == 0) return re.str();
  std::string out = re == 0 ? "" : re.str();
  if (im > 0 && !out.empty()) out += '+';
  if (im == -1) out += '-';
  else if (im != 1) out += im.str();
  return out + "i";
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw Error(ErrorCode::InvalidInput, "inexact integer division");
  return q;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  const BigInt norm = b.re * b.re + b.im * b.im;
  const GaussInt num = a * b.conj();
  return {exact_div(num.re, norm), exact_div(num.im, norm)};
}

}  // namespace vknot
