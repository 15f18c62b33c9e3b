#include "pipelat/field.hpp"

#include <cmath>
#include <limits>

#include "pipelat/errors.hpp"

namespace pipelat {

namespace {

wide_int gcd128(wide_int x, wide_int y) {
  if (x < 0) x = -x;
  if (y < 0) y = -y;
  while (y != 0) {
    wide_int t = x % y;
    x = y;
    y = t;
  }
  return x;
}

std::int64_t narrow(wide_int v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error("field arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

int sign128(wide_int v) { return (v > 0) - (v < 0); }

}  // namespace

FieldElement::FieldElement(std::int64_t a, std::int64_t b, std::int64_t d) {
  *this = normalized(a, b, d);
}

FieldElement FieldElement::normalized(wide_int a, wide_int b, wide_int d) {
  if (d == 0) throw Error("division by zero in field");
  if (d < 0) {
    a = -a;
    b = -b;
    d = -d;
  }
  wide_int g = gcd128(gcd128(a, b), d);
  if (g > 1) {
    a /= g;
    b /= g;
    d /= g;
  }
  FieldElement x;
  x.a_ = narrow(a);
  x.b_ = narrow(b);
  x.d_ = narrow(d);
  return x;
}

int FieldElement::sign() const {
  const int sa = (a_ > 0) - (a_ < 0), sb = (b_ > 0) - (b_ < 0);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare a^2 with 5 b^2.
  const wide_int a2 = static_cast<wide_int>(a_) * a_;
  const wide_int b2 = static_cast<wide_int>(b_) * b_ * 5;
  return sa * sign128(a2 - b2);
}

double FieldElement::to_double() const {
  return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(5.0)) / static_cast<double>(d_);
}

std::string FieldElement::to_string() const {
  std::string num;
  if (b_ == 0) {
    num = std::to_string(a_);
  } else {
    std::string rad = (b_ == 1 ? "" : b_ == -1 ? "-" : std::to_string(b_)) + "r5";
    if (a_ == 0) num = rad;
    else num = std::to_string(a_) + (b_ > 0 ? "+" : "") + rad;
  }
  if (d_ == 1) return num;
  return (b_ != 0 && a_ != 0 ? "(" + num + ")" : num) + "/" + std::to_string(d_);
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  if (x.d_ == y.d_)
    return FieldElement::normalized(static_cast<wide_int>(x.a_) + y.a_, static_cast<wide_int>(x.b_) + y.b_, x.d_);
  const wide_int a = static_cast<wide_int>(x.a_) * y.d_ + static_cast<wide_int>(y.a_) * x.d_;
  const wide_int b = static_cast<wide_int>(x.b_) * y.d_ + static_cast<wide_int>(y.b_) * x.d_;
  return FieldElement::normalized(a, b, static_cast<wide_int>(x.d_) * y.d_);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  const wide_int a = static_cast<wide_int>(x.a_) * y.a_ + 5 * static_cast<wide_int>(x.b_) * y.b_;
  const wide_int b = static_cast<wide_int>(x.a_) * y.b_ + static_cast<wide_int>(x.b_) * y.a_;
  return FieldElement::normalized(a, b, static_cast<wide_int>(x.d_) * y.d_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("division by zero in field");
  // d / (a + b r5) = d (a - b r5) / (a^2 - 5 b^2)
  const wide_int norm = static_cast<wide_int>(a_) * a_ - 5 * static_cast<wide_int>(b_) * b_;
  return normalized(static_cast<wide_int>(a_) * d_, -static_cast<wide_int>(b_) * d_, norm);
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inverse(); }

std::size_t FieldElement::hash() const {
  std::size_t h = static_cast<std::size_t>(a_) * 0x9e3779b97f4a7c15ull;
  h ^= static_cast<std::size_t>(b_) + 0x7f4a7c159e3779b9ull + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(d_) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace pipelat
