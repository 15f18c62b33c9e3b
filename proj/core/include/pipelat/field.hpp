#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace pipelat {

__extension__ using wide_int = __int128;

// Exact element (a + b*sqrt5) / d of Q(sqrt5), with d > 0 and gcd(a, b, d) = 1.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::int64_t v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(std::int64_t a, std::int64_t b, std::int64_t d);

  static FieldElement sqrt5() { return {0, 1, 1}; }
  static FieldElement golden() { return {1, 1, 2}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  FieldElement operator-() const { return {-a_, -b_, d_}; }
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator<(const FieldElement& x, const FieldElement& y) { return (x - y).sign() < 0; }
  friend bool operator>(const FieldElement& x, const FieldElement& y) { return y < x; }
  friend bool operator<=(const FieldElement& x, const FieldElement& y) { return !(y < x); }
  friend bool operator>=(const FieldElement& x, const FieldElement& y) { return !(x < y); }

  std::size_t hash() const;

 private:
  static FieldElement normalized(wide_int a, wide_int b, wide_int d);
  std::int64_t a_ = 0, b_ = 0, d_ = 1;
};

struct FieldElementHash {
  std::size_t operator()(const FieldElement& x) const { return x.hash(); }
};

}  // namespace pipelat
