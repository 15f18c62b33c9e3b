#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pipelat/errors.hpp"

namespace pipelat {

class FinitePoset;

// A permutation of [n] in one-line notation, values 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation reversing(int n);  // n ... 2 1

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  int inv(int v) const { return pos_[v - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  // (p * q)(i) = p(q(i))
  Permutation operator*(const Permutation& q) const;
  // Swap the values at positions k and k+1.
  Permutation swap_positions(int k) const;

  int length() const;
  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
  std::vector<int> pos_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Accepts "31542", "3,1,5,4,2" and 0-based forms such as "0421356".
Permutation parse_permutation(std::string_view text);
// Digits for n <= 9, comma-separated otherwise. base = 0 prints values shifted down by one.
std::string to_string(const Permutation& p, int base = 1);

// Value pairs (i,j), i<j, with p^{-1}(i) > p^{-1}(j), sorted.
std::vector<std::pair<int, int>> inversion_set(const Permutation& p);
bool is_inversion(const Permutation& p, int i, int j);
bool weak_leq(const Permutation& p, const Permutation& q);
std::vector<Permutation> weak_covers_up(const Permutation& p);
std::vector<Permutation> weak_covers_down(const Permutation& p);

bool is_dominant(const Permutation& omega);
int noninversion_count(const Permutation& omega, int j);

// 0ω relabelled on [n+1]: a new first value 1, every other value shifted up.
Permutation zero_prepended(const Permutation& omega);
// ρ_n on pipes 0..n+1, relabelled 1..n+2.
Permutation rho(int n);

std::vector<Permutation> all_permutations(int n);

// The interval [e, omega] of the weak order, sorted by one-line notation.
struct WeakInterval {
  Permutation omega;
  std::vector<Permutation> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::size_t index_of(const Permutation& p) const;  // throws if absent
  bool contains(const Permutation& p) const;
  FinitePoset poset() const;
};

WeakInterval weak_interval(const Permutation& omega, std::size_t cap = default_cap());

}  // namespace pipelat
