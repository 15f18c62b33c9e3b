#include "pipelat/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "pipelat/lattice.hpp"

namespace pipelat {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)), pos_(img_.size(), 0) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    int v = img_[i];
    if (v < 1 || v > n || pos_[v - 1] != 0)
      throw InvalidInput("not a permutation of [" + std::to_string(n) + "]");
    pos_[v - 1] = i + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversing(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const { return Permutation(pos_); }

Permutation Permutation::operator*(const Permutation& q) const {
  if (q.size() != size()) throw InvalidInput("permutation size mismatch");
  std::vector<int> v(size());
  for (int i = 1; i <= size(); ++i) v[i - 1] = (*this)(q(i));
  return Permutation(std::move(v));
}

Permutation Permutation::swap_positions(int k) const {
  if (k < 1 || k >= size()) throw InvalidInput("position out of range");
  std::vector<int> v = img_;
  std::swap(v[k - 1], v[k]);
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int len = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (img_[a] > img_[b]) ++len;
  return len;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> v;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), is_digit) || tok.size() > 6)
        throw InvalidInput("malformed permutation: " + std::string(text));
      v.push_back(std::stoi(std::string(tok)));
      start = end + 1;
    }
  } else {
    if (text.empty()) throw InvalidInput("empty permutation");
    for (char c : text) {
      if (!is_digit(c)) throw InvalidInput("malformed permutation: " + std::string(text));
      v.push_back(c - '0');
    }
  }
  if (std::find(v.begin(), v.end(), 0) != v.end())
    for (int& x : v) ++x;
  return Permutation(std::move(v));
}

std::string to_string(const Permutation& p, int base) {
  const int shift = base == 0 ? 1 : 0;
  std::string s;
  const bool compact = p.size() <= 9 + shift;
  for (int i = 1; i <= p.size(); ++i) {
    int v = p(i) - shift;
    if (compact) {
      s += static_cast<char>('0' + v);
    } else {
      if (i > 1) s += ',';
      s += std::to_string(v);
    }
  }
  return s;
}

std::vector<std::pair<int, int>> inversion_set(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.inv(i) > p.inv(j)) out.emplace_back(i, j);
  return out;
}

bool is_inversion(const Permutation& p, int i, int j) {
  if (i > j) std::swap(i, j);
  return p.inv(i) > p.inv(j);
}

bool weak_leq(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidInput("permutation size mismatch");
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.inv(i) > p.inv(j) && q.inv(i) < q.inv(j)) return false;
  return true;
}

std::vector<Permutation> weak_covers_up(const Permutation& p) {
  std::vector<Permutation> out;
  for (int k = 1; k < p.size(); ++k)
    if (p(k) < p(k + 1)) out.push_back(p.swap_positions(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> weak_covers_down(const Permutation& p) {
  std::vector<Permutation> out;
  for (int k = 1; k < p.size(); ++k)
    if (p(k) > p(k + 1)) out.push_back(p.swap_positions(k));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_dominant(const Permutation& omega) {
  // 132-avoiding: no b with a smaller value to its left and a value in between to its right.
  const int n = omega.size();
  for (int b = 2; b < n; ++b) {
    int min_left = n + 1;
    for (int a = 1; a < b; ++a) min_left = std::min(min_left, omega(a));
    if (min_left > omega(b)) continue;
    for (int c = b + 1; c <= n; ++c)
      if (omega(c) > min_left && omega(c) < omega(b)) return false;
  }
  return true;
}

int noninversion_count(const Permutation& omega, int j) {
  if (j < 1 || j > omega.size()) throw InvalidInput("value out of range");
  int count = 0;
  for (int i = 1; i < j; ++i)
    if (omega.inv(i) < omega.inv(j)) ++count;
  return count;
}

Permutation zero_prepended(const Permutation& omega) {
  std::vector<int> v{1};
  for (int x : omega.images()) v.push_back(x + 1);
  return Permutation(std::move(v));
}

Permutation rho(int n) {
  std::vector<int> v{1};
  for (int k = n; k >= 1; --k) v.push_back(k + 1);
  v.push_back(n + 2);
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t WeakInterval::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p)
    throw PreconditionViolated(to_string(p) + " is not in [e," + to_string(omega) + "]");
  return static_cast<std::size_t>(it - elements.begin());
}

bool WeakInterval::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

FinitePoset WeakInterval::poset() const { return FinitePoset(elements.size(), covers); }

WeakInterval weak_interval(const Permutation& omega, std::size_t cap) {
  WeakInterval out;
  out.omega = omega;
  std::set<Permutation> seen{Permutation::identity(omega.size())};
  std::deque<Permutation> queue{Permutation::identity(omega.size())};
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& q : weak_covers_up(p)) {
      if (!weak_leq(q, omega) || seen.count(q)) continue;
      seen.insert(q);
      if (seen.size() > cap) throw CapExceeded("weak interval", cap);
      queue.push_back(q);
    }
  }
  out.elements.assign(seen.begin(), seen.end());
  for (std::size_t a = 0; a < out.elements.size(); ++a)
    for (const Permutation& q : weak_covers_up(out.elements[a]))
      if (weak_leq(q, omega)) out.covers.emplace_back(a, out.index_of(q));
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

}  // namespace pipelat
