#include "pipelat/cone.hpp"

#include <algorithm>
#include <optional>

namespace pipelat {

namespace {

using Matrix = std::vector<std::vector<FieldElement>>;

std::size_t dim_of(const std::vector<RootVec>& gens, const RootVec& beta) {
  for (const RootVec& g : gens)
    if (g.size() != beta.size()) throw InvalidInput("vectors of different dimensions");
  return beta.size();
}

bool is_zero(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

// Solve cols * lambda = beta for linearly independent columns; nullopt if
// dependent or inconsistent.
std::optional<std::vector<FieldElement>> solve_independent(const std::vector<const RootVec*>& cols,
                                                           const RootVec& beta) {
  const std::size_t d = beta.size(), k = cols.size();
  Matrix a(d, std::vector<FieldElement>(k + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = (*cols[c])[r];
    a[r][k] = beta[r];
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < d && a[piv][c].is_zero()) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(a[piv], a[row]);
    const FieldElement inv = a[row][c].inverse();
    for (std::size_t cc = c; cc <= k; ++cc) a[row][cc] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const FieldElement f = a[r][c];
      for (std::size_t cc = c; cc <= k; ++cc) a[r][cc] -= f * a[row][cc];
    }
    ++row;
  }
  for (std::size_t r = row; r < d; ++r)
    if (!a[r][k].is_zero()) return std::nullopt;
  std::vector<FieldElement> lambda(k);
  for (std::size_t c = 0; c < k; ++c) lambda[c] = a[c][k];
  return lambda;
}

}  // namespace

bool cone_membership(const std::vector<RootVec>& gens, const RootVec& beta) {
  const std::size_t d = dim_of(gens, beta), k = gens.size();
  if (is_zero(beta)) return true;
  // Tableau rows: constraints with artificial variables k..k+d-1; last column is the rhs.
  const std::size_t cols = k + d;
  Matrix t(d, std::vector<FieldElement>(cols + 1, 0));
  std::vector<std::size_t> basis(d);
  for (std::size_t r = 0; r < d; ++r) {
    const bool flip = beta[r].sign() < 0;
    for (std::size_t c = 0; c < k; ++c) t[r][c] = flip ? -gens[c][r] : gens[c][r];
    t[r][k + r] = 1;
    t[r][cols] = flip ? -beta[r] : beta[r];
    basis[r] = k + r;
  }
  // Minimise the sum of artificials; reduced costs are -(column sums) on originals.
  std::vector<FieldElement> cost(cols + 1, 0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c <= cols; ++c)
      if (c < k || c == cols) cost[c] -= t[r][c];
  while (true) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (cost[c].sign() < 0) {
        enter = c;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = d;
    FieldElement best;
    for (std::size_t r = 0; r < d; ++r) {
      if (t[r][enter].sign() <= 0) continue;
      FieldElement ratio = t[r][cols] / t[r][enter];
      if (leave == d || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == d) break;  // unbounded cannot happen for phase one
    const FieldElement inv = t[leave][enter].inverse();
    for (FieldElement& x : t[leave]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == leave || t[r][enter].is_zero()) continue;
      const FieldElement f = t[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[leave][c];
    }
    if (!cost[enter].is_zero()) {
      const FieldElement f = cost[enter];
      for (std::size_t c = 0; c <= cols; ++c) cost[c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }
  // Optimum of the phase-one objective is -cost[rhs].
  return cost[cols].is_zero();
}

bool cone_membership_subsets(const std::vector<RootVec>& gens, const RootVec& beta) {
  const std::size_t d = dim_of(gens, beta);
  if (is_zero(beta)) return true;
  const std::size_t k = gens.size();
  std::vector<const RootVec*> chosen;
  // Depth-first over index subsets of size <= d.
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (!chosen.empty()) {
      auto lambda = solve_independent(chosen, beta);
      if (lambda && std::all_of(lambda->begin(), lambda->end(),
                                [](const FieldElement& x) { return x.sign() >= 0; }))
        return true;
    }
    if (chosen.size() == d) return false;
    for (std::size_t i = start; i < k; ++i) {
      chosen.push_back(&gens[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

bool positively_parallel(const RootVec& v, const RootVec& beta) {
  std::optional<FieldElement> ratio;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i].is_zero()) {
      if (!v[i].is_zero()) return false;
      continue;
    }
    FieldElement r = v[i] / beta[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio && ratio->sign() > 0;
}

namespace {

std::optional<std::vector<RootVec>> others_if_member(const std::vector<RootVec>& gens, const RootVec& beta) {
  dim_of(gens, beta);
  if (std::find(gens.begin(), gens.end(), beta) == gens.end()) return std::nullopt;
  std::vector<RootVec> others;
  for (const RootVec& g : gens)
    if (!positively_parallel(g, beta)) others.push_back(g);
  return others;
}

}  // namespace

bool is_extreme_ray_simplex(const std::vector<RootVec>& gens, const RootVec& beta) {
  auto others = others_if_member(gens, beta);
  return others && !cone_membership(*others, beta);
}

bool is_extreme_ray_subsets(const std::vector<RootVec>& gens, const RootVec& beta) {
  auto others = others_if_member(gens, beta);
  return others && !cone_membership_subsets(*others, beta);
}

bool is_extreme_ray(const std::vector<RootVec>& gens, const RootVec& beta) {
  return beta.size() <= 4 ? is_extreme_ray_subsets(gens, beta) : is_extreme_ray_simplex(gens, beta);
}

bool is_pointed(const std::vector<RootVec>& gens) {
  for (const RootVec& g : gens) {
    if (is_zero(g)) return false;
    RootVec neg = g;
    for (FieldElement& x : neg) x = -x;
    if (cone_membership(gens, neg)) return false;
  }
  return true;
}

}  // namespace pipelat
