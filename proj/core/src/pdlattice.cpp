#include "pipelat/pdlattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pipelat {

namespace {

void require_below(const Permutation& pi, const Permutation& omega) {
  if (pi.size() != omega.size()) throw InvalidInput("permutation size mismatch");
  if (!weak_leq(pi, omega))
    throw PreconditionViolated(to_string(pi) + " is not below " + to_string(omega) + " in weak order");
}

// Occupancy of a partially filled shape during insertion.
struct Grid {
  enum class State { Empty, Horizontal, Vertical, Cross, Elbow };
  struct Slot {
    State state = State::Empty;
    int nw = 0, se = 0;  // pipes on the W->N and S->E arcs of an elbow
  };

  explicit Grid(int n) : n(n), slots(static_cast<std::size_t>(n + 1) * (n + 1)) {}
  Slot& at(int r, int c) { return slots[static_cast<std::size_t>(r * (n + 1) + c)]; }
  bool interior(int r, int c) const { return r >= 1 && c >= 1 && r + c <= n; }

  void pass(int r, int c, bool horizontal) {
    if (!interior(r, c)) throw Error("insertion path leaves the shape");
    Slot& s = at(r, c);
    if (s.state == State::Empty) s.state = horizontal ? State::Horizontal : State::Vertical;
    else if (s.state == (horizontal ? State::Vertical : State::Horizontal)) s.state = State::Cross;
    else throw Error("insertion path conflicts with an earlier pipe");
  }

  void turn_north(int r, int c, int pipe) {
    if (r + c == n + 1) return;
    if (!interior(r, c)) throw Error("insertion path leaves the shape");
    Slot& s = at(r, c);
    if (s.state != State::Empty) throw Error("insertion turn on an occupied cell");
    s.state = State::Elbow;
    s.nw = pipe;
  }

  void turn_east(int r, int c, int pipe) {
    Slot& s = at(r, c);
    if (s.state != State::Elbow || s.se != 0) throw Error("insertion corner already used");
    s.se = pipe;
  }

  int n;
  std::vector<Slot> slots;
};

}  // namespace

PipeDream insert(const Permutation& pi, const Permutation& omega) {
  require_below(pi, omega);
  const int n = omega.size();
  Grid g(n);
  for (int t = 1; t <= n; ++t) {
    const int j = pi(t);
    const int col = omega.inv(j);
    std::vector<Cell> corners;
    for (int c = 1; c <= col; ++c)
      for (int r = 1; r <= j; ++r)
        if (g.interior(r, c) && g.at(r, c).state == Grid::State::Elbow && g.at(r, c).se == 0)
          corners.push_back({r, c});
    std::sort(corners.begin(), corners.end(), [](Cell a, Cell b) { return a.c < b.c; });
    for (std::size_t i = 1; i < corners.size(); ++i)
      if (!(corners[i].c > corners[i - 1].c && corners[i].r < corners[i - 1].r))
        throw Error("free corners do not form a staircase");
    if (static_cast<int>(corners.size()) != noninversion_count(omega, j))
      throw Error("staircase length differs from the non-inversion count");
    int row = j, from_col = 1;
    for (std::size_t i = 0; i <= corners.size(); ++i) {
      const int target = i < corners.size() ? corners[i].c : col;
      for (int c = from_col; c < target; ++c) g.pass(row, c, true);
      g.turn_north(row, target, j);
      const int stop = i < corners.size() ? corners[i].r : 0;
      for (int r = row - 1; r > stop; --r) g.pass(r, target, false);
      if (i < corners.size()) {
        g.turn_east(corners[i].r, corners[i].c, j);
        row = corners[i].r;
        from_col = corners[i].c + 1;
      }
    }
  }
  std::vector<Cell> crosses;
  for (int r = 1; r < n; ++r)
    for (int c = 1; r + c <= n; ++c) {
      const Grid::Slot& s = g.at(r, c);
      if (s.state == Grid::State::Cross) crosses.push_back({r, c});
      else if (s.state != Grid::State::Elbow || s.se == 0) throw Error("insertion left a cell unfilled");
    }
  PipeDream p(omega, crosses);
  if (p.traced_omega() != omega) throw Error("insertion produced a wrong exit permutation");
  return p;
}

PipeDream sweep(const Permutation& pi, const Permutation& omega, const SweepOrder& order) {
  require_below(pi, omega);
  return sweep_fill(omega, order, [&](int i, int j, Cell x) {
    return i < j && omega.inv(i) > omega.inv(j) && (pi.inv(i) > pi.inv(j) || x.c == omega.inv(j));
  });
}

PipeDream sweep(const Permutation& pi, const Permutation& omega) {
  return sweep(pi, omega, rows_bottom_up(omega.size()));
}

PipeDreamCongruence congruence_partition(const Permutation& omega, std::size_t cap) {
  PipeDreamCongruence out;
  out.interval = weak_interval(omega, cap);
  out.apd = enumerate(omega, true, cap);
  for (const PipeDream& p : out.apd) {
    std::vector<std::size_t> block;
    for (const Permutation& pi : linear_extensions(p, cap)) block.push_back(out.interval.index_of(pi));
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

namespace {

struct Adjacent {
  int i, j;
  std::vector<int> prefix;
};

Adjacent adjacent_letters(const Permutation& word, int position, const Permutation& omega) {
  if (position < 1 || position >= word.size()) throw InvalidInput("position out of range");
  require_below(word, omega);
  const int a = word(position), b = word(position + 1);
  Adjacent adj{std::min(a, b), std::max(a, b), {}};
  for (int t = 1; t < position; ++t) adj.prefix.push_back(word(t));
  return adj;
}

}  // namespace

bool rewrite_adjacent(const Permutation& word, int position, const Permutation& omega) {
  const Adjacent adj = adjacent_letters(word, position, omega);
  if (!is_inversion(omega, adj.i, adj.j)) return false;
  int bigger = 0, left_of_j = 0;
  for (int k : adj.prefix) {
    if (k > adj.i) ++bigger;
    if (omega.inv(k) < omega.inv(adj.j)) ++left_of_j;
  }
  return bigger >= left_of_j;
}

bool rewrite_adjacent_counts(const Permutation& word, int position, const Permutation& omega) {
  const Adjacent adj = adjacent_letters(word, position, omega);
  if (!is_inversion(omega, adj.i, adj.j)) return false;
  int small_left = 0, big_right = 0;
  for (int k : adj.prefix) {
    if (k < adj.i && omega.inv(k) < omega.inv(adj.j)) ++small_left;
    if (k > adj.i && omega.inv(k) > omega.inv(adj.j)) ++big_right;
  }
  return small_left <= big_right;
}

Blocks rewriting_classes(const WeakInterval& interval) {
  const std::size_t n = interval.elements.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a) {
    const Permutation& pi = interval.elements[a];
    for (int t = 1; t < pi.size(); ++t) {
      if (!rewrite_adjacent(pi, t, interval.omega)) continue;
      std::size_t b = interval.index_of(pi.swap_positions(t));
      parent[find(a)] = find(b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < n; ++a) groups[find(a)].push_back(a);
  Blocks out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Permutation, Permutation> class_extremes(const PipeDream& p) {
  if (!is_acyclic(p)) throw PreconditionViolated("pipe dream is not acyclic");
  const int n = p.n();
  const auto prec = contact_order(p);
  std::vector<int> lo(n, 0), hi(n, 0);
  for (int v = 1; v <= n; ++v) {
    int before_lo = 0, before_hi = 0;
    for (int u = 1; u <= n; ++u) {
      if (u == v) continue;
      // Inversions of the minimum: i<j with j before i in the contact order.
      if (u < v ? !prec[v][u] : prec[u][v]) ++before_lo;
      // Non-inversions of the maximum: i<j with i before j.
      if (u < v ? prec[u][v] : !prec[v][u]) ++before_hi;
    }
    lo[before_lo] = v;
    hi[before_hi] = v;
  }
  return {Permutation(lo), Permutation(hi)};
}

std::pair<Permutation, Permutation> block_extremes(const std::vector<Permutation>& block) {
  if (block.empty()) throw InvalidInput("empty block");
  std::optional<Permutation> lo, hi;
  for (const Permutation& m : block) {
    if (std::all_of(block.begin(), block.end(), [&](const Permutation& z) { return weak_leq(m, z); })) lo = m;
    if (std::all_of(block.begin(), block.end(), [&](const Permutation& z) { return weak_leq(z, m); })) hi = m;
  }
  if (!lo || !hi) throw PreconditionViolated("block has no minimum or maximum");
  const std::set<Permutation> members(block.begin(), block.end());
  for (const Permutation& z : all_permutations(lo->size()))
    if (weak_leq(*lo, z) && weak_leq(z, *hi) && !members.count(z))
      throw PreconditionViolated("block is not an interval");
  return {*lo, *hi};
}

namespace {

// Occurrence of a pattern k_1..k_p - ji (or ij) ending at positions t, t+1.
bool pattern_at(const Permutation& pi, const Permutation& omega, int t) {
  const int i = std::min(pi(t), pi(t + 1)), j = std::max(pi(t), pi(t + 1));
  if (!is_inversion(omega, i, j)) return false;
  int needed = 0;
  for (int k = 1; k <= i; ++k)
    if (omega.inv(k) < omega.inv(j)) ++needed;
  int found = 0;
  for (int s = 1; s < t; ++s) {
    const int k = pi(s);
    if (k > i && omega.inv(k) > omega.inv(j)) ++found;
  }
  return found >= needed;
}

}  // namespace

bool is_class_minimum(const Permutation& pi, const Permutation& omega) {
  require_below(pi, omega);
  for (int t = 1; t < pi.size(); ++t)
    if (pi(t) > pi(t + 1) && pattern_at(pi, omega, t)) return false;
  return true;
}

bool is_class_maximum(const Permutation& pi, const Permutation& omega) {
  require_below(pi, omega);
  for (int t = 1; t < pi.size(); ++t)
    if (pi(t) < pi(t + 1) && pattern_at(pi, omega, t)) return false;
  return true;
}

std::vector<std::pair<int, int>> recoil_graph(const Permutation& omega) {
  std::vector<std::pair<int, int>> edges;
  const int n = omega.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (omega.inv(i) < omega.inv(j)) continue;
      int count = 0;
      for (int k = 1; k < i; ++k)
        if (omega.inv(k) < omega.inv(j)) ++count;
      if (j - i <= count) edges.emplace_back(i, j);
    }
  return edges;
}

Orientation recoils(const Permutation& pi, const Permutation& omega) {
  require_below(pi, omega);
  Orientation o{omega.size(), recoil_graph(omega), {}};
  for (auto [i, j] : o.edges)
    o.directed.push_back(pi.inv(i) < pi.inv(j) ? std::pair{i, j} : std::pair{j, i});
  return o;
}

Orientation canopy(const PipeDream& p) {
  if (!is_acyclic(p)) throw PreconditionViolated("canopy needs an acyclic pipe dream");
  const auto prec = contact_order(p);
  Orientation o{p.n(), recoil_graph(p.omega()), {}};
  for (auto [i, j] : o.edges) {
    if (prec[i][j]) o.directed.emplace_back(i, j);
    else if (prec[j][i]) o.directed.emplace_back(j, i);
    else throw Error("pipes " + std::to_string(i) + " and " + std::to_string(j) + " are incomparable");
  }
  return o;
}

bool is_acyclic_orientation(const Orientation& o) {
  std::vector<std::vector<char>> lt(o.n + 1, std::vector<char>(o.n + 1, 0));
  for (auto [a, b] : o.directed) lt[a][b] = 1;
  for (int k = 1; k <= o.n; ++k)
    for (int i = 1; i <= o.n; ++i)
      if (lt[i][k])
        for (int j = 1; j <= o.n; ++j)
          if (lt[k][j]) lt[i][j] = 1;
  for (int i = 1; i <= o.n; ++i)
    if (lt[i][i]) return false;
  return true;
}

namespace {

std::string perm_list_json(const std::vector<Permutation>& ps) {
  std::vector<std::string> items;
  for (const Permutation& p : ps) items.push_back(json_string(to_string(p)));
  return json_array(items);
}

}  // namespace

Report verify_theorem_A(const Permutation& omega, std::size_t cap) {
  Report rep{"omega", to_string(omega), {}};
  const PipeDreamCongruence cong = congruence_partition(omega, cap);
  const auto& elems = cong.interval.elements;

  Check partition{"partition", true, "null"};
  std::vector<int> owner(elems.size(), -1);
  for (std::size_t b = 0; b < cong.blocks.size() && partition.pass; ++b)
    for (std::size_t x : cong.blocks[b]) {
      if (owner[x] != -1) {
        partition.pass = false;
        partition.witness_json = "{\"reason\":\"overlap\",\"pi\":" + json_string(to_string(elems[x])) +
                                 ",\"pipe_dreams\":[" + to_json(cong.apd[owner[x]]) + "," +
                                 to_json(cong.apd[b]) + "]}";
        break;
      }
      owner[x] = static_cast<int>(b);
    }
  for (std::size_t x = 0; x < elems.size() && partition.pass; ++x) {
    if (owner[x] == -1) {
      partition.pass = false;
      partition.witness_json = "{\"reason\":\"uncovered\",\"pi\":" + json_string(to_string(elems[x])) + "}";
    } else if (insert(elems[x], omega) != cong.apd[owner[x]]) {
      partition.pass = false;
      partition.witness_json = "{\"reason\":\"insertion\",\"pi\":" + json_string(to_string(elems[x])) + "}";
    }
  }
  rep.checks.push_back(partition);
  if (!partition.pass) return rep;

  const FinitePoset poset = cong.interval.poset();
  const CongruenceCheck cc = is_congruence(poset, cong.blocks);
  Check congruence{"congruence", cc.ok, "null"};
  if (!cc.ok) {
    std::vector<Permutation> w;
    for (std::size_t x : cc.witness) w.push_back(elems[x]);
    congruence.witness_json =
        "{\"reason\":" + json_string(cc.violation) + ",\"elements\":" + perm_list_json(w) + "}";
  }
  rep.checks.push_back(congruence);
  if (!cc.ok) return rep;

  const FinitePoset quot = quotient(poset, cong.blocks);
  const FlipGraph fg = increasing_flip_graph(omega, true, cap);
  std::set<Cover> hasse(quot.covers().begin(), quot.covers().end());
  std::set<Cover> flips(fg.arcs.begin(), fg.arcs.end());
  Check hasse_check{"quotient_hasse", hasse == flips, "null"};
  if (!hasse_check.pass) {
    std::vector<Cover> diff;
    std::set_symmetric_difference(hasse.begin(), hasse.end(), flips.begin(), flips.end(),
                                  std::back_inserter(diff));
    const Cover bad = diff.front();
    hasse_check.witness_json = "{\"in_quotient\":" + std::string(hasse.count(bad) ? "true" : "false") +
                               ",\"from\":" + to_json(fg.vertices[bad.first]) +
                               ",\"to\":" + to_json(fg.vertices[bad.second]) + "}";
  }
  rep.checks.push_back(hasse_check);
  return rep;
}

FlipClosureComparison compare_flip_closures(const Permutation& omega, std::size_t cap) {
  const FlipGraph all = increasing_flip_graph(omega, false, cap);
  const FinitePoset full = FinitePoset::from_relation(all.vertices.size(), all.arcs);
  FlipClosureComparison out;
  std::vector<std::size_t> subset;
  for (std::size_t a = 0; a < all.vertices.size(); ++a)
    if (is_acyclic(all.vertices[a])) {
      subset.push_back(a);
      out.apd.push_back(all.vertices[a]);
    }
  out.induced = full.induced(subset);
  const FlipGraph acyc = increasing_flip_graph(omega, true, cap);
  out.closure = FinitePoset::from_relation(acyc.vertices.size(), acyc.arcs);
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = 0; b < subset.size(); ++b)
      if (a != b && out.induced.leq(a, b) && !out.closure.leq(a, b)) out.missing.emplace_back(a, b);
  return out;
}

NuAcyclicity nu_acyclicity_report(const Permutation& omega, std::size_t cap) {
  NuAcyclicity out;
  const auto all = enumerate(zero_prepended(omega), false, cap);
  out.count = all.size();
  for (const PipeDream& p : all)
    if (!is_acyclic(p)) {
      out.all_acyclic = false;
      out.witness = p;
      break;
    }
  return out;
}

bool nu_acyclicity(const Permutation& omega, std::size_t cap) {
  return nu_acyclicity_report(omega, cap).all_acyclic;
}

}  // namespace pipelat
