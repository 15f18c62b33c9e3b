#include "pipelat/pipedream.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pipelat {

namespace {

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

std::vector<std::uint8_t> cross_mask(int n, const std::vector<Cell>& crosses) {
  if (n < 1) throw InvalidInput("pipe dream needs at least one pipe");
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(n) * n, 0);
  for (Cell x : crosses) {
    if (!PipeDream::in_shape(n, x)) throw InvalidInput("cross outside the triangular shape");
    auto& m = mask[static_cast<std::size_t>((x.r - 1) * n + (x.c - 1))];
    if (m) throw InvalidInput("duplicate cross");
    m = 1;
  }
  return mask;
}

}  // namespace

PipeDream PipeDream::from_crosses(int n, const std::vector<Cell>& crosses) {
  PipeDream p;
  p.n_ = n;
  p.cross_ = cross_mask(n, crosses);
  p.trace();
  p.omega_ = p.traced_;
  return p;
}

PipeDream::PipeDream(Permutation omega, const std::vector<Cell>& crosses) {
  n_ = omega.size();
  omega_ = std::move(omega);
  cross_ = cross_mask(n_, crosses);
  trace();
}

void PipeDream::trace() {
  const std::size_t sz = static_cast<std::size_t>(n_) * n_;
  west_.assign(sz, 0);
  south_.assign(sz, 0);
  std::vector<int> exit_pipe(n_, 0);
  for (int p = 1; p <= n_; ++p) {
    Cell x{p, 1};
    From from = From::West;
    for (int steps = 0;; ++steps) {
      if (steps > 2 * n_) throw InvalidInput("malformed pipe dream: pipe does not exit");
      bool north;
      if (x.r + x.c == n_ + 1) {
        if (from != From::West) throw InvalidInput("malformed pipe dream: pipe enters boundary cell from the south");
        north = true;
      } else {
        const std::size_t k = index(x);
        int& slot = from == From::West ? west_[k] : south_[k];
        if (slot != 0) throw InvalidInput("malformed pipe dream: two pipes share an edge");
        slot = p;
        const bool straight = cross_[k] != 0;
        north = (from == From::South) == straight;
      }
      if (north) {
        if (x.r == 1) {
          exit_pipe[x.c - 1] = p;
          break;
        }
        x = {x.r - 1, x.c};
        from = From::South;
      } else {
        x = {x.r, x.c + 1};
        from = From::West;
      }
    }
  }
  traced_ = Permutation(exit_pipe);
}

std::vector<Cell> PipeDream::crosses() const {
  std::vector<Cell> out;
  for (int r = 1; r < n_; ++r)
    for (int c = 1; r + c <= n_; ++c)
      if (is_cross({r, c})) out.push_back({r, c});
  return out;
}

std::vector<Cell> PipeDream::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r < n_; ++r)
    for (int c = 1; r + c <= n_; ++c) out.push_back({r, c});
  return out;
}

std::size_t PipeDream::cross_count() const {
  return static_cast<std::size_t>(std::count(cross_.begin(), cross_.end(), 1));
}

Cell PipeDream::crossing_of(int a, int b) const {
  for (int r = 1; r < n_; ++r)
    for (int c = 1; r + c <= n_; ++c) {
      Cell x{r, c};
      if (!is_cross(x)) continue;
      int w = west_pipe(x), s = south_pipe(x);
      if ((w == a && s == b) || (w == b && s == a)) return x;
    }
  return {0, 0};
}

PipeDream PipeDream::with_swapped(Cell a, Cell b) const {
  PipeDream q = *this;
  std::swap(q.cross_[index(a)], q.cross_[index(b)]);
  q.trace();
  return q;
}

std::size_t PipeDreamHash::operator()(const PipeDream& p) const {
  std::size_t h = static_cast<std::size_t>(p.n()) * 0x9e3779b97f4a7c15ull;
  for (std::uint8_t b : p.key()) h = (h ^ b) * 1099511628211ull;
  return h;
}

std::vector<std::vector<PathStep>> trace_pipes(const PipeDream& p) {
  const int n = p.n();
  std::vector<std::vector<PathStep>> paths(n);
  for (int pipe = 1; pipe <= n; ++pipe) {
    Cell x{pipe, 1};
    From from = From::West;
    while (true) {
      const bool boundary = x.r + x.c == n + 1;
      const bool straight = !boundary && p.is_cross(x);
      const bool north = boundary || ((from == From::South) == straight);
      paths[pipe - 1].push_back({x, from, !straight});
      if (north) {
        if (x.r == 1) break;
        x = {x.r - 1, x.c};
        from = From::South;
      } else {
        x = {x.r, x.c + 1};
        from = From::West;
      }
    }
  }
  return paths;
}

Validation validate(const PipeDream& p) {
  Validation v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.diagnostics.push_back(std::move(msg));
  };
  const Permutation& w = p.omega();
  if (p.traced_omega() != w)
    fail("exit permutation " + to_string(p.traced_omega()) + " differs from " + to_string(w));
  if (p.cross_count() != static_cast<std::size_t>(w.length()))
    fail("cross count " + std::to_string(p.cross_count()) + " differs from length " +
         std::to_string(w.length()));
  std::set<std::pair<int, int>> crossed;
  for (Cell x : p.crosses()) {
    const auto key = ordered(p.west_pipe(x), p.south_pipe(x));
    if (!crossed.insert(key).second)
      fail("pipes " + std::to_string(key.first) + " and " + std::to_string(key.second) +
           " cross twice");
  }
  const auto paths = trace_pipes(p);
  for (int j = 1; j <= p.n(); ++j) {
    int se = 0;
    for (const PathStep& s : paths[j - 1])
      if (s.turns && s.from == From::South) ++se;
    if (se != noninversion_count(w, j))
      fail("pipe " + std::to_string(j) + " has " + std::to_string(se) + " southeast elbows, expected " +
           std::to_string(noninversion_count(w, j)));
  }
  return v;
}

ContactGraph contact_graph(const PipeDream& p) {
  ContactGraph g;
  g.n = p.n();
  for (Cell x : p.cells())
    if (!p.is_cross(x)) g.arcs.push_back({p.west_pipe(x), p.south_pipe(x), x});
  return g;
}

std::vector<std::vector<char>> contact_order(const PipeDream& p) {
  const int n = p.n();
  std::vector<std::vector<char>> lt(n + 1, std::vector<char>(n + 1, 0));
  for (const ContactArc& a : contact_graph(p).arcs) lt[a.from][a.to] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      if (lt[i][k])
        for (int j = 1; j <= n; ++j)
          if (lt[k][j]) lt[i][j] = 1;
  return lt;
}

bool is_acyclic(const PipeDream& p) {
  const auto lt = contact_order(p);
  for (int i = 1; i <= p.n(); ++i)
    if (lt[i][i]) return false;
  return true;
}

std::vector<Permutation> linear_extensions(const PipeDream& p, std::size_t cap) {
  const int n = p.n();
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> succ(n + 1);
  for (const ContactArc& a : contact_graph(p).arcs) {
    succ[a.from].push_back(a.to);
    ++indeg[a.to];
  }
  std::vector<Permutation> out;
  std::vector<int> word;
  std::vector<char> used(n + 1, 0);
  // Choosing the smallest available pipe first yields lexicographic order.
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == n) {
      out.emplace_back(word);
      if (out.size() > cap) throw CapExceeded("linear extensions", cap);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v] || indeg[v] != 0) continue;
      used[v] = 1;
      word.push_back(v);
      for (int y : succ[v]) --indeg[y];
      rec();
      for (int y : succ[v]) ++indeg[y];
      word.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return out;
}

bool is_linear_extension(const PipeDream& p, const Permutation& pi) {
  if (pi.size() != p.n()) throw InvalidInput("permutation size mismatch");
  for (const ContactArc& a : contact_graph(p).arcs)
    if (pi.inv(a.from) > pi.inv(a.to)) return false;
  return true;
}

std::vector<Flip> flippable_contacts(const PipeDream& p) {
  std::map<std::pair<int, int>, Cell> crossing;
  for (Cell x : p.crosses()) crossing[ordered(p.west_pipe(x), p.south_pipe(x))] = x;
  std::vector<Flip> out;
  for (Cell c : p.cells()) {
    if (p.is_cross(c)) continue;
    auto it = crossing.find(ordered(p.west_pipe(c), p.south_pipe(c)));
    if (it == crossing.end()) continue;
    Cell x = it->second;
    const bool sw = c.r >= x.r && c.c <= x.c;
    const bool ne = c.r <= x.r && c.c >= x.c;
    if (!sw && !ne) throw Error("contact and crossing of the same pipes are incomparable");
    out.push_back({c, x, sw});
  }
  return out;
}

PipeDream flip(const PipeDream& p, Cell contact, Cell crossing) {
  for (const Flip& f : flippable_contacts(p))
    if (f.contact == contact && f.crossing == crossing) return p.with_swapped(contact, crossing);
  throw PreconditionViolated("contact/crossing pair is not flippable");
}

SweepOrder rows_bottom_up(int n) {
  SweepOrder order;
  for (int r = n - 1; r >= 1; --r)
    for (int c = 1; r + c <= n; ++c) order.push_back({r, c});
  return order;
}

SweepOrder columns_left_right(int n) {
  SweepOrder order;
  for (int c = 1; c < n; ++c)
    for (int r = n - c; r >= 1; --r) order.push_back({r, c});
  return order;
}

PipeDream sweep_fill(const Permutation& omega, const SweepOrder& order,
                     const std::function<bool(int, int, Cell)>& decide) {
  const int n = omega.size();
  // horiz[r][c]: pipe entering (r,c) from the west; vert[r][c]: pipe entering (r,c) from the south.
  std::vector<std::vector<int>> horiz(n + 2, std::vector<int>(n + 2, 0)), vert = horiz;
  for (int r = 1; r <= n; ++r) horiz[r][1] = r;
  auto settle_boundary = [&](int r, int c) {
    if (r + c == n + 1 && horiz[r][c] != 0) vert[r - 1][c] = horiz[r][c];
  };
  settle_boundary(n, 1);
  std::vector<Cell> crosses;
  std::set<Cell> seen;
  for (Cell x : order) {
    if (!PipeDream::in_shape(n, x) || !seen.insert(x).second)
      throw InvalidInput("sweep order is not a permutation of the interior cells");
    const int i = horiz[x.r][x.c], j = vert[x.r][x.c];
    if (i == 0 || j == 0) throw InvalidInput("sweep order is not northeast compatible");
    const bool cross = decide(i, j, x);
    if (cross) crosses.push_back(x);
    horiz[x.r][x.c + 1] = cross ? i : j;
    vert[x.r - 1][x.c] = cross ? j : i;
    settle_boundary(x.r, x.c + 1);
  }
  if (static_cast<int>(seen.size()) != n * (n - 1) / 2)
    throw InvalidInput("sweep order misses interior cells");
  return PipeDream(omega, crosses);
}

PipeDream greedy(const Permutation& omega) {
  return sweep_fill(omega, rows_bottom_up(omega.size()), [&](int i, int j, Cell x) {
    return i < j && omega.inv(i) > omega.inv(j) && x.c == omega.inv(j);
  });
}

PipeDream antigreedy(const Permutation& omega) {
  return sweep_fill(omega, rows_bottom_up(omega.size()),
                    [&](int i, int j, Cell) { return i < j && omega.inv(i) > omega.inv(j); });
}

std::vector<PipeDream> enumerate(const Permutation& omega, bool acyclic_only, std::size_t cap) {
  std::set<PipeDream> seen{greedy(omega)};
  std::deque<PipeDream> queue{*seen.begin()};
  while (!queue.empty()) {
    PipeDream p = std::move(queue.front());
    queue.pop_front();
    for (const Flip& f : flippable_contacts(p)) {
      PipeDream q = p.with_swapped(f.contact, f.crossing);
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw CapExceeded("pipe dream enumeration", cap);
        queue.push_back(std::move(q));
      }
    }
  }
  std::vector<PipeDream> out;
  for (const PipeDream& p : seen)
    if (!acyclic_only || is_acyclic(p)) out.push_back(p);
  return out;
}

std::size_t FlipGraph::index_of(const PipeDream& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) throw PreconditionViolated("pipe dream not in flip graph");
  return static_cast<std::size_t>(it - vertices.begin());
}

FlipGraph increasing_flip_graph(const Permutation& omega, bool acyclic_only, std::size_t cap) {
  FlipGraph g;
  g.vertices = enumerate(omega, acyclic_only, cap);
  for (std::size_t a = 0; a < g.vertices.size(); ++a)
    for (const Flip& f : flippable_contacts(g.vertices[a])) {
      if (!f.increasing) continue;
      PipeDream q = g.vertices[a].with_swapped(f.contact, f.crossing);
      auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), q);
      if (it != g.vertices.end() && *it == q)
        g.arcs.emplace_back(a, static_cast<std::size_t>(it - g.vertices.begin()));
    }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

std::string to_ascii(const PipeDream& p) {
  std::string s;
  for (int r = 1; r < p.n(); ++r) {
    for (int c = 1; r + c <= p.n(); ++c) s += p.is_cross({r, c}) ? '+' : '.';
    s += '\n';
  }
  return s;
}

PipeDream parse_ascii(std::string_view text) {
  std::vector<std::string> rows;
  std::string cur;
  for (char ch : text) {
    if (ch == '\r') continue;
    if (ch == '\n') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) rows.push_back(cur);
  const int n = static_cast<int>(rows.size()) + 1;
  std::vector<Cell> crosses;
  for (int r = 1; r < n; ++r) {
    const std::string& row = rows[r - 1];
    if (static_cast<int>(row.size()) != n - r)
      throw InvalidInput("ASCII row " + std::to_string(r) + " must have " + std::to_string(n - r) + " characters");
    for (int c = 1; c <= n - r; ++c) {
      char ch = row[c - 1];
      if (ch == '+') crosses.push_back({r, c});
      else if (ch != '.') throw InvalidInput("ASCII pipe dream uses only '+' and '.'");
    }
  }
  return PipeDream::from_crosses(n, crosses);
}

std::string to_json(const PipeDream& p) {
  nlohmann::json j;
  j["n"] = p.n();
  j["omega"] = to_string(p.omega());
  nlohmann::json cross = nlohmann::json::array();
  for (Cell x : p.crosses()) cross.push_back({x.r, x.c});
  j["cross"] = cross;
  return j.dump();
}

PipeDream parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed pipe dream JSON: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    Permutation omega = parse_permutation(j.at("omega").get<std::string>());
    if (omega.size() != n) throw InvalidInput("omega size differs from n");
    std::vector<Cell> crosses;
    for (const auto& x : j.at("cross")) crosses.push_back({x.at(0).get<int>(), x.at(1).get<int>()});
    return PipeDream(std::move(omega), crosses);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed pipe dream JSON: ") + e.what());
  }
}

}  // namespace pipelat
