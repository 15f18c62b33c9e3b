#include "pipelat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <queue>
#include <set>

namespace pipelat {

namespace {

using Bits = std::vector<std::uint64_t>;

inline void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline bool test_bit(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

std::optional<std::size_t> first_bit(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w)
    if (b[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
  return std::nullopt;
}

std::optional<std::size_t> last_bit(const Bits& b) {
  for (std::size_t w = b.size(); w-- > 0;)
    if (b[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(b[w]));
  return std::nullopt;
}

// Kahn's algorithm, smallest available index first; nullopt on a cycle.
std::optional<std::vector<std::size_t>> topo_sort(std::size_t n,
                                                  const std::vector<std::vector<std::size_t>>& succ) {
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& s : succ)
    for (std::size_t y : s) ++indeg[y];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    order.push_back(x);
    for (std::size_t y : succ[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace

struct FinitePoset::Closure {
  std::once_flag once;
  std::vector<std::size_t> order, pos;
  std::vector<Bits> up, down;  // over topological positions
};

FinitePoset::FinitePoset(std::size_t n, std::vector<Cover> covers)
    : n_(n), covers_(std::move(covers)), up_(n), down_(n), closure_(std::make_shared<Closure>()) {
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
    throw InvalidInput("duplicate cover");
  for (auto [x, y] : covers_) {
    if (x >= n || y >= n || x == y) throw InvalidInput("cover index out of range");
    up_[x].push_back(y);
    down_[y].push_back(x);
  }
  if (!topo_sort(n_, up_)) throw InvalidInput("cover relation has a cycle");
}

const FinitePoset::Closure& FinitePoset::closure() const {
  Closure& c = *closure_;
  std::call_once(c.once, [&] {
    c.order = *topo_sort(n_, up_);
    c.pos.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) c.pos[c.order[i]] = i;
    const std::size_t words = (n_ + 63) / 64;
    c.up.assign(n_, Bits(words, 0));
    c.down.assign(n_, Bits(words, 0));
    for (std::size_t i = n_; i-- > 0;) {
      std::size_t x = c.order[i];
      set_bit(c.up[x], i);
      for (std::size_t y : up_[x])
        for (std::size_t w = 0; w < words; ++w) c.up[x][w] |= c.up[y][w];
    }
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t x = c.order[i];
      set_bit(c.down[x], i);
      for (std::size_t y : down_[x])
        for (std::size_t w = 0; w < words; ++w) c.down[x][w] |= c.down[y][w];
    }
  });
  return c;
}

bool FinitePoset::leq(std::size_t x, std::size_t y) const {
  const Closure& c = closure();
  return test_bit(c.up[x], c.pos[y]);
}

const std::vector<std::size_t>& FinitePoset::topological_order() const { return closure().order; }

std::optional<std::size_t> FinitePoset::bottom() const {
  std::optional<std::size_t> b;
  for (std::size_t x = 0; x < n_; ++x)
    if (down_[x].empty()) {
      if (b) return std::nullopt;
      b = x;
    }
  return b;
}

std::optional<std::size_t> FinitePoset::top() const {
  std::optional<std::size_t> t;
  for (std::size_t x = 0; x < n_; ++x)
    if (up_[x].empty()) {
      if (t) return std::nullopt;
      t = x;
    }
  return t;
}

FinitePoset FinitePoset::from_relation(std::size_t n, const std::vector<Cover>& arcs) {
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [x, y] : arcs) {
    if (x >= n || y >= n) throw InvalidInput("arc index out of range");
    if (x != y) succ[x].push_back(y);
  }
  auto order = topo_sort(n, succ);
  if (!order) throw InvalidInput("relation has a cycle");
  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> strict(n, Bits(words, 0));
  for (std::size_t i = n; i-- > 0;) {
    std::size_t x = (*order)[i];
    for (std::size_t y : succ[x]) {
      set_bit(strict[x], y);
      for (std::size_t w = 0; w < words; ++w) strict[x][w] |= strict[y][w];
    }
  }
  std::vector<Cover> covers;
  for (std::size_t x = 0; x < n; ++x) {
    Bits implied(words, 0);
    for (std::size_t z = 0; z < n; ++z)
      if (test_bit(strict[x], z))
        for (std::size_t w = 0; w < words; ++w) implied[w] |= strict[z][w];
    for (std::size_t y = 0; y < n; ++y)
      if (test_bit(strict[x], y) && !test_bit(implied, y)) covers.emplace_back(x, y);
  }
  return FinitePoset(n, std::move(covers));
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& subset) const {
  std::vector<Cover> arcs;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = 0; b < subset.size(); ++b)
      if (a != b && leq(subset[a], subset[b])) arcs.emplace_back(a, b);
  return from_relation(subset.size(), arcs);
}

std::optional<std::size_t> FinitePoset::join_of(std::size_t x, std::size_t y) const {
  // The first upper bound in topological order is minimal; it is the join iff it is least.
  const Closure& c = closure();
  Bits ub = c.up[x];
  for (std::size_t w = 0; w < ub.size(); ++w) ub[w] &= c.up[y][w];
  auto first = first_bit(ub);
  if (!first) return std::nullopt;
  std::size_t z = c.order[*first];
  if (!subset_of(ub, c.up[z])) return std::nullopt;
  return z;
}

std::optional<std::size_t> FinitePoset::meet_of(std::size_t x, std::size_t y) const {
  const Closure& c = closure();
  Bits lb = c.down[x];
  for (std::size_t w = 0; w < lb.size(); ++w) lb[w] &= c.down[y][w];
  auto last = last_bit(lb);
  if (!last) return std::nullopt;
  std::size_t z = c.order[*last];
  if (!subset_of(lb, c.down[z])) return std::nullopt;
  return z;
}

LatticeCheck is_lattice(const FinitePoset& p) {
  LatticeCheck out;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      if (!p.join_of(x, y)) return {false, "join", x, y};
      if (!p.meet_of(x, y)) return {false, "meet", x, y};
    }
  return out;
}

std::optional<std::size_t> try_join(const FinitePoset& p, std::size_t x, std::size_t y) {
  return p.join_of(x, y);
}

std::optional<std::size_t> try_meet(const FinitePoset& p, std::size_t x, std::size_t y) {
  return p.meet_of(x, y);
}

std::size_t join(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (auto z = p.join_of(x, y)) return *z;
  throw NotALattice("no join for elements " + std::to_string(x) + ", " + std::to_string(y));
}

std::size_t meet(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (auto z = p.meet_of(x, y)) return *z;
  throw NotALattice("no meet for elements " + std::to_string(x) + ", " + std::to_string(y));
}

namespace {

std::vector<std::size_t> block_index(std::size_t n, const Blocks& blocks) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(n, none);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidInput("empty block");
    for (std::size_t x : blocks[b]) {
      if (x >= n) throw InvalidInput("block element out of range");
      if (block_of[x] != none) throw InvalidInput("blocks are not disjoint");
      block_of[x] = b;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (block_of[x] == none) throw InvalidInput("blocks do not cover the poset");
  return block_of;
}

}  // namespace

CongruenceCheck is_congruence(const FinitePoset& p, const Blocks& blocks) {
  LatticeCheck lat = is_lattice(p);
  if (!lat.ok) throw NotALattice("poset is not a lattice");
  CongruenceCheck out;
  out.partition.blocks = blocks;
  out.partition.block_of = block_index(p.size(), blocks);
  out.partition.down_proj.assign(p.size(), 0);
  out.partition.up_proj.assign(p.size(), 0);
  auto fail = [&](std::string why, std::vector<std::size_t> witness) {
    out.ok = false;
    out.violation = std::move(why);
    out.witness = std::move(witness);
    return out;
  };
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    std::optional<std::size_t> lo, hi;
    for (std::size_t m : blk) {
      if (std::all_of(blk.begin(), blk.end(), [&](std::size_t z) { return p.leq(m, z); })) lo = m;
      if (std::all_of(blk.begin(), blk.end(), [&](std::size_t z) { return p.leq(z, m); })) hi = m;
    }
    if (!lo) return fail("block without minimum", blk);
    if (!hi) return fail("block without maximum", blk);
    for (std::size_t z = 0; z < p.size(); ++z)
      if (out.partition.block_of[z] != b && p.leq(*lo, z) && p.leq(z, *hi))
        return fail("block is not an interval", {*lo, z, *hi});
    for (std::size_t m : blk) {
      out.partition.down_proj[m] = *lo;
      out.partition.up_proj[m] = *hi;
    }
  }
  for (auto [x, y] : p.covers()) {
    if (!p.leq(out.partition.down_proj[x], out.partition.down_proj[y]))
      return fail("down projection not order preserving", {x, y});
    if (!p.leq(out.partition.up_proj[x], out.partition.up_proj[y]))
      return fail("up projection not order preserving", {x, y});
  }
  return out;
}

FinitePoset quotient(const FinitePoset& p, const Blocks& blocks) {
  CongruenceCheck chk = is_congruence(p, blocks);
  if (!chk.ok) throw NotACongruence(chk.violation);
  std::vector<std::size_t> mins(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) mins[b] = chk.partition.down_proj[blocks[b].front()];
  std::vector<Cover> arcs;
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (a != b && p.leq(mins[a], mins[b])) arcs.emplace_back(a, b);
  return FinitePoset::from_relation(blocks.size(), arcs);
}

OrderPredicates order_predicates(const FinitePoset& p, const std::vector<std::size_t>& subset) {
  std::vector<char> in(p.size(), 0);
  for (std::size_t x : subset) {
    if (x >= p.size()) throw InvalidInput("subset element out of range");
    in[x] = 1;
  }
  OrderPredicates out;
  out.is_lower_set = std::all_of(subset.begin(), subset.end(), [&](std::size_t x) {
    const auto& lc = p.lower_covers(x);
    return std::all_of(lc.begin(), lc.end(), [&](std::size_t y) { return in[y] != 0; });
  });
  out.is_order_convex = true;
  for (std::size_t z = 0; z < p.size() && out.is_order_convex; ++z) {
    if (in[z]) continue;
    bool above = false, below = false;
    for (std::size_t x : subset) {
      above = above || p.leq(x, z);
      below = below || p.leq(z, x);
    }
    if (above && below) out.is_order_convex = false;
  }
  if (!subset.empty() && out.is_order_convex) {
    std::optional<std::size_t> lo, hi;
    for (std::size_t m : subset) {
      if (std::all_of(subset.begin(), subset.end(), [&](std::size_t z) { return p.leq(m, z); })) lo = m;
      if (std::all_of(subset.begin(), subset.end(), [&](std::size_t z) { return p.leq(z, m); })) hi = m;
    }
    out.is_interval = lo.has_value() && hi.has_value();
  }
  return out;
}

std::vector<std::size_t> ranks(const FinitePoset& p) {
  std::vector<std::size_t> r(p.size(), 0);
  for (std::size_t x : p.topological_order())
    for (std::size_t y : p.lower_covers(x)) r[x] = std::max(r[x], r[y] + 1);
  return r;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

void write_dot(std::ostream& os, const FinitePoset& p,
               const std::function<std::string(std::size_t)>& label, const std::string& name) {
  const auto r = ranks(p);
  std::size_t max_rank = 0;
  for (std::size_t v : r) max_rank = std::max(max_rank, v);
  os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < p.size(); ++x)
    os << "  n" << x << " [label=\"" << dot_escape(label(x)) << "\"];\n";
  for (std::size_t k = 0; k <= max_rank && p.size() > 0; ++k) {
    os << "  { rank=same;";
    for (std::size_t x = 0; x < p.size(); ++x)
      if (r[x] == k) os << " n" << x << ";";
    os << " }\n";
  }
  for (auto [x, y] : p.covers()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
}

}  // namespace pipelat
