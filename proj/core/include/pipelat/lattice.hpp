#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pipelat/errors.hpp"

namespace pipelat {

using Cover = std::pair<std::size_t, std::size_t>;

// Finite poset on elements 0..size()-1 given by its cover relations.
// Reachability is computed lazily once and shared between copies.
class FinitePoset {
 public:
  FinitePoset() : FinitePoset(0, {}) {}
  // Covers must be irredundant and acyclic.
  FinitePoset(std::size_t n, std::vector<Cover> covers);

  // Transitive reduction of the reflexive-transitive closure of arbitrary arcs.
  static FinitePoset from_relation(std::size_t n, const std::vector<Cover>& arcs);

  std::size_t size() const { return n_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return up_[x]; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return down_[x]; }

  bool leq(std::size_t x, std::size_t y) const;
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  // Subposet on the given elements (order induced from this poset).
  FinitePoset induced(const std::vector<std::size_t>& subset) const;

  // Elements in a fixed linear extension order.
  const std::vector<std::size_t>& topological_order() const;

  std::optional<std::size_t> join_of(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> meet_of(std::size_t x, std::size_t y) const;

  struct Closure;

 private:
  const Closure& closure() const;

  std::size_t n_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> up_, down_;
  std::shared_ptr<Closure> closure_;
};

struct LatticeCheck {
  bool ok = true;
  std::string failure;  // "join" or "meet"
  std::size_t x = 0, y = 0;
};

LatticeCheck is_lattice(const FinitePoset& p);
std::optional<std::size_t> try_join(const FinitePoset& p, std::size_t x, std::size_t y);
std::optional<std::size_t> try_meet(const FinitePoset& p, std::size_t x, std::size_t y);
std::size_t join(const FinitePoset& p, std::size_t x, std::size_t y);  // throws NotALattice
std::size_t meet(const FinitePoset& p, std::size_t x, std::size_t y);

using Blocks = std::vector<std::vector<std::size_t>>;

struct CongruencePartition {
  Blocks blocks;
  std::vector<std::size_t> block_of;
  std::vector<std::size_t> down_proj, up_proj;
};

struct CongruenceCheck {
  bool ok = true;
  std::string violation;  // empty when ok
  std::vector<std::size_t> witness;
  CongruencePartition partition;
};

// Validates the block structure (disjoint, covering) before testing.
CongruenceCheck is_congruence(const FinitePoset& p, const Blocks& blocks);

// Quotient ordered by block minima; element i of the result is blocks[i].
FinitePoset quotient(const FinitePoset& p, const Blocks& blocks);

struct OrderPredicates {
  bool is_lower_set = false;
  bool is_order_convex = false;
  bool is_interval = false;
};

OrderPredicates order_predicates(const FinitePoset& p, const std::vector<std::size_t>& subset);

// Longest path from a minimal element.
std::vector<std::size_t> ranks(const FinitePoset& p);

void write_dot(std::ostream& os, const FinitePoset& p,
               const std::function<std::string(std::size_t)>& label,
               const std::string& name = "poset");

}  // namespace pipelat
