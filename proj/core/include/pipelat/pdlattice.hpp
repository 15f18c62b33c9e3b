#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pipelat/lattice.hpp"
#include "pipelat/perm.hpp"
#include "pipelat/pipedream.hpp"
#include "pipelat/report.hpp"

namespace pipelat {

// Insert pipes pi(1), pi(2), ... as northwest as possible.
PipeDream insert(const Permutation& pi, const Permutation& omega);
// Sweep the shape in a northeast compatible order (rows bottom-up by default).
PipeDream sweep(const Permutation& pi, const Permutation& omega);
PipeDream sweep(const Permutation& pi, const Permutation& omega, const SweepOrder& order);

// Blocks of [e,omega]: blocks[b] = L(apd[b]) as indices into interval.elements.
struct PipeDreamCongruence {
  WeakInterval interval;
  std::vector<PipeDream> apd;
  Blocks blocks;
};
PipeDreamCongruence congruence_partition(const Permutation& omega, std::size_t cap = default_cap());

// Whether the letters at positions p, p+1 of word may be exchanged (1-based p).
bool rewrite_adjacent(const Permutation& word, int position, const Permutation& omega);
// Same rule in the count form with k<i and k>i on both sides.
bool rewrite_adjacent_counts(const Permutation& word, int position, const Permutation& omega);
// Classes of the transitive closure of the rewriting rule, each sorted, ordered by first element.
Blocks rewriting_classes(const WeakInterval& interval);

// Minimum and maximum of L(P) read off the contact order.
std::pair<Permutation, Permutation> class_extremes(const PipeDream& p);
// Weak-order minimum and maximum of an explicit set; throws unless it is an interval.
std::pair<Permutation, Permutation> block_extremes(const std::vector<Permutation>& block);
// Pattern avoidance characterizations of class minima and maxima.
bool is_class_minimum(const Permutation& pi, const Permutation& omega);
bool is_class_maximum(const Permutation& pi, const Permutation& omega);

struct Orientation {
  int n = 0;
  std::vector<std::pair<int, int>> edges;     // i<j, sorted
  std::vector<std::pair<int, int>> directed;  // same order, (tail, head)
  friend bool operator==(const Orientation&, const Orientation&) = default;
};
std::vector<std::pair<int, int>> recoil_graph(const Permutation& omega);
Orientation recoils(const Permutation& pi, const Permutation& omega);
Orientation canopy(const PipeDream& p);
bool is_acyclic_orientation(const Orientation& o);

Report verify_theorem_A(const Permutation& omega, std::size_t cap = default_cap());

// Relations of the flip poset on PD(omega) restricted to APD(omega) that are
// missing from the transitive closure of the flip graph on APD(omega).
struct FlipClosureComparison {
  std::vector<PipeDream> apd;
  FinitePoset induced;
  FinitePoset closure;
  std::vector<std::pair<std::size_t, std::size_t>> missing;
};
FlipClosureComparison compare_flip_closures(const Permutation& omega, std::size_t cap = default_cap());

struct NuAcyclicity {
  bool all_acyclic = true;
  std::size_t count = 0;
  std::optional<PipeDream> witness;
};
// Acyclicity of every pipe dream of PD(0 omega).
NuAcyclicity nu_acyclicity_report(const Permutation& omega, std::size_t cap = default_cap());
bool nu_acyclicity(const Permutation& omega, std::size_t cap = default_cap());

}  // namespace pipelat
