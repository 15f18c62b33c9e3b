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
#include "pipelat/perm.hpp"

namespace pipelat {

struct Cell {
  int r = 0, c = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Tile : std::uint8_t { Elbow = 0, Cross = 1 };

// Arrival side of a pipe at a cell.
enum class From : std::uint8_t { West, South };

struct PathStep {
  Cell cell;
  From from;
  bool turns;  // W->N or S->E
};

struct ContactArc {
  int from = 0;  // pipe arriving from the west (northwest pipe)
  int to = 0;    // pipe arriving from the south (southeast pipe)
  Cell cell;
  friend auto operator<=>(const ContactArc&, const ContactArc&) = default;
};

// Triangular pipe dream on n pipes: cells (r,c) with r+c <= n hold a tile,
// cells with r+c = n+1 are implicit half elbows. Pipe p enters row p from the west.
class PipeDream {
 public:
  PipeDream() = default;
  // All-elbow filling with the given crosses; omega is the traced exit permutation.
  static PipeDream from_crosses(int n, const std::vector<Cell>& crosses);
  // Claimed exit permutation; validate() compares it with the traced one.
  PipeDream(Permutation omega, const std::vector<Cell>& crosses);

  int n() const { return n_; }
  const Permutation& omega() const { return omega_; }
  const Permutation& traced_omega() const { return traced_; }

  static bool in_shape(int n, Cell x) { return x.r >= 1 && x.c >= 1 && x.r + x.c <= n; }
  Tile tile(Cell x) const { return cross_[index(x)] ? Tile::Cross : Tile::Elbow; }
  bool is_cross(Cell x) const { return cross_[index(x)] != 0; }
  std::vector<Cell> crosses() const;  // sorted
  std::vector<Cell> cells() const;    // all interior cells, sorted
  std::size_t cross_count() const;

  // Pipes meeting at an interior cell.
  int west_pipe(Cell x) const { return west_[index(x)]; }
  int south_pipe(Cell x) const { return south_[index(x)]; }
  // Cell where pipes a and b cross, or {0,0}.
  Cell crossing_of(int a, int b) const;

  // Copy with the two cells' tiles exchanged.
  PipeDream with_swapped(Cell a, Cell b) const;

  const std::vector<std::uint8_t>& key() const { return cross_; }
  friend bool operator==(const PipeDream& a, const PipeDream& b) {
    return a.n_ == b.n_ && a.cross_ == b.cross_ && a.omega_ == b.omega_;
  }
  friend auto operator<=>(const PipeDream& a, const PipeDream& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.cross_ <=> b.cross_; c != 0) return c;
    return a.omega_ <=> b.omega_;
  }

 private:
  std::size_t index(Cell x) const {
    if (!in_shape(n_, x)) throw InvalidInput("cell outside the triangular shape");
    return static_cast<std::size_t>((x.r - 1) * n_ + (x.c - 1));
  }
  void trace();

  int n_ = 0;
  Permutation omega_, traced_;
  std::vector<std::uint8_t> cross_;
  std::vector<int> west_, south_;
};

struct PipeDreamHash {
  std::size_t operator()(const PipeDream& p) const;
};

// Paths indexed by pipe label - 1, including anti-diagonal half elbows.
std::vector<std::vector<PathStep>> trace_pipes(const PipeDream& p);

struct Validation {
  bool ok = true;
  std::vector<std::string> diagnostics;
};
Validation validate(const PipeDream& p);

struct ContactGraph {
  int n = 0;
  std::vector<ContactArc> arcs;
};
ContactGraph contact_graph(const PipeDream& p);
bool is_acyclic(const PipeDream& p);
// strictly_below[i][j] iff i precedes j in the transitive closure (1-based, size n+1).
std::vector<std::vector<char>> contact_order(const PipeDream& p);

std::vector<Permutation> linear_extensions(const PipeDream& p, std::size_t cap = default_cap());
bool is_linear_extension(const PipeDream& p, const Permutation& pi);

struct Flip {
  Cell contact;
  Cell crossing;
  bool increasing;
  friend auto operator<=>(const Flip&, const Flip&) = default;
};
std::vector<Flip> flippable_contacts(const PipeDream& p);
PipeDream flip(const PipeDream& p, Cell contact, Cell crossing);

// Build a filling by visiting interior cells in the given order; decide(i, j, cell)
// receives the pipes arriving from the west and from the south and returns true for a cross.
using SweepOrder = std::vector<Cell>;
SweepOrder rows_bottom_up(int n);
SweepOrder columns_left_right(int n);
PipeDream sweep_fill(const Permutation& omega, const SweepOrder& order,
                     const std::function<bool(int, int, Cell)>& decide);

PipeDream greedy(const Permutation& omega);
PipeDream antigreedy(const Permutation& omega);

std::vector<PipeDream> enumerate(const Permutation& omega, bool acyclic_only,
                                 std::size_t cap = default_cap());

struct FlipGraph {
  std::vector<PipeDream> vertices;  // canonical order
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // increasing flips, sorted
  std::size_t index_of(const PipeDream& p) const;
};
FlipGraph increasing_flip_graph(const Permutation& omega, bool acyclic_only,
                                std::size_t cap = default_cap());

// ASCII: rows 1..n-1, row r has n-r characters, '+' cross and '.' elbow.
std::string to_ascii(const PipeDream& p);
PipeDream parse_ascii(std::string_view text);
std::string to_json(const PipeDream& p);
PipeDream parse_json(std::string_view text);

}  // namespace pipelat
