#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pipelat/coxeter.hpp"
#include "pipelat/lattice.hpp"
#include "pipelat/pipedream.hpp"
#include "pipelat/report.hpp"

namespace pipelat {

using Facet = std::vector<int>;  // sorted 1-based positions in Q

Facet parse_facet(std::string_view text);

struct FacetFlip {
  Facet target;
  int i = 0;  // position left
  int j = 0;  // position entered
  bool increasing = false;
};

// The subword complex SC(Q, omega) over an enumerated Coxeter group.
class SubwordComplex {
 public:
  SubwordComplex(std::shared_ptr<const CoxeterGroup> group, CoxWord q, ElemId omega);

  const CoxeterGroup& group() const { return *group_; }
  const CoxWord& word() const { return q_; }
  ElemId omega() const { return omega_; }
  int m() const { return static_cast<int>(q_.size()); }
  int facet_size() const { return m() - group_->length(omega_); }
  bool empty() const { return !group_->contains_reduced_word(q_, omega_); }

  bool is_facet(const Facet& f) const;
  // r(I,k) for k = 1..m as root ids, stored at index k-1.
  std::vector<int> root_list(const Facet& f) const;
  int root_function(const Facet& f, int k) const;
  // Roots at the positions of the facet, in position order.
  std::vector<int> root_configuration(const Facet& f) const;
  std::vector<RootVec> root_vectors(const Facet& f) const;

  Facet greedy_facet() const;
  Facet antigreedy_facet() const;
  // Sorted lexicographically.
  std::vector<Facet> facets(std::size_t cap = default_cap()) const;

  bool is_flippable(const Facet& f, int i) const;
  FacetFlip flip(const Facet& f, int i) const;  // throws unless flippable
  std::vector<FacetFlip> flips(const Facet& f) const;

  // Sorted element ids pi with pi^{-1}(r) positive for every r in R(I).
  std::vector<ElemId> linear_extensions(const Facet& f) const;
  bool is_linear_extension(const Facet& f, ElemId pi) const;
  bool is_acyclic(const Facet& f) const { return !linear_extensions(f).empty(); }
  bool is_strongly_acyclic(const Facet& f) const;

  Facet sweep(ElemId pi) const;

 private:
  void require_nonempty() const;
  std::shared_ptr<const CoxeterGroup> group_;
  CoxWord q_;
  ElemId omega_;
};

// Facets with their acyclicity data and the partition of [e, omega].
struct SubwordEquivalence {
  std::vector<Facet> facets;
  std::vector<std::vector<ElemId>> extensions;  // per facet, over all of W
  std::vector<char> strongly_acyclic;
  std::vector<ElemId> interval;                 // [e, omega], increasing ids
  std::vector<std::size_t> block_facets;        // facet index of each block
  Blocks blocks;                                // indices into interval
  FinitePoset interval_poset;
};
SubwordEquivalence equivalence_partition(const SubwordComplex& sc, std::size_t cap = default_cap());

// Increasing flip poset on all facets (facet order as in facets()).
FinitePoset increasing_flip_poset(const SubwordComplex& sc, const std::vector<Facet>& facets);

Report verify_thm_B(const SubwordComplex& sc);
Report verify_thm_C(const SubwordComplex& sc);

struct ConjectureResult {
  bool conj_a = true;
  bool conj_b = true;
  std::size_t facets = 0, acyclic = 0, strongly_acyclic = 0;
  std::string witness_json = "null";
};
// Throws PreconditionViolated unless the word is alternating.
ConjectureResult check_conjectures(const SubwordComplex& sc);
Report check_conjecture_A(const SubwordComplex& sc);
Report check_conjecture_B(const SubwordComplex& sc);

// Alternating words of length 0..max_len, by length then lexicographically.
std::vector<CoxWord> alternating_words(const CoxeterSystem& sys, int max_len);
CoxWord random_alternating_word(const CoxeterSystem& sys, int length, std::mt19937_64& rng);

// JSON line for one (Q, omega) scan entry.
std::string scan_line(const SubwordComplex& sc, const ConjectureResult& r);

struct ScanOptions {
  int max_len = -1;        // default: length of the longest element
  std::size_t sample = 0;  // 0 scans every alternating word
  std::uint64_t seed = 1;
  std::optional<CoxWord> resume_from;  // skip words before this one
  int jobs = 1;
};
struct ScanSummary {
  std::size_t words = 0, pairs = 0, conj_a_failures = 0, conj_b_failures = 0;
};
// Runs check_conjectures on every (Q, omega) with Q alternating and omega
// contained in Q. Lines reach emit in a fixed order for any jobs value.
ScanSummary scan_conjectures(const std::shared_ptr<const CoxeterGroup>& group, const ScanOptions& opts,
                             const std::function<void(const std::string&, const ConjectureResult&)>& emit);

// Type A bridge: triangular word of S_n and the position <-> cell map
// (columns west to east, each column bottom to top, letter r+c-1 at (r,c)).
CoxWord triangular_word(int n);
std::vector<Cell> triangular_cells(int n);  // cell of position k at index k-1
Facet facet_of_pipe_dream(const PipeDream& p);
PipeDream pipe_dream_of_facet(const Permutation& omega, const Facet& f);

}  // namespace pipelat
