#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pipelat/errors.hpp"
#include "pipelat/field.hpp"
#include "pipelat/lattice.hpp"
#include "pipelat/perm.hpp"

namespace pipelat {

using RootVec = std::vector<FieldElement>;  // coefficients over the simple roots
using CoxWord = std::vector<int>;           // generator indices 1..rank

struct RootVecHash {
  std::size_t operator()(const RootVec& v) const;
};

CoxWord parse_word(std::string_view text);
std::string to_string(const CoxWord& w);

// Finite Coxeter system with its root system in simple-root coordinates.
// Root ids: 0..N-1 are the positive roots (simple roots first), N+k is -root(k).
class CoxeterSystem {
 public:
  // Tags: A<k>, B<k>, D<k>, H3, I2(m) for m in 3..6; H4, F4, E6-E8 need allow_large.
  static std::shared_ptr<const CoxeterSystem> build(std::string_view tag, bool allow_large = false);

  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  int m(int s, int t) const { return m_[s - 1][t - 1]; }
  // s_s(alpha_t) = alpha_t - cartan(s,t) alpha_s
  const FieldElement& cartan(int s, int t) const { return cartan_[s - 1][t - 1]; }

  int positive_count() const { return static_cast<int>(positive_.size()); }
  int root_count() const { return 2 * positive_count(); }
  const RootVec& root(int id) const { return roots_[id]; }
  int root_id(const RootVec& v) const;  // -1 if v is not a root
  int simple_root_id(int s) const { return s - 1; }
  int negate(int id) const { return id < positive_count() ? id + positive_count() : id - positive_count(); }
  bool is_positive(int id) const { return id < positive_count(); }

  RootVec reflect(int s, const RootVec& v) const;
  std::string root_to_string(int id) const;

 private:
  CoxeterSystem() = default;
  std::string type_;
  int rank_ = 0;
  std::vector<std::vector<int>> m_;
  std::vector<std::vector<FieldElement>> cartan_;
  std::vector<RootVec> positive_, roots_;
  std::unordered_map<RootVec, int, RootVecHash> index_;
};

// Linear action on simple-root coordinates; column t is the image of alpha_t.
class GroupElement {
 public:
  explicit GroupElement(std::shared_ptr<const CoxeterSystem> sys);  // identity
  static GroupElement from_word(std::shared_ptr<const CoxeterSystem> sys, const CoxWord& w);

  const CoxeterSystem& system() const { return *sys_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return sys_; }
  const FieldElement& entry(int row, int col) const { return mat_[static_cast<std::size_t>(col * rank() + row)]; }
  int rank() const { return sys_->rank(); }

  RootVec apply(const RootVec& v) const;
  GroupElement operator*(const GroupElement& o) const;
  GroupElement right_simple(int s) const;
  GroupElement left_simple(int s) const;
  GroupElement inverse() const;
  bool has_right_descent(int s) const;  // w(alpha_s) < 0
  int length() const;
  std::vector<int> inv_set() const;  // sorted positive root ids
  CoxWord reduced_word() const;      // lexicographically smallest

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.sys_ == y.sys_ && x.mat_ == y.mat_;
  }
  std::size_t hash() const;
  const std::vector<FieldElement>& matrix() const { return mat_; }

 private:
  void same_system(const GroupElement& o) const;
  std::shared_ptr<const CoxeterSystem> sys_;
  std::vector<FieldElement> mat_;
};

GroupElement mul(const GroupElement& u, const GroupElement& v);
GroupElement inverse(const GroupElement& w);
int length(const GroupElement& w);
std::vector<int> inv_set(const GroupElement& w);

using ElemId = int;

// Explicit enumeration of W with multiplication and root-action tables.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(std::shared_ptr<const CoxeterSystem> sys, std::size_t cap = default_cap());

  const CoxeterSystem& system() const { return *sys_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return sys_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int rank() const { return sys_->rank(); }
  ElemId identity() const { return 0; }
  ElemId longest() const { return longest_; }

  const GroupElement& element(ElemId w) const { return elements_[w]; }
  ElemId id_of(const GroupElement& g) const;
  ElemId from_word(const CoxWord& w) const;

  ElemId right_mul(ElemId w, int s) const { return right_[w * rank() + s - 1]; }
  ElemId left_mul(int s, ElemId w) const { return left_[w * rank() + s - 1]; }
  ElemId mul(ElemId u, ElemId v) const;
  ElemId inverse(ElemId w) const { return inverse_[w]; }
  int length(ElemId w) const { return length_[w]; }
  // w applied to a root id
  int act(ElemId w, int root) const { return act_[static_cast<std::size_t>(w) * sys_->root_count() + root]; }
  // Bitmask of Inv(w) over positive root ids.
  std::uint64_t inv_mask(ElemId w) const { return inv_[w]; }
  bool in_inversions(ElemId w, int root) const {
    return sys_->is_positive(root) && ((inv_[w] >> root) & 1u);
  }
  bool weak_leq(ElemId u, ElemId v) const { return (inv_[u] & ~inv_[v]) == 0; }
  ElemId reflection(int root) const { return reflection_[root]; }
  CoxWord reduced_word(ElemId w) const;  // lexicographically smallest
  std::string word_string(ElemId w) const;

  // Weak order on all of W; element i of the poset is element id i.
  FinitePoset weak_order() const;
  // Elements of [e, omega] in increasing id order, and the induced poset.
  std::vector<ElemId> interval_below(ElemId omega) const;

  ElemId demazure_product(const CoxWord& q) const;
  bool contains_reduced_word(const CoxWord& q, ElemId x) const;
  bool contains_reduced_word_brute(const CoxWord& q, ElemId x) const;
  bool is_sorting(const CoxWord& q) const { return demazure_product(q) == longest_; }

 private:
  ElemId find(const GroupElement& g) const;  // -1 if absent

  std::shared_ptr<const CoxeterSystem> sys_;
  std::vector<GroupElement> elements_;
  std::unordered_map<std::size_t, std::vector<ElemId>> lookup_;
  std::vector<ElemId> right_, left_, inverse_, reflection_;
  std::vector<int> length_, act_;
  std::vector<std::uint64_t> inv_;
  ElemId longest_ = 0;
};

bool is_alternating(const CoxeterSystem& sys, const CoxWord& q);

// Type A: permutation pi acts by e_i -> e_{pi(i)}, alpha_k = e_k - e_{k+1}.
ElemId element_of_permutation(const CoxeterGroup& g, const Permutation& pi);
Permutation permutation_of(const CoxeterGroup& g, ElemId w);
// Root id of e_i - e_j (i != j) in type A.
int type_a_root(const CoxeterSystem& sys, int i, int j);

}  // namespace pipelat
