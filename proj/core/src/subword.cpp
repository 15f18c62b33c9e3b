#include "pipelat/subword.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <set>
#include <thread>

#include "pipelat/cone.hpp"

namespace pipelat {

Facet parse_facet(std::string_view text) {
  Facet f = parse_word(text);
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidInput("repeated facet position");
  return f;
}

SubwordComplex::SubwordComplex(std::shared_ptr<const CoxeterGroup> group, CoxWord q, ElemId omega)
    : group_(std::move(group)), q_(std::move(q)), omega_(omega) {
  for (int s : q_)
    if (s < 1 || s > group_->rank()) throw InvalidInput("word letter out of range");
  if (omega_ < 0 || omega_ >= group_->size()) throw InvalidInput("element out of range");
}

void SubwordComplex::require_nonempty() const {
  if (empty()) throw PreconditionViolated("the subword complex is empty");
}

namespace {

bool contains(const Facet& f, int k) { return std::binary_search(f.begin(), f.end(), k); }

CoxWord suffix(const CoxWord& q, int after) { return CoxWord(q.begin() + after, q.end()); }

}  // namespace

bool SubwordComplex::is_facet(const Facet& f) const {
  if (static_cast<int>(f.size()) != facet_size()) return false;
  if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end()) return false;
  if (!f.empty() && (f.front() < 1 || f.back() > m())) return false;
  ElemId u = group_->identity();
  for (int k = 1; k <= m(); ++k) {
    if (contains(f, k)) continue;
    ElemId v = group_->right_mul(u, q_[k - 1]);
    if (group_->length(v) != group_->length(u) + 1) return false;
    u = v;
  }
  return u == omega_;
}

std::vector<int> SubwordComplex::root_list(const Facet& f) const {
  std::vector<int> out(m());
  ElemId u = group_->identity();
  for (int k = 1; k <= m(); ++k) {
    const int s = q_[k - 1];
    out[k - 1] = group_->act(u, group_->system().simple_root_id(s));
    if (!contains(f, k)) u = group_->right_mul(u, s);
  }
  return out;
}

int SubwordComplex::root_function(const Facet& f, int k) const {
  if (k < 1 || k > m()) throw InvalidInput("position out of range");
  return root_list(f)[k - 1];
}

std::vector<int> SubwordComplex::root_configuration(const Facet& f) const {
  const auto roots = root_list(f);
  std::vector<int> out;
  for (int k : f) out.push_back(roots[k - 1]);
  return out;
}

std::vector<RootVec> SubwordComplex::root_vectors(const Facet& f) const {
  std::vector<RootVec> out;
  for (int r : root_configuration(f)) out.push_back(group_->system().root(r));
  return out;
}

Facet SubwordComplex::greedy_facet() const {
  require_nonempty();
  Facet f;
  ElemId rest = omega_;
  for (int j = 1; j <= m(); ++j) {
    if (group_->contains_reduced_word(suffix(q_, j), rest)) {
      f.push_back(j);
      continue;
    }
    const ElemId next = group_->left_mul(q_[j - 1], rest);
    if (group_->length(next) >= group_->length(rest)) throw Error("greedy facet construction failed");
    rest = next;
  }
  if (rest != group_->identity()) throw Error("greedy facet construction failed");
  return f;
}

Facet SubwordComplex::antigreedy_facet() const {
  require_nonempty();
  Facet f;
  ElemId rest = omega_;
  for (int j = 1; j <= m(); ++j) {
    const ElemId next = group_->left_mul(q_[j - 1], rest);
    if (group_->length(next) < group_->length(rest) && group_->contains_reduced_word(suffix(q_, j), next)) {
      rest = next;
      continue;
    }
    f.push_back(j);
  }
  if (rest != group_->identity()) throw Error("antigreedy facet construction failed");
  return f;
}

bool SubwordComplex::is_flippable(const Facet& f, int i) const {
  if (!contains(f, i)) return false;
  const int beta = root_function(f, i);
  const auto& sys = group_->system();
  return group_->in_inversions(omega_, sys.is_positive(beta) ? beta : sys.negate(beta));
}

FacetFlip SubwordComplex::flip(const Facet& f, int i) const {
  if (!contains(f, i)) throw InvalidInput("position " + std::to_string(i) + " is not in the facet");
  if (!is_flippable(f, i)) throw PreconditionViolated("position " + std::to_string(i) + " is not flippable");
  const auto roots = root_list(f);
  const int beta = roots[i - 1];
  const int neg = group_->system().negate(beta);
  int j = 0;
  for (int k = 1; k <= m(); ++k) {
    if (contains(f, k) || (roots[k - 1] != beta && roots[k - 1] != neg)) continue;
    if (j != 0) throw Error("flip target is not unique");
    j = k;
  }
  if (j == 0) throw Error("flip target not found");
  FacetFlip out;
  out.i = i;
  out.j = j;
  out.increasing = group_->system().is_positive(beta);
  for (int k : f)
    if (k != i) out.target.push_back(k);
  out.target.insert(std::lower_bound(out.target.begin(), out.target.end(), j), j);
  return out;
}

std::vector<FacetFlip> SubwordComplex::flips(const Facet& f) const {
  std::vector<FacetFlip> out;
  for (int i : f)
    if (is_flippable(f, i)) out.push_back(flip(f, i));
  return out;
}

std::vector<Facet> SubwordComplex::facets(std::size_t cap) const {
  std::set<Facet> seen{greedy_facet()};
  std::deque<Facet> queue{*seen.begin()};
  while (!queue.empty()) {
    Facet f = std::move(queue.front());
    queue.pop_front();
    for (const FacetFlip& fl : flips(f))
      if (seen.insert(fl.target).second) {
        if (seen.size() > cap) throw CapExceeded("facet enumeration", cap);
        queue.push_back(fl.target);
      }
  }
  return {seen.begin(), seen.end()};
}

bool SubwordComplex::is_linear_extension(const Facet& f, ElemId pi) const {
  const ElemId inv = group_->inverse(pi);
  for (int r : root_configuration(f))
    if (!group_->system().is_positive(group_->act(inv, r))) return false;
  return true;
}

std::vector<ElemId> SubwordComplex::linear_extensions(const Facet& f) const {
  const auto config = root_configuration(f);
  std::vector<ElemId> out;
  for (ElemId pi = 0; pi < group_->size(); ++pi) {
    const ElemId inv = group_->inverse(pi);
    if (std::all_of(config.begin(), config.end(),
                    [&](int r) { return group_->system().is_positive(group_->act(inv, r)); }))
      out.push_back(pi);
  }
  return out;
}

bool SubwordComplex::is_strongly_acyclic(const Facet& f) const {
  const auto ext = linear_extensions(f);
  return std::any_of(ext.begin(), ext.end(), [&](ElemId pi) { return group_->weak_leq(pi, omega_); });
}

Facet SubwordComplex::sweep(ElemId pi) const {
  require_nonempty();
  const auto& sys = group_->system();
  Facet f;
  ElemId u = group_->identity();
  for (int j = 1; j <= m(); ++j) {
    const int s = q_[j - 1];
    const int beta = group_->act(u, sys.simple_root_id(s));
    bool skip;
    if (sys.is_positive(beta)) {
      if (!group_->in_inversions(omega_, beta)) {
        skip = true;  // Ninv(omega)
      } else if (group_->in_inversions(pi, beta)) {
        skip = false;
      } else {
        const ElemId rest = group_->mul(group_->inverse(u), omega_);
        skip = group_->contains_reduced_word(suffix(q_, j), rest);
      }
    } else {
      if (!group_->in_inversions(omega_, sys.negate(beta))) throw Error("sweep reached a root in -Ninv(omega)");
      skip = true;
    }
    if (skip) f.push_back(j);
    else u = group_->right_mul(u, s);
  }
  if (!is_facet(f)) throw Error("sweep did not produce a facet");
  return f;
}

SubwordEquivalence equivalence_partition(const SubwordComplex& sc, std::size_t cap) {
  const CoxeterGroup& g = sc.group();
  SubwordEquivalence eq;
  eq.facets = sc.facets(cap);
  eq.interval = g.interval_below(sc.omega());
  std::vector<long> index(g.size(), -1);
  for (std::size_t a = 0; a < eq.interval.size(); ++a) index[eq.interval[a]] = static_cast<long>(a);
  std::vector<Cover> covers;
  for (std::size_t a = 0; a < eq.interval.size(); ++a)
    for (int s = 1; s <= g.rank(); ++s) {
      const ElemId v = g.right_mul(eq.interval[a], s);
      if (g.length(v) == g.length(eq.interval[a]) + 1 && index[v] >= 0)
        covers.emplace_back(a, static_cast<std::size_t>(index[v]));
    }
  eq.interval_poset = FinitePoset(eq.interval.size(), std::move(covers));
  for (std::size_t fi = 0; fi < eq.facets.size(); ++fi) {
    eq.extensions.push_back(sc.linear_extensions(eq.facets[fi]));
    std::vector<std::size_t> block;
    for (ElemId pi : eq.extensions.back())
      if (index[pi] >= 0) block.push_back(static_cast<std::size_t>(index[pi]));
    eq.strongly_acyclic.push_back(!block.empty());
    if (!block.empty()) {
      eq.block_facets.push_back(fi);
      eq.blocks.push_back(std::move(block));
    }
  }
  return eq;
}

FinitePoset increasing_flip_poset(const SubwordComplex& sc, const std::vector<Facet>& facets) {
  std::vector<Cover> arcs;
  for (std::size_t a = 0; a < facets.size(); ++a)
    for (const FacetFlip& fl : sc.flips(facets[a])) {
      if (!fl.increasing) continue;
      auto it = std::lower_bound(facets.begin(), facets.end(), fl.target);
      if (it == facets.end() || *it != fl.target) throw Error("flip leaves the facet list");
      arcs.emplace_back(a, static_cast<std::size_t>(it - facets.begin()));
    }
  return FinitePoset::from_relation(facets.size(), arcs);
}

namespace {

std::string subject_of(const SubwordComplex& sc) {
  return sc.group().system().type() + " Q=" + to_string(sc.word()) + " omega=" + sc.group().word_string(sc.omega());
}

std::string words_json(const CoxeterGroup& g, const std::vector<ElemId>& ids) {
  std::vector<std::string> items;
  for (ElemId w : ids) items.push_back(json_string(g.word_string(w)));
  return json_array(items);
}

std::string facet_witness(const CoxeterGroup& g, const Facet& f, const std::vector<ElemId>& elems) {
  return "{\"facet\":" + json_string(to_string(f)) + ",\"elements\":" + words_json(g, elems) + "}";
}

}  // namespace

Report verify_thm_B(const SubwordComplex& sc) {
  const CoxeterGroup& g = sc.group();
  Report rep{"complex", subject_of(sc), {}};
  const auto facets = sc.facets();
  const FinitePoset weak = g.weak_order();
  std::vector<int> owner(g.size(), -1);
  Check convex{"convex", true, "null"}, lower{"lower_set", true, "null"}, cover{"cover", true, "null"},
      partition{"partition", true, "null"};
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const auto ext = sc.linear_extensions(facets[fi]);
    if (ext.empty()) continue;
    std::vector<std::size_t> subset(ext.begin(), ext.end());
    if (convex.pass && !order_predicates(weak, subset).is_order_convex) {
      convex.pass = false;
      convex.witness_json = facet_witness(g, facets[fi], ext);
    }
    for (ElemId pi : ext) {
      if (owner[pi] >= 0 && partition.pass) {
        partition.pass = false;
        partition.witness_json = "{\"facets\":[" + json_string(to_string(facets[owner[pi]])) + "," +
                                 json_string(to_string(facets[fi])) + "],\"element\":" +
                                 json_string(g.word_string(pi)) + "}";
      }
      owner[pi] = static_cast<int>(fi);
    }
  }
  std::vector<std::size_t> uni;
  for (ElemId w = 0; w < g.size(); ++w)
    if (owner[w] >= 0) uni.push_back(static_cast<std::size_t>(w));
  if (!order_predicates(weak, uni).is_lower_set) {
    lower.pass = false;
    for (std::size_t w : uni)
      for (std::size_t v : weak.lower_covers(w))
        if (owner[v] < 0 && lower.witness_json == "null")
          lower.witness_json = words_json(g, {static_cast<ElemId>(w), static_cast<ElemId>(v)});
  }
  for (ElemId w : g.interval_below(sc.omega()))
    if (owner[w] < 0) {
      cover.pass = false;
      cover.witness_json = json_string(g.word_string(w));
      break;
    }
  rep.checks = {convex, lower, cover, partition};
  return rep;
}

Report verify_thm_C(const SubwordComplex& sc) {
  const CoxeterGroup& g = sc.group();
  if (!g.is_sorting(sc.word())) throw PreconditionViolated("the word is not sorting");
  Report rep{"complex", subject_of(sc), {}};
  const auto facets = sc.facets();
  std::set<ElemId> uni;
  for (const Facet& f : facets)
    for (ElemId pi : sc.linear_extensions(f)) uni.insert(pi);
  const auto interval = g.interval_below(sc.omega());
  Check part{"partition_of_interval", std::set<ElemId>(interval.begin(), interval.end()) == uni, "null"};
  if (!part.pass) part.witness_json = words_json(g, std::vector<ElemId>(uni.begin(), uni.end()));
  rep.checks.push_back(part);

  const auto& sys = g.system();
  std::vector<std::vector<RootVec>> configs;
  for (const Facet& f : facets) configs.push_back(sc.root_vectors(f));
  Check roots{"root_intersection", true, "null"};
  for (int beta = 0; beta < sys.positive_count() && roots.pass; ++beta) {
    const bool in_all = std::all_of(configs.begin(), configs.end(),
                                    [&](const std::vector<RootVec>& c) { return cone_membership(c, sys.root(beta)); });
    const bool ninv = !g.in_inversions(sc.omega(), beta);
    if (in_all != ninv) {
      roots.pass = false;
      roots.witness_json = "{\"root\":" + json_string(sys.root_to_string(beta)) +
                           ",\"in_all_cones\":" + (in_all ? "true" : "false") + "}";
    }
  }
  rep.checks.push_back(roots);
  return rep;
}

ConjectureResult check_conjectures(const SubwordComplex& sc) {
  const CoxeterGroup& g = sc.group();
  if (!is_alternating(g.system(), sc.word())) throw PreconditionViolated("the word is not alternating");
  ConjectureResult res;
  const SubwordEquivalence eq = equivalence_partition(sc);
  res.facets = eq.facets.size();
  for (std::size_t fi = 0; fi < eq.facets.size(); ++fi) {
    if (!eq.extensions[fi].empty()) ++res.acyclic;
    if (eq.strongly_acyclic[fi]) ++res.strongly_acyclic;
  }
  std::vector<int> seen(eq.interval.size(), 0);
  for (const auto& b : eq.blocks)
    for (std::size_t x : b) ++seen[x];
  for (std::size_t x = 0; x < seen.size(); ++x)
    if (seen[x] != 1) {
      res.conj_a = res.conj_b = false;
      res.witness_json = "{\"reason\":\"not a partition\",\"element\":" + json_string(g.word_string(eq.interval[x])) + "}";
      return res;
    }
  const CongruenceCheck cc = is_congruence(eq.interval_poset, eq.blocks);
  if (!cc.ok) {
    std::vector<ElemId> w;
    for (std::size_t x : cc.witness) w.push_back(eq.interval[x]);
    res.conj_a = res.conj_b = false;
    res.witness_json = "{\"reason\":" + json_string(cc.violation) + ",\"elements\":" + words_json(g, w) + "}";
    return res;
  }
  const FinitePoset quot = quotient(eq.interval_poset, eq.blocks);
  std::set<std::pair<std::size_t, std::size_t>> hasse, extremal;
  for (auto [a, b] : quot.covers()) hasse.emplace(eq.block_facets[a], eq.block_facets[b]);
  for (std::size_t fi = 0; fi < eq.facets.size(); ++fi) {
    if (!eq.strongly_acyclic[fi]) continue;
    const Facet& f = eq.facets[fi];
    const auto vecs = sc.root_vectors(f);
    const auto roots = sc.root_list(f);
    for (const FacetFlip& fl : sc.flips(f)) {
      if (!fl.increasing) continue;
      const std::size_t to = static_cast<std::size_t>(
          std::lower_bound(eq.facets.begin(), eq.facets.end(), fl.target) - eq.facets.begin());
      if (!eq.strongly_acyclic[to]) continue;
      if (is_extreme_ray(vecs, g.system().root(roots[fl.i - 1]))) extremal.emplace(fi, to);
    }
  }
  if (hasse != extremal) {
    res.conj_b = false;
    std::vector<std::pair<std::size_t, std::size_t>> diff;
    std::set_symmetric_difference(hasse.begin(), hasse.end(), extremal.begin(), extremal.end(),
                                  std::back_inserter(diff));
    res.witness_json = "{\"reason\":\"quotient covers differ from extremal flips\",\"in_quotient\":" +
                       std::string(hasse.count(diff.front()) ? "true" : "false") + ",\"from\":" +
                       json_string(to_string(eq.facets[diff.front().first])) + ",\"to\":" +
                       json_string(to_string(eq.facets[diff.front().second])) + "}";
  }
  return res;
}

Report check_conjecture_A(const SubwordComplex& sc) {
  const ConjectureResult r = check_conjectures(sc);
  return {"complex", subject_of(sc), {{"conjecture_A", r.conj_a, r.conj_a ? "null" : r.witness_json}}};
}

Report check_conjecture_B(const SubwordComplex& sc) {
  const ConjectureResult r = check_conjectures(sc);
  return {"complex", subject_of(sc), {{"conjecture_B", r.conj_b, r.conj_b ? "null" : r.witness_json}}};
}

std::vector<CoxWord> alternating_words(const CoxeterSystem& sys, int max_len) {
  std::vector<CoxWord> out{{}};
  std::vector<CoxWord> level{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<CoxWord> next;
    for (const CoxWord& w : level)
      for (int s = 1; s <= sys.rank(); ++s) {
        CoxWord v = w;
        v.push_back(s);
        if (is_alternating(sys, v)) next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

CoxWord random_alternating_word(const CoxeterSystem& sys, int length, std::mt19937_64& rng) {
  CoxWord w;
  for (int k = 0; k < length; ++k) {
    std::vector<int> options;
    for (int s = 1; s <= sys.rank(); ++s) {
      CoxWord v = w;
      v.push_back(s);
      if (is_alternating(sys, v)) options.push_back(s);
    }
    if (options.empty()) break;
    w.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
  }
  return w;
}

std::string scan_line(const SubwordComplex& sc, const ConjectureResult& r) {
  std::string s = "{\"type\":" + json_string(sc.group().system().type()) + ",\"Q\":" +
                  json_string(to_string(sc.word())) + ",\"omega\":" +
                  json_string(sc.group().word_string(sc.omega())) + ",\"conjA\":" + (r.conj_a ? "true" : "false") +
                  ",\"conjB\":" + (r.conj_b ? "true" : "false") + ",\"facets\":" + std::to_string(r.facets) +
                  ",\"acyclic\":" + std::to_string(r.acyclic) +
                  ",\"strongly_acyclic\":" + std::to_string(r.strongly_acyclic);
  if (!(r.conj_a && r.conj_b)) s += ",\"witness\":" + r.witness_json;
  return s + "}";
}

ScanSummary scan_conjectures(const std::shared_ptr<const CoxeterGroup>& group, const ScanOptions& opts,
                             const std::function<void(const std::string&, const ConjectureResult&)>& emit) {
  const CoxeterSystem& sys = group->system();
  const int max_len = opts.max_len < 0 ? group->length(group->longest()) : opts.max_len;
  std::vector<CoxWord> words;
  if (opts.sample == 0) {
    words = alternating_words(sys, max_len);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> len(0, max_len);
    for (std::size_t k = 0; k < opts.sample; ++k) words.push_back(random_alternating_word(sys, len(rng), rng));
  }
  if (opts.resume_from) {
    auto it = std::find(words.begin(), words.end(), *opts.resume_from);
    if (it == words.end()) throw InvalidInput("resume word " + to_string(*opts.resume_from) + " is not in the scan");
    words.erase(words.begin(), it);
  }

  using Entry = std::pair<std::string, ConjectureResult>;
  auto run = [&](const CoxWord& q) {
    std::vector<Entry> out;
    for (ElemId w = 0; w < group->size(); ++w) {
      if (!group->contains_reduced_word(q, w)) continue;
      SubwordComplex sc(group, q, w);
      ConjectureResult r = check_conjectures(sc);
      out.emplace_back(scan_line(sc, r), std::move(r));
    }
    return out;
  };

  ScanSummary sum;
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, opts.jobs));
  const std::size_t batch = jobs * 8;
  for (std::size_t start = 0; start < words.size(); start += batch) {
    const std::size_t stop = std::min(words.size(), start + batch);
    std::vector<std::vector<Entry>> results(stop - start);
    if (jobs == 1) {
      for (std::size_t k = start; k < stop; ++k) results[k - start] = run(words[k]);
    } else {
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
          try {
            for (std::size_t k = start + t; k < stop; k += jobs) results[k - start] = run(words[k]);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (auto& lines : results) {
      ++sum.words;
      for (auto& [line, r] : lines) {
        ++sum.pairs;
        sum.conj_a_failures += !r.conj_a;
        sum.conj_b_failures += !r.conj_b;
        emit(line, r);
      }
    }
  }
  return sum;
}

std::vector<Cell> triangular_cells(int n) {
  std::vector<Cell> cells;
  for (int c = 1; c < n; ++c)
    for (int r = n - c; r >= 1; --r) cells.push_back({r, c});
  return cells;
}

CoxWord triangular_word(int n) {
  CoxWord q;
  for (Cell x : triangular_cells(n)) q.push_back(x.r + x.c - 1);
  return q;
}

Facet facet_of_pipe_dream(const PipeDream& p) {
  const auto cells = triangular_cells(p.n());
  Facet f;
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (!p.is_cross(cells[k])) f.push_back(static_cast<int>(k + 1));
  return f;
}

PipeDream pipe_dream_of_facet(const Permutation& omega, const Facet& f) {
  const auto cells = triangular_cells(omega.size());
  std::vector<Cell> crosses;
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (!contains(f, static_cast<int>(k + 1))) crosses.push_back(cells[k]);
  return PipeDream(omega, crosses);
}

}  // namespace pipelat
