#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "pipelat/cone.hpp"
#include "pipelat/subword.hpp"

using namespace pipelat;

namespace {

using Group = std::shared_ptr<const CoxeterGroup>;
using Arcs = std::set<std::string>;

Group group(const char* tag) { return std::make_shared<const CoxeterGroup>(CoxeterSystem::build(tag)); }

std::string label(const Facet& f) {
  std::string s;
  for (int k : f) s += std::to_string(k);
  return s;
}

Facet facet(const char* digits) {
  Facet f;
  for (const char* c = digits; *c; ++c) f.push_back(*c - '0');
  return f;
}

Arcs arcs(std::initializer_list<const char*> items) { return {items.begin(), items.end()}; }

// Increasing flips between facets accepted by keep.
template <class Keep>
Arcs flip_arcs(const SubwordComplex& sc, Keep keep) {
  Arcs out;
  for (const Facet& f : sc.facets()) {
    if (!keep(f)) continue;
    for (const FacetFlip& fl : sc.flips(f))
      if (fl.increasing && keep(fl.target)) out.insert(label(f) + ">" + label(fl.target));
  }
  return out;
}

Arcs quotient_arcs(const SubwordComplex& sc) {
  const SubwordEquivalence eq = equivalence_partition(sc);
  const FinitePoset q = quotient(eq.interval_poset, eq.blocks);
  Arcs out;
  for (auto [a, b] : q.covers())
    out.insert(label(eq.facets[eq.block_facets[a]]) + ">" + label(eq.facets[eq.block_facets[b]]));
  return out;
}

std::vector<CoxWord> all_words(int rank, int len) {
  std::vector<CoxWord> out{{}}, level{{}};
  for (int l = 1; l <= len; ++l) {
    std::vector<CoxWord> next;
    for (const auto& w : level)
      for (int s = 1; s <= rank; ++s) {
        CoxWord v = w;
        v.push_back(s);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

// Complements of reduced subwords for omega, by brute force over subsets.
std::vector<Facet> brute_facets(const CoxeterGroup& g, const CoxWord& q, ElemId omega) {
  const int m = static_cast<int>(q.size());
  std::vector<Facet> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    CoxWord sub;
    Facet f;
    for (int k = 0; k < m; ++k) {
      if (mask >> k & 1u) f.push_back(k + 1);
      else sub.push_back(q[k]);
    }
    if (static_cast<int>(sub.size()) == g.length(omega) && g.from_word(sub) == omega) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const CoxWord kCambrian{2, 1, 3, 2, 1, 3, 2, 1, 3};
const CoxWord kBad{1, 2, 3, 2, 1, 2, 3, 2, 1};
const CoxWord kMixed{2, 3, 1, 3, 2, 1, 2, 3, 1};

}  // namespace

TEST_CASE("construction and parsing") {
  const auto a2 = group("A2");
  CHECK(parse_facet("1,3,4") == Facet{1, 3, 4});
  CHECK_THROWS_AS(parse_facet("3,3"), InvalidInput);
  CHECK_THROWS_AS(SubwordComplex(a2, {1, 4}, 0), InvalidInput);
  SubwordComplex empty(a2, {1, 1}, a2->from_word({1, 2}));
  CHECK(empty.empty());
  CHECK_THROWS(empty.facets());
}

TEST_CASE("A2 word 121212") {
  const auto a2 = group("A2");
  SubwordComplex sc(a2, {1, 2, 1, 2, 1, 2}, a2->longest());
  const auto fs = sc.facets();
  std::vector<std::string> names, cyclic;
  for (const Facet& f : fs) {
    names.push_back(label(f));
    if (!sc.is_acyclic(f)) cyclic.push_back(label(f));
  }
  CHECK(names == std::vector<std::string>{"123", "126", "134", "145", "156", "236", "346", "456"});
  CHECK(cyclic == std::vector<std::string>{"126", "156"});
  CHECK(sc.greedy_facet() == facet("123"));
  CHECK(sc.antigreedy_facet() == facet("456"));
  CHECK(sc.root_function(facet("123"), 1) == a2->system().simple_root_id(1));

  const FacetFlip fl = sc.flip(facet("134"), 1);
  CHECK(fl.target == facet("346"));
  CHECK(fl.j == 6);
  CHECK(fl.increasing);

  CHECK(flip_arcs(sc, [](const Facet&) { return true; }) ==
        arcs({"123>134", "123>126", "123>236", "134>145", "134>346", "126>156", "126>236", "236>346", "145>456",
              "145>156", "156>456", "346>456"}));
  CHECK(flip_arcs(sc, [&](const Facet& f) { return sc.is_acyclic(f); }) ==
        arcs({"123>134", "123>236", "134>145", "134>346", "236>346", "145>456", "346>456"}));
  const Arcs q = quotient_arcs(sc);
  CHECK(q == arcs({"123>134", "123>236", "134>145", "236>346", "145>456", "346>456"}));
  CHECK(q.count("134>346") == 0);

  const ConjectureResult r = check_conjectures(sc);
  CHECK(r.conj_a);
  CHECK(r.conj_b);
  CHECK(r.facets == 8);
  CHECK(r.acyclic == 6);
}

TEST_CASE("reduced word gives a single empty facet") {
  const auto b3 = group("B3");
  const CoxWord q = b3->reduced_word(b3->longest());
  SubwordComplex sc(b3, q, b3->longest());
  CHECK(sc.facets() == std::vector<Facet>{Facet{}});
  CHECK(sc.flips(Facet{}).empty());
}

TEST_CASE("facets against brute force") {
  for (const char* tag : {"A2", "B2", "I2(5)"}) {
    const auto g = group(tag);
    for (const auto& q : all_words(2, 7))
      for (ElemId w = 0; w < g->size(); ++w) {
        if (!g->contains_reduced_word(q, w)) continue;
        SubwordComplex sc(g, q, w);
        const auto fs = sc.facets();
        REQUIRE(fs == brute_facets(*g, q, w));
        CHECK(sc.greedy_facet() == fs.front());
        CHECK(sc.antigreedy_facet() == fs.back());
        for (const Facet& f : fs) {
          CHECK(sc.is_facet(f));
          for (const FacetFlip& fl : sc.flips(f)) {
            CHECK(sc.is_facet(fl.target));
            const FacetFlip back = sc.flip(fl.target, fl.j);
            CHECK(back.target == f);
            CHECK(back.j == fl.i);
            CHECK(back.increasing != fl.increasing);
          }
        }
      }
  }
}

TEST_CASE("root function update along a flip") {
  const auto b3 = group("B3");
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> letter(1, 3);
  int flips = 0;
  for (int t = 0; t < 60; ++t) {
    CoxWord q(12);
    for (int& s : q) s = letter(rng);
    const ElemId w = b3->demazure_product(q);
    SubwordComplex sc(b3, q, w);
    for (const Facet& f : sc.facets(2000)) {
      const auto before = sc.root_list(f);
      for (const FacetFlip& fl : sc.flips(f)) {
        if (!fl.increasing) continue;
        ++flips;
        const ElemId sb = b3->reflection(before[fl.i - 1]);
        const auto after = sc.root_list(fl.target);
        for (int k = 1; k <= sc.m(); ++k) {
          const int expected = (k > fl.i && k <= fl.j) ? b3->act(sb, before[k - 1]) : before[k - 1];
          CHECK(after[k - 1] == expected);
        }
        CHECK(before[fl.j - 1] == before[fl.i - 1]);
      }
    }
  }
  CHECK(flips > 100);
}

TEST_CASE("triangular word matches pipe dreams") {
  const auto a6 = group("A6");
  CHECK(triangular_word(7) == CoxWord{6, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 6, 5, 4, 3, 6, 5, 4, 6, 5, 6});
  const PipeDream left = PipeDream::from_crosses(7, {{1, 2}, {3, 3}, {2, 3}, {1, 3}, {2, 4}, {1, 4}, {2, 5}, {1, 5}});
  const Permutation pi = parse_permutation("1365724");
  REQUIRE(left.omega() == pi);
  const Facet i1 = facet_of_pipe_dream(left);
  CHECK(i1 == Facet{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 21});
  SubwordComplex sc(a6, triangular_word(7), element_of_permutation(*a6, pi));
  REQUIRE(sc.is_facet(i1));
  CHECK(sc.root_function(i1, 3) == a6->system().simple_root_id(4));
  const FacetFlip fl = sc.flip(i1, 3);
  CHECK(fl.target == Facet{1, 2, 4, 5, 6, 7, 8, 9, 10, 12, 16, 17, 21});
  CHECK(fl.increasing);
  CHECK(sc.root_function(fl.target, 17) == a6->system().negate(a6->system().simple_root_id(4)));
  CHECK(pipe_dream_of_facet(pi, fl.target) == flip(left, {4, 1}, {2, 4}));
}

TEST_CASE("bridge over S4") {
  const auto a3 = group("A3");
  const auto cells = triangular_cells(4);
  for (const auto& om : all_permutations(4)) {
    SubwordComplex sc(a3, triangular_word(4), element_of_permutation(*a3, om));
    const auto pds = enumerate(om, false);
    CHECK(sc.facets().size() == pds.size());
    for (const PipeDream& p : pds) {
      const Facet f = facet_of_pipe_dream(p);
      REQUIRE(sc.is_facet(f));
      CHECK(pipe_dream_of_facet(om, f) == p);
      CHECK(sc.is_acyclic(f) == is_acyclic(p));
      std::set<int> contact_roots;
      for (const ContactArc& a : contact_graph(p).arcs) contact_roots.insert(type_a_root(a3->system(), a.from, a.to));
      const auto conf = sc.root_configuration(f);
      CHECK(std::set<int>(conf.begin(), conf.end()) == contact_roots);
      for (const Flip& x : flippable_contacts(p)) {
        const int k = static_cast<int>(std::find(cells.begin(), cells.end(), x.contact) - cells.begin()) + 1;
        const FacetFlip fl = sc.flip(f, k);
        CHECK(fl.target == facet_of_pipe_dream(flip(p, x.contact, x.crossing)));
        CHECK(fl.increasing == x.increasing);
      }
    }
  }
}

TEST_CASE("acyclicity agrees with pointed root cones") {
  for (const char* tag : {"A3", "B3", "H3"}) {
    const auto g = group(tag);
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> letter(1, 3);
    for (int t = 0; t < 15; ++t) {
      CoxWord q(10);
      for (int& s : q) s = letter(rng);
      SubwordComplex sc(g, q, g->demazure_product(q));
      for (const Facet& f : sc.facets(500)) CHECK(sc.is_acyclic(f) == is_pointed(sc.root_vectors(f)));
    }
  }
}

TEST_CASE("A4 example with an acyclic facet outside the interval") {
  const auto a4 = group("A4");
  const ElemId w = element_of_permutation(*a4, parse_permutation("24153"));
  CHECK(w == a4->from_word({3, 4, 1, 2}));
  SubwordComplex sc(a4, {3, 4, 1, 3, 2, 4, 1, 2}, w);
  int outside = 0;
  for (const Facet& f : sc.facets()) {
    const auto ext = sc.linear_extensions(f);
    const bool meets = std::any_of(ext.begin(), ext.end(), [&](ElemId pi) { return a4->weak_leq(pi, w); });
    CHECK(meets == sc.is_strongly_acyclic(f));
    if (sc.is_acyclic(f) && !meets) ++outside;
  }
  CHECK(outside > 0);
}

TEST_CASE("sweep") {
  const auto a3 = group("A3");
  SubwordComplex sc(a3, kCambrian, a3->longest());
  CHECK(sc.sweep(a3->identity()) == sc.greedy_facet());
  CHECK(sc.sweep(a3->longest()) == sc.antigreedy_facet());
  for (ElemId pi = 0; pi < a3->size(); ++pi) {
    const Facet f = sc.sweep(pi);
    CHECK(sc.is_linear_extension(f, pi));
  }
  for (const char* tag : {"A2", "B2"})
    for (const auto& q : all_words(2, 7)) {
      const auto g = group(tag);
      const ElemId w = g->demazure_product(q);
      SubwordComplex s(g, q, w);
      for (const Facet& f : s.facets())
        for (ElemId pi : s.linear_extensions(f)) REQUIRE(s.sweep(pi) == f);
    }
}

TEST_CASE("equivalence partition properties") {
  for (const char* tag : {"A2", "B2"}) {
    const auto g = group(tag);
    for (const auto& q : all_words(2, 6))
      for (ElemId w = 0; w < g->size(); ++w) {
        if (!g->contains_reduced_word(q, w)) continue;
        SubwordComplex sc(g, q, w);
        CHECK(verify_thm_B(sc).pass());
        if (g->is_sorting(q)) CHECK(verify_thm_C(sc).pass());
      }
  }
  const auto a3 = group("A3");
  for (ElemId w = 0; w < a3->size(); ++w) {
    SubwordComplex sc(a3, kCambrian, w);
    const Report b = verify_thm_B(sc), c = verify_thm_C(sc);
    CHECK(b.pass());
    CHECK(c.pass());
  }
  SubwordComplex not_sorting(a3, {1, 2, 3}, a3->from_word({1, 2}));
  CHECK_THROWS_AS(verify_thm_C(not_sorting), PreconditionViolated);
}

TEST_CASE("blocks need not be intervals") {
  const auto a3 = group("A3");
  const ElemId w = element_of_permutation(*a3, parse_permutation("3421"));
  CHECK(w == a3->from_word({2, 3, 1, 2, 3}));
  SubwordComplex sc(a3, kMixed, w);
  CHECK(verify_thm_B(sc).pass());
  const SubwordEquivalence eq = equivalence_partition(sc);
  bool non_interval = false;
  for (const auto& block : eq.blocks) {
    const OrderPredicates op = order_predicates(eq.interval_poset, block);
    CHECK(op.is_order_convex);
    if (!op.is_interval) non_interval = true;
  }
  CHECK(non_interval);
}

TEST_CASE("A3 flip posets on w0") {
  const auto a3 = group("A3");
  SubwordComplex cam(a3, kCambrian, a3->longest());
  const auto cf = cam.facets();
  CHECK(cf.size() == 14);
  CHECK(is_lattice(increasing_flip_poset(cam, cf)).ok);
  CHECK(flip_arcs(cam, [](const Facet&) { return true; }) ==
        arcs({"123>139", "123>234", "123>128", "139>359", "139>189", "234>345", "234>246", "128>189", "128>268",
              "345>359", "345>456", "246>456", "246>268", "359>579", "189>789", "456>567", "268>678", "567>579",
              "567>678", "579>789", "678>789"}));
  CHECK(is_congruence(equivalence_partition(cam).interval_poset, equivalence_partition(cam).blocks).ok);
  CHECK(check_conjectures(cam).conj_a);

  SubwordComplex bad(a3, kBad, a3->longest());
  const auto bf = bad.facets();
  CHECK(bf.size() == 12);
  const FinitePoset bp = increasing_flip_poset(bad, bf);
  CHECK_FALSE(is_lattice(bp).ok);
  auto at = [&](const char* d) { return static_cast<std::size_t>(std::find(bf.begin(), bf.end(), facet(d)) - bf.begin()); };
  CHECK_FALSE(try_join(bp, at("134"), at("129")).has_value());
  CHECK_FALSE(try_meet(bp, at("189"), at("679")).has_value());
  CHECK(flip_arcs(bad, [](const Facet&) { return true; }) ==
        arcs({"123>236", "123>134", "123>129", "236>346", "134>346", "134>148", "236>269", "129>269", "346>467",
              "148>189", "129>189", "148>478", "467>478", "269>679", "467>679", "189>789", "478>789", "679>789"}));
  CHECK_THROWS_AS(check_conjectures(bad), PreconditionViolated);

  SubwordComplex mixed(a3, kMixed, a3->longest());
  const SubwordEquivalence eq = equivalence_partition(mixed);
  CHECK_FALSE(is_congruence(eq.interval_poset, eq.blocks).ok);
  CHECK(is_lattice(increasing_flip_poset(mixed, mixed.facets())).ok);
}

TEST_CASE("alternating words") {
  const auto b3 = CoxeterSystem::build("B3");
  const auto words = alternating_words(*b3, 9);
  CHECK(words.size() == 132);
  CHECK(words.front().empty());
  for (std::size_t i = 1; i < words.size(); ++i) {
    CHECK(is_alternating(*b3, words[i]));
    CHECK((words[i - 1].size() < words[i].size() || words[i - 1] < words[i]));
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const CoxWord q = random_alternating_word(*b3, t % 10, rng);
    CHECK(static_cast<int>(q.size()) == t % 10);
    CHECK(is_alternating(*b3, q));
  }
}

TEST_CASE("conjecture scans") {
  for (const char* tag : {"A2", "B2", "A3"}) {
    const auto g = group(tag);
    ScanOptions opts;
    const ScanSummary s = scan_conjectures(g, opts, [](const std::string&, const ConjectureResult&) {});
    CHECK(s.conj_a_failures == 0);
    CHECK(s.conj_b_failures == 0);
    CHECK(s.pairs >= s.words);
  }
  const auto b2 = group("B2");
  std::vector<std::string> one, three, resumed;
  ScanOptions opts;
  scan_conjectures(b2, opts, [&](const std::string& l, const ConjectureResult&) { one.push_back(l); });
  opts.jobs = 3;
  scan_conjectures(b2, opts, [&](const std::string& l, const ConjectureResult&) { three.push_back(l); });
  CHECK(one == three);
  CHECK(one.front().find("\"type\":\"B2\"") != std::string::npos);
  opts.resume_from = CoxWord{2, 1};
  scan_conjectures(b2, opts, [&](const std::string& l, const ConjectureResult&) { resumed.push_back(l); });
  REQUIRE_FALSE(resumed.empty());
  CHECK(resumed.front().find("\"Q\":\"2,1\"") != std::string::npos);
  CHECK(std::equal(resumed.rbegin(), resumed.rend(), one.rbegin()));

  ScanOptions sample;
  sample.sample = 40;
  sample.seed = 9;
  std::vector<std::string> x, y;
  scan_conjectures(b2, sample, [&](const std::string& l, const ConjectureResult&) { x.push_back(l); });
  sample.jobs = 2;
  scan_conjectures(b2, sample, [&](const std::string& l, const ConjectureResult&) { y.push_back(l); });
  CHECK(x == y);
}
