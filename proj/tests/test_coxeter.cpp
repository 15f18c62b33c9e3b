#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pipelat/cone.hpp"
#include "pipelat/coxeter.hpp"

using namespace pipelat;

namespace {

std::shared_ptr<const CoxeterGroup> group(const char* tag) {
  return std::make_shared<const CoxeterGroup>(CoxeterSystem::build(tag));
}

RootVec vec(std::initializer_list<long> xs) {
  RootVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Every word of length <= len over {1..rank}.
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

FieldElement random_field(std::mt19937& rng) {
  std::uniform_int_distribution<long> small(-50, 50), den(1, 12);
  return {small(rng), small(rng), den(rng)};
}

}  // namespace

TEST_CASE("field arithmetic") {
  const FieldElement phi = FieldElement::golden();
  CHECK(phi * phi == phi + 1);
  CHECK(FieldElement::sqrt5() * FieldElement::sqrt5() == 5);
  CHECK(FieldElement(2, 4, 6) == FieldElement(1, 2, 3));
  CHECK((phi / phi) == 1);
  CHECK(phi.inverse() == phi - 1);
  CHECK(FieldElement(-8, 4, 1).sign() > 0);
  CHECK(FieldElement(-9, 4, 1).sign() < 0);
  CHECK(FieldElement(8, -4, 1).sign() < 0);
  CHECK(FieldElement(-2, 1, 1).sign() > 0);
  CHECK(FieldElement(0).sign() == 0);
  CHECK(phi.to_string() == "(1+r5)/2");
  CHECK_THROWS(FieldElement(0).inverse());
}

TEST_CASE("field comparisons agree with floating point") {
  std::mt19937 rng(99);
  for (int t = 0; t < 10000; ++t) {
    const FieldElement x = random_field(rng), y = random_field(rng);
    const double dx = x.to_double(), dy = y.to_double();
    CHECK(std::abs((x + y).to_double() - (dx + dy)) < 1e-9);
    CHECK(std::abs((x * y).to_double() - dx * dy) < 1e-7);
    if (std::abs(dx - dy) > 1e-9) CHECK((x < y) == (dx < dy));
    if (!x.is_zero()) CHECK(x * x.inverse() == 1);
  }
}

TEST_CASE("root systems") {
  const auto a2 = CoxeterSystem::build("A2");
  REQUIRE(a2->positive_count() == 3);
  CHECK(a2->root(0) == vec({1, 0}));
  CHECK(a2->root(1) == vec({0, 1}));
  CHECK(a2->root(2) == vec({1, 1}));
  CHECK(a2->root_to_string(2) == "a1+a2");
  CHECK(a2->negate(a2->negate(2)) == 2);
  CHECK(a2->root_id(vec({2, 1})) == -1);
  CHECK(a2->reflect(1, a2->root(0)) == vec({-1, 0}));
  CHECK(a2->reflect(1, a2->root(1)) == vec({1, 1}));

  const auto h3 = CoxeterSystem::build("H3");
  CHECK(h3->positive_count() == 15);
  for (int r = 0; r < h3->root_count(); ++r) {
    const RootVec& v = h3->root(r);
    const bool pos = std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.sign() >= 0; });
    const bool neg = std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.sign() <= 0; });
    CHECK(pos != neg);
    CHECK(pos == h3->is_positive(r));
    for (int s = 1; s <= 3; ++s) CHECK(h3->root_id(h3->reflect(s, v)) >= 0);
  }
}

TEST_CASE("type tags") {
  CHECK_THROWS_AS(CoxeterSystem::build("Q3"), InvalidInput);
  CHECK_THROWS_AS(CoxeterSystem::build("D3"), InvalidInput);
  CHECK_THROWS_AS(CoxeterSystem::build("I2(7)"), InvalidInput);
  CHECK_THROWS_AS(CoxeterSystem::build("H4"), InvalidInput);
  CHECK(CoxeterSystem::build("H4", true)->positive_count() == 60);
  CHECK(CoxeterSystem::build("F4", true)->positive_count() == 24);
  CHECK(CoxeterSystem::build("E6", true)->positive_count() == 36);
  CHECK_THROWS_AS(parse_word("1,x"), InvalidInput);
  CHECK(parse_word("2,1,3") == CoxWord{2, 1, 3});
  CHECK(parse_word("").empty());
}

TEST_CASE("group orders") {
  struct Row {
    const char* tag;
    int order, positive;
  };
  for (const Row r : {Row{"A1", 2, 1}, Row{"A2", 6, 3}, Row{"A3", 24, 6}, Row{"A4", 120, 10}, Row{"B2", 8, 4},
                      Row{"B3", 48, 9}, Row{"B4", 384, 16}, Row{"D4", 192, 12}, Row{"H3", 120, 15},
                      Row{"I2(3)", 6, 3}, Row{"I2(4)", 8, 4}, Row{"I2(5)", 10, 5}, Row{"I2(6)", 12, 6}}) {
    const auto g = group(r.tag);
    CHECK_MESSAGE(g->size() == r.order, r.tag);
    CHECK(g->system().positive_count() == r.positive);
    CHECK(g->length(g->longest()) == r.positive);
    CHECK(std::popcount(g->inv_mask(g->longest())) == r.positive);
    CHECK(g->inv_mask(g->identity()) == 0);
  }
  CHECK_THROWS_AS(CoxeterGroup(CoxeterSystem::build("A4"), 50), CapExceeded);
  CHECK_THROWS_AS(CoxeterGroup(CoxeterSystem::build("E8", true)), CapExceeded);
}

TEST_CASE("weak order") {
  const auto a2 = group("A2");
  const FinitePoset hex = a2->weak_order();
  CHECK(hex.size() == 6);
  CHECK(hex.covers().size() == 6);
  CHECK(is_lattice(hex).ok);
  CHECK(hex.top() == std::optional<std::size_t>(a2->longest()));

  const auto b2 = group("B2");
  const FinitePoset oct = b2->weak_order();
  for (ElemId u = 0; u < b2->size(); ++u)
    for (ElemId v = 0; v < b2->size(); ++v) CHECK(b2->weak_leq(u, v) == oct.leq(u, v));

  for (const char* tag : {"A3", "B3", "H3", "D4"}) {
    const auto g = group(tag);
    const FinitePoset w = g->weak_order();
    CHECK(is_lattice(w).ok);
    CHECK(w.top() == std::optional<std::size_t>(g->longest()));
  }
}

TEST_CASE("type A identification") {
  const auto a3 = group("A3");
  for (const auto& pi : all_permutations(4)) {
    const ElemId w = element_of_permutation(*a3, pi);
    CHECK(permutation_of(*a3, w) == pi);
    CHECK(a3->length(w) == pi.length());
    std::set<int> expected;
    for (auto [i, j] : inversion_set(pi)) expected.insert(type_a_root(a3->system(), i, j));
    std::set<int> got;
    for (int r = 0; r < a3->system().positive_count(); ++r)
      if (a3->in_inversions(w, r)) got.insert(r);
    CHECK(got == expected);
  }
  std::set<int> all;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) all.insert(type_a_root(a3->system(), i, j));
  CHECK(all.size() == 6);
  CHECK(*all.rbegin() < 6);
  const auto a4 = group("A4");
  CHECK(element_of_permutation(*a4, parse_permutation("24153")) == a4->from_word({3, 4, 1, 2}));
  CHECK(element_of_permutation(*a3, parse_permutation("3421")) == a3->from_word({2, 3, 1, 2, 3}));
}

TEST_CASE("products, inverses and lengths") {
  const auto h3 = group("H3");
  std::mt19937 rng(5);
  std::uniform_int_distribution<ElemId> pick(0, h3->size() - 1);
  for (int t = 0; t < 500; ++t) {
    const ElemId u = pick(rng), v = pick(rng);
    const ElemId uv = h3->mul(u, v);
    CHECK(h3->mul(uv, h3->inverse(v)) == u);
    CHECK(h3->length(uv) <= h3->length(u) + h3->length(v));
    const bool additive = h3->length(uv) == h3->length(u) + h3->length(v);
    CHECK(additive == h3->weak_leq(u, uv));
    if (additive) {
      CoxWord word = h3->reduced_word(u);
      for (int s : h3->reduced_word(v)) word.push_back(s);
      CHECK(h3->from_word(word) == uv);
      CHECK(static_cast<int>(word.size()) == h3->length(uv));
    }
    const GroupElement ge = h3->element(u) * h3->element(v);
    CHECK(h3->id_of(ge) == uv);
    CHECK(length(ge) == h3->length(uv));
    CHECK(h3->id_of(inverse(h3->element(u))) == h3->inverse(u));
    for (int r = 0; r < h3->system().root_count(); ++r) CHECK(h3->act(h3->inverse(u), h3->act(u, r)) == r);
  }
  for (ElemId w = 0; w < h3->size(); ++w) {
    const CoxWord word = h3->reduced_word(w);
    CHECK(static_cast<int>(word.size()) == h3->length(w));
    CHECK(h3->from_word(word) == w);
    CHECK(h3->element(w).reduced_word() == word);
  }
}

TEST_CASE("demazure products") {
  const auto a2 = group("A2");
  CHECK(a2->demazure_product({1, 1}) == a2->from_word({1}));
  CHECK(a2->demazure_product({1, 2, 1, 2, 1, 2}) == a2->longest());
  const auto b3 = group("B3");
  for (ElemId w = 0; w < b3->size(); ++w) CHECK(b3->demazure_product(b3->reduced_word(w)) == w);
}

TEST_CASE("reduced word containment") {
  const auto a2 = group("A2");
  CHECK(a2->contains_reduced_word({1, 2, 1}, a2->from_word({2, 1, 2})));
  CHECK_FALSE(a2->contains_reduced_word({1, 1}, a2->from_word({1, 2})));
  CHECK(a2->contains_reduced_word({}, a2->identity()));
  for (const char* tag : {"A2", "B2"}) {
    const auto g = group(tag);
    for (const auto& q : all_words(2, 8))
      for (ElemId x = 0; x < g->size(); ++x) REQUIRE(g->contains_reduced_word(q, x) == g->contains_reduced_word_brute(q, x));
  }
}

TEST_CASE("sorting and alternating words") {
  const auto a3 = group("A3");
  const CoxWord cambrian{2, 1, 3, 2, 1, 3, 2, 1, 3}, bad{1, 2, 3, 2, 1, 2, 3, 2, 1};
  CHECK(a3->is_sorting(cambrian));
  CHECK(is_alternating(a3->system(), cambrian));
  CHECK(a3->is_sorting(bad));
  CHECK_FALSE(is_alternating(a3->system(), bad));
  CHECK(is_alternating(a3->system(), {}));
  CHECK_FALSE(a3->is_sorting({}));
  CHECK(is_alternating(a3->system(), {1, 3, 3}) == false);
  CHECK(is_alternating(a3->system(), {1, 3, 2, 1, 3}));
}

TEST_CASE("cones") {
  const RootVec a1 = vec({1, 0}), a2 = vec({0, 1}), a12 = vec({1, 1});
  CHECK(cone_membership({a12}, a12));
  CHECK(cone_membership({a1, a2}, a12));
  CHECK_FALSE(cone_membership({a1, a2}, vec({-1, 0})));
  CHECK(cone_membership({}, vec({0, 0})));
  CHECK_FALSE(is_extreme_ray({a1, a2, a12}, a12));
  CHECK(is_extreme_ray({a1, a2, a12}, a1));
  CHECK_FALSE(is_extreme_ray({a1, a2}, a12));
  CHECK(is_pointed({a1, a2, a12}));
  CHECK_FALSE(is_pointed({a1, vec({-1, 0})}));
  CHECK(positively_parallel(vec({2, 2}), a12));
  CHECK_FALSE(positively_parallel(vec({-1, -1}), a12));
}

TEST_CASE("cone algorithms agree") {
  const auto h3 = CoxeterSystem::build("H3");
  const auto b3 = CoxeterSystem::build("B3");
  std::mt19937 rng(11);
  for (const auto* sys : {h3.get(), b3.get()}) {
    std::uniform_int_distribution<int> root(0, sys->root_count() - 1);
    for (int t = 0; t < 400; ++t) {
      std::vector<RootVec> gens;
      const int k = 1 + t % 5;
      for (int i = 0; i < k; ++i) gens.push_back(sys->root(root(rng)));
      const RootVec beta = sys->root(root(rng));
      CHECK(cone_membership(gens, beta) == cone_membership_subsets(gens, beta));
      for (const RootVec& g : gens) CHECK(is_extreme_ray_simplex(gens, g) == is_extreme_ray_subsets(gens, g));
    }
  }
}
