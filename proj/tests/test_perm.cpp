#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "pipelat/lattice.hpp"
#include "pipelat/perm.hpp"

using namespace pipelat;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::vector<std::pair<int, int>> pairs(std::initializer_list<std::pair<int, int>> l) { return l; }

}  // namespace

TEST_CASE("inversion sets") {
  CHECK(inversion_set(P("12345")).empty());
  CHECK(inversion_set(P("31542")) == pairs({{1, 3}, {2, 3}, {2, 4}, {2, 5}, {4, 5}}));
  CHECK(inversion_set(P("21")) == pairs({{1, 2}}));
  CHECK(is_inversion(P("31542"), 2, 5));
  CHECK_FALSE(is_inversion(P("31542"), 1, 2));
}

TEST_CASE("weak order comparisons") {
  for (const auto& w : all_permutations(4)) CHECK(weak_leq(Permutation::identity(4), w));
  CHECK_FALSE(weak_leq(P("12543"), P("12345")));
  CHECK_FALSE(weak_leq(P("21345"), P("31542")));
  CHECK(weak_leq(P("13245"), P("31542")));
  CHECK(weak_leq(P("12354"), P("31542")));
}

TEST_CASE("weak covers") {
  CHECK(weak_covers_up(P("123")) == std::vector<Permutation>{P("132"), P("213")});
  CHECK(weak_covers_up(P("321")).empty());
  CHECK(weak_covers_up(P("231")) == std::vector<Permutation>{P("321")});
  CHECK(weak_covers_down(P("231")) == std::vector<Permutation>{P("213")});
}

TEST_CASE("weak intervals") {
  CHECK(weak_interval(P("1234")).elements.size() == 1);
  CHECK(weak_interval(P("321")).elements.size() == 6);

  const WeakInterval iv = weak_interval(P("31542"));
  std::vector<int> per_rank(6, 0);
  for (const auto& p : iv.elements) ++per_rank[static_cast<std::size_t>(p.length())];
  CHECK(per_rank.front() == 1);
  CHECK(per_rank.back() == 1);
  const FinitePoset poset = iv.poset();
  const auto r = ranks(poset);
  for (std::size_t k = 0; k < iv.elements.size(); ++k) CHECK(static_cast<int>(r[k]) == iv.elements[k].length());
}

TEST_CASE("dominance") {
  CHECK(is_dominant(P("4321")));
  CHECK_FALSE(is_dominant(P("132")));
  CHECK(is_dominant(P("3421")));
}

TEST_CASE("non-inversion counts") {
  for (int j = 1; j <= 5; ++j) {
    CHECK(noninversion_count(Permutation::identity(5), j) == j - 1);
    CHECK(noninversion_count(Permutation::reversing(5), j) == 0);
  }
  CHECK(noninversion_count(P("31542"), 4) == 2);
}

TEST_CASE("text formats") {
  CHECK(parse_permutation("3,1,5,4,2") == P("31542"));
  CHECK(parse_permutation("0421356") == P("1532467"));
  CHECK(to_string(P("1532467"), 0) == "0421356");
  const Permutation big = Permutation::reversing(11);
  CHECK(to_string(big) == "11,10,9,8,7,6,5,4,3,2,1");
  CHECK(parse_permutation(to_string(big)) == big);
  CHECK_THROWS_AS(parse_permutation("1224"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation("1a3"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation(""), InvalidInput);
}

TEST_CASE("relabelled permutations") {
  CHECK(zero_prepended(P("132")) == P("1243"));
  CHECK(rho(3) == P("14325"));
}

TEST_CASE("interval cap") { CHECK_THROWS_AS(weak_interval(Permutation::reversing(6), 100), CapExceeded); }

TEST_CASE("inversions and non-inversions partition the pairs") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      int non = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) non += !is_inversion(p, i, j);
      CHECK(static_cast<int>(inversion_set(p).size()) + non == n * (n - 1) / 2);
    }
}

TEST_CASE("inversion sets agree with the position oracle") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto expected = oracle::inversions(p.images());
      const auto got = inversion_set(p);
      CHECK(std::set<std::pair<int, int>>(got.begin(), got.end()) == expected);
    }
}

TEST_CASE("weak order is a partial order with the expected covers") {
  const auto perms = all_permutations(4);
  for (const auto& p : perms) {
    CHECK(weak_leq(p, p));
    for (const auto& q : perms) {
      CHECK(weak_leq(p, q) == oracle::weak_leq(p.images(), q.images()));
      if (p != q && weak_leq(p, q)) CHECK_FALSE(weak_leq(q, p));
    }
    std::vector<Permutation> covers;
    for (const auto& q : perms)
      if (weak_leq(p, q) && q.length() == p.length() + 1) covers.push_back(q);
    CHECK(weak_covers_up(p) == covers);
  }
}

TEST_CASE("non-inversion counts sum to the co-length") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      int sum = 0;
      for (int j = 1; j <= n; ++j) sum += noninversion_count(w, j);
      CHECK(sum == n * (n - 1) / 2 - w.length());
    }
}

TEST_CASE("dominance agrees with a 132 scan") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n)) REQUIRE(is_dominant(w) == !oracle::contains_132(w.images()));
}

TEST_CASE("weak intervals agree with filtering S_n") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& w : perms) {
      std::vector<Permutation> expected;
      for (const auto& p : perms)
        if (oracle::weak_leq(p.images(), w.images())) expected.push_back(p);
      REQUIRE(weak_interval(w).elements == expected);
    }
  }
}

TEST_CASE("group laws on random permutations") {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 9;
    const Permutation p(oracle::random_perm(n, rng)), q(oracle::random_perm(n, rng));
    CHECK((p * p.inverse()).is_identity());
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
    CHECK(p.length() == oracle::length(p.images()));
    for (int k = 1; k < n; ++k) CHECK(std::abs(p.swap_positions(k).length() - p.length()) == 1);
  }
}
