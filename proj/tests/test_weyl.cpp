#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"

using namespace alcove;
using alcove::testing::Ctx;
using alcove::testing::elem;
using alcove::testing::root;

TEST_CASE("group orders") {
  const std::map<std::string, int> orders = {{"A1", 2},  {"A2", 6},  {"A3", 24}, {"B2", 8},
                                             {"B3", 48}, {"C3", 48}, {"G2", 12}};
  for (const auto& [label, n] : orders) {
    Ctx t(label);
    CHECK(t.group.size() == n);
  }
}

TEST_CASE("A2 elements in display order") {
  Ctx t("A2");
  std::vector<std::string> names;
  for (int w : t.group.display_order()) names.push_back(t.group.word_string(w));
  CHECK(names == std::vector<std::string>{"e", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1"});
}

TEST_CASE("B2 contains both length-3 braid words and the longest element") {
  Ctx t("B2");
  int a = elem(t.group, {1, 2, 1});
  int b = elem(t.group, {2, 1, 2});
  CHECK(a != b);
  CHECK(t.group.length(a) == 3);
  CHECK(t.group.length(b) == 3);
  CHECK(elem(t.group, {1, 2, 1, 2}) == elem(t.group, {2, 1, 2, 1}));
  CHECK(t.group.longest() == elem(t.group, {1, 2, 1, 2}));
  CHECK(t.group.length(t.group.longest()) == 4);
}

TEST_CASE("longest element negates the positive cone") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    Ctx t(label);
    int w0 = t.group.longest();
    CHECK(t.group.length(w0) == t.rs.num_positive_roots());
    for (const Root& r : t.rs.positive_roots()) CHECK_FALSE(t.rs.is_positive(t.group.apply(w0, r)));
  }
}

TEST_CASE("A2 longest element is the braid word") {
  Ctx t("A2");
  CHECK(elem(t.group, {1, 2, 1}) == elem(t.group, {2, 1, 2}));
  CHECK(t.group.longest() == elem(t.group, {1, 2, 1}));
  CHECK(t.group.word(t.group.longest()) == std::vector<int>{1, 2, 1});
}

TEST_CASE("length equals the inversion count") {
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    Ctx t(label);
    for (int w = 0; w < t.group.size(); ++w) {
      int inversions = 0;
      for (const Root& r : t.rs.positive_roots())
        if (!t.rs.is_positive(t.group.apply(w, r))) ++inversions;
      CHECK(t.group.length(w) == inversions);
    }
  }
}

TEST_CASE("distance is the metric d(u,v) = l(u^{-1} v)") {
  Ctx t("A2");
  CHECK(t.group.distance(0, t.group.longest()) == t.rs.num_positive_roots());
  CHECK(t.group.distance(t.group.simple(1), t.group.simple(2)) == 2);
  for (int u = 0; u < t.group.size(); ++u) {
    CHECK(t.group.distance(u, u) == 0);
    for (int v = 0; v < t.group.size(); ++v) {
      CHECK(t.group.distance(u, v) == t.group.distance(v, u));
      for (int x = 0; x < t.group.size(); ++x)
        CHECK(t.group.distance(u, x) <= t.group.distance(u, v) + t.group.distance(v, x));
    }
  }
}

TEST_CASE("reflection_between uses the left convention") {
  Ctx a2("A2");
  int s1 = a2.group.simple(1);
  int s1s2 = elem(a2.group, {1, 2});
  auto r = a2.group.reflection_between(s1, s1s2);
  REQUIRE(r.has_value());
  CHECK(*r == root(a2.rs, "a1+a2"));
  CHECK_FALSE(a2.group.reflection_between(s1, s1).has_value());

  Ctx b2("B2");
  auto rb = b2.group.reflection_between(b2.group.simple(1), elem(b2.group, {1, 2}));
  REQUIRE(rb.has_value());
  CHECK(*rb == root(b2.rs, "2a1+a2"));
}

TEST_CASE("reflection adjacency matches conjugacy to a generator") {
  Ctx t("B2");
  for (int u = 0; u < t.group.size(); ++u)
    for (int w = 0; w < t.group.size(); ++w) {
      bool left = t.group.reflection_between(u, w).has_value();
      bool conj = t.group.is_reflection(t.group.multiply(t.group.inverse(u), w));
      CHECK(left == conj);
    }
}

TEST_CASE("chamber sides") {
  Ctx t("A2");
  for (const Root& r : t.rs.positive_roots()) {
    CHECK(t.group.chamber_side(r, 0) == +1);
    CHECK(t.group.chamber_side(r, t.group.longest()) == -1);
  }
  int s2 = t.group.simple(2);
  CHECK(t.group.chamber_side(root(t.rs, "a1"), s2) == +1);
  CHECK(t.group.chamber_side(root(t.rs, "a2"), s2) == -1);
}

TEST_CASE("chamber sides split the group in half and determine elements") {
  for (const char* label : {"A2", "B2", "G2", "B3"}) {
    Ctx t(label);
    for (const Root& r : t.rs.positive_roots()) {
      int plus = 0;
      for (int v = 0; v < t.group.size(); ++v)
        if (t.group.chamber_side(r, v) > 0) ++plus;
      CHECK(plus * 2 == t.group.size());
    }
    std::set<std::vector<int>> signatures;
    for (int v = 0; v < t.group.size(); ++v) {
      std::vector<int> sig;
      for (const Root& r : t.rs.positive_roots()) sig.push_back(t.group.chamber_side(r, v));
      signatures.insert(sig);
      CHECK(t.group.chamber_from_sides(sig) == v);
    }
    CHECK(static_cast<int>(signatures.size()) == t.group.size());
  }
}

TEST_CASE("pairing is invariant under the group action") {
  std::mt19937 rng(7);
  for (const char* label : {"A2", "B2", "G2", "C3"}) {
    Ctx t(label);
    std::uniform_int_distribution<int> pick_w(0, t.group.size() - 1);
    std::uniform_int_distribution<long long> coord(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
      int w = pick_w(rng);
      Point x;
      for (int i = 0; i < t.rs.rank(); ++i) x.coords[i] = Rational(coord(rng), 3);
      Point wx;
      Coeffs num{};
      for (int i = 0; i < t.rs.rank(); ++i)
        for (int j = 0; j < t.rs.rank(); ++j)
          wx.coords[i] += Rational(t.group.coweight_matrix(w)[i][j]) * x.coords[j];
      for (const Root& r : t.rs.positive_roots())
        CHECK(t.rs.pair(t.group.apply(w, r), wx) == t.rs.pair(r, x));
    }
  }
}

TEST_CASE("coroot action is compatible with the lattice pairing") {
  std::mt19937 rng(11);
  for (const char* label : {"B2", "G2", "B3"}) {
    Ctx t(label);
    std::uniform_int_distribution<int> pick_w(0, t.group.size() - 1);
    std::uniform_int_distribution<long long> coord(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
      int w = pick_w(rng);
      Coeffs mu{};
      for (int i = 0; i < t.rs.rank(); ++i) mu[i] = coord(rng);
      for (const Root& r : t.rs.positive_roots())
        CHECK(t.rs.pair_lattice(t.group.apply(w, r), t.group.apply_coroot(w, mu)) ==
              t.rs.pair_lattice(r, mu));
    }
  }
}

TEST_CASE("canonical words are the lexicographically least reduced words") {
  for (const char* label : {"A2", "B2", "G2"}) {
    Ctx t(label);
    for (int w = 0; w < t.group.size(); ++w) {
      auto words = t.group.reduced_words(w);
      CHECK(*std::min_element(words.begin(), words.end()) == t.group.word(w));
      for (const auto& word : words) {
        CHECK(static_cast<int>(word.size()) == t.group.length(w));
        CHECK(elem(t.group, word) == w);
      }
    }
  }
  Ctx a2("A2");
  CHECK(a2.group.reduced_words(a2.group.longest()).size() == 2);
}
