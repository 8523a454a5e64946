#include <doctest.h>

#include <map>
#include <set>

#include "alcove/moment_graph.hpp"
#include "helpers.hpp"

using namespace alcove;
using alcove::testing::Ctx;
using alcove::testing::elem;
using alcove::testing::root;

namespace {

std::set<std::tuple<std::string, std::string, std::string>> edge_table(const Ctx& t,
                                                                       const MomentGraph& g) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& e : g.edges)
    out.insert({t.group.word_string(e.tail), t.group.word_string(e.head), t.rs.pretty(e.label)});
  return out;
}

}  // namespace

TEST_CASE("A2 Bruhat moment graph: 6 vertices, 9 edges, figure labels") {
  Ctx t("A2");
  MomentGraph g = bruhat_moment_graph(t.group);
  CHECK(t.group.size() == 6);
  CHECK(g.edges.size() == 9);
  auto edges = edge_table(t, g);
  std::set<std::tuple<std::string, std::string, std::string>> expected = {
      {"e", "s1", "a1"},
      {"e", "s2", "a2"},
      {"e", "s1 s2 s1", "a1+a2"},
      {"s1", "s1 s2", "a1+a2"},
      {"s1", "s2 s1", "a2"},
      {"s2", "s1 s2", "a1"},
      {"s2", "s2 s1", "a1+a2"},
      {"s1 s2", "s1 s2 s1", "a2"},
      {"s2 s1", "s1 s2 s1", "a1"},
  };
  CHECK(edges == expected);
}

TEST_CASE("B2 Bruhat moment graph: 8 vertices, 16 edges, figure labels") {
  Ctx t("B2");
  MomentGraph g = bruhat_moment_graph(t.group);
  CHECK(t.group.size() == 8);
  CHECK(g.edges.size() == 16);
  auto edges = edge_table(t, g);
  // a3 = a1+a2, a0 = 2a1+a2.
  std::set<std::tuple<std::string, std::string, std::string>> expected = {
      {"e", "s1", "a1"},
      {"e", "s2", "a2"},
      {"e", "s1 s2 s1", "2a1+a2"},
      {"e", "s2 s1 s2", "a1+a2"},
      {"s1", "s1 s2", "2a1+a2"},
      {"s1", "s2 s1", "a2"},
      {"s1", "s1 s2 s1 s2", "a1+a2"},
      {"s2", "s1 s2", "a1"},
      {"s2", "s2 s1", "a1+a2"},
      {"s2", "s1 s2 s1 s2", "2a1+a2"},
      {"s1 s2", "s1 s2 s1", "a1+a2"},
      {"s1 s2", "s2 s1 s2", "a2"},
      {"s2 s1", "s1 s2 s1", "a1"},
      {"s2 s1", "s2 s1 s2", "2a1+a2"},
      {"s1 s2 s1", "s1 s2 s1 s2", "a2"},
      {"s2 s1 s2", "s1 s2 s1 s2", "a1"},
  };
  CHECK(edges == expected);
}

TEST_CASE("A1 moment graph is a single labeled edge") {
  Ctx t("A1");
  MomentGraph g = bruhat_moment_graph(t.group);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].tail == 0);
  CHECK(g.edges[0].head == t.group.simple(1));
  CHECK(g.edges[0].label == root(t.rs, "a1"));
}

TEST_CASE("plain edges increase length; undirected degree is |Phi+|") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    Ctx t(label);
    MomentGraph g = bruhat_moment_graph(t.group);
    CHECK(g.edges.size() == t.group.size() * t.rs.num_positive_roots() / 2u);
    std::map<int, int> degree;
    for (const auto& e : g.edges) {
      CHECK(t.group.length(e.tail) < t.group.length(e.head));
      CHECK(t.group.multiply(t.group.reflection(e.label), e.tail) == e.head);
      ++degree[e.tail];
      ++degree[e.head];
    }
    for (int v = 0; v < t.group.size(); ++v)
      CHECK(degree[v] == t.rs.num_positive_roots());
  }
}

TEST_CASE("modified(w0) is the plain graph; modified(e) reverses it") {
  for (const char* label : {"A2", "B2", "G2"}) {
    Ctx t(label);
    MomentGraph plain = bruhat_moment_graph(t.group);
    MomentGraph mw0 = modified_moment_graph(t.group, t.group.longest());
    REQUIRE(plain.edges.size() == mw0.edges.size());
    for (size_t i = 0; i < plain.edges.size(); ++i) CHECK(plain.edges[i] == mw0.edges[i]);

    MomentGraph me = modified_moment_graph(t.group, 0);
    std::set<std::tuple<int, int, Root>> reversed, found;
    for (const auto& e : plain.edges) reversed.insert({e.head, e.tail, e.label});
    for (const auto& e : me.edges) found.insert({e.tail, e.head, e.label});
    CHECK(found == reversed);
  }
}

TEST_CASE("modified graphs: sink is v, source is v w0, sides rule holds") {
  for (const char* label : {"A2", "B2", "G2"}) {
    Ctx t(label);
    for (int v = 0; v < t.group.size(); ++v) {
      MomentGraph g = modified_moment_graph(t.group, v);
      std::map<int, int> indeg, outdeg;
      for (const auto& e : g.edges) {
        ++outdeg[e.tail];
        ++indeg[e.head];
        // Direction rule: the head shares v's side, the tail does not.
        CHECK(t.group.chamber_side(e.label, e.head) == t.group.chamber_side(e.label, v));
        CHECK(t.group.chamber_side(e.label, e.tail) != t.group.chamber_side(e.label, v));
        // Along any edge, distance to the sink decreases.
        CHECK(t.group.distance(e.head, v) < t.group.distance(e.tail, v));
      }
      for (int u = 0; u < t.group.size(); ++u) {
        bool is_sink = indeg[u] == t.rs.num_positive_roots() && outdeg[u] == 0;
        bool is_source = outdeg[u] == t.rs.num_positive_roots() && indeg[u] == 0;
        CHECK(is_sink == (u == v));
        CHECK(is_source == (u == t.group.multiply(v, t.group.longest())));
      }
    }
  }
}

TEST_CASE("A2 directed path label sequences from e, s2 and w0") {
  Ctx t("A2");
  MomentGraph g = bruhat_moment_graph(t.group);
  auto from_e = directed_path_labels_from(t.group, g, 0);
  std::set<std::vector<Root>> maximal_len3;
  for (const auto& seq : from_e)
    if (seq.size() == 3) maximal_len3.insert(seq);
  Root a1 = root(t.rs, "a1"), a2 = root(t.rs, "a2"), a12 = root(t.rs, "a1+a2");
  std::set<std::vector<Root>> expected = {
      {a1, a2, a1}, {a1, a12, a2}, {a2, a1, a2}, {a2, a12, a1}};
  CHECK(maximal_len3 == expected);
  for (const auto& seq : from_e) CHECK(seq.size() <= 3);

  auto from_s2 = directed_path_labels_from(t.group, g, t.group.simple(2));
  std::vector<Root> fig1_pattern = {a12, a1};
  CHECK(std::count(from_s2.begin(), from_s2.end(), fig1_pattern) == 1);

  auto from_w0 = directed_path_labels_from(t.group, g, t.group.longest());
  CHECK(from_w0 == std::vector<std::vector<Root>>{{}});

  CHECK_THROWS_AS(directed_path_labels_from(t.group, undirected_moment_graph(t.group), 0),
                  Error);
}

TEST_CASE("path lengths are bounded by l(w0)") {
  for (const char* label : {"A2", "B2", "G2"}) {
    Ctx t(label);
    for (int v = 0; v < t.group.size(); ++v) {
      MomentGraph g = modified_moment_graph(t.group, v);
      for (int u = 0; u < t.group.size(); ++u)
        CHECK(longest_path_from(t.group, g, u) <= t.group.length(t.group.longest()));
      CHECK(longest_path_from(t.group, g, t.group.multiply(v, t.group.longest())) ==
            t.group.length(t.group.longest()));
      CHECK(longest_path_from(t.group, g, v) == 0);
    }
  }
}

TEST_CASE("undirected walk") {
  Ctx t("A2");
  MomentGraph un = undirected_moment_graph(t.group);
  CHECK(walk_undirected(t.group, un, t.group.simple(1), {}) == t.group.simple(1));

  // Independent route: follow the unique incident edges in the edge list.
  Root a1 = root(t.rs, "a1"), a12 = root(t.rs, "a1+a2");
  int v = t.group.simple(2);
  for (const Root& step : {a12, a1}) {
    bool moved = false;
    for (const auto& e : un.edges)
      if (e.label == step && (e.tail == v || e.head == v)) {
        v = e.tail == v ? e.head : e.tail;
        moved = true;
        break;
      }
    REQUIRE(moved);
  }
  CHECK(walk_undirected(t.group, un, t.group.simple(2), {a12, a1}) == v);
  // The walk from s2 along (a1+a2, a1) lands at w0 = s1 s2 s1, the alcove
  // adjacent to the origin that the figure's twice-folded gallery reaches.
  CHECK(v == t.group.longest());

  // Walking the same class twice returns.
  for (int start = 0; start < t.group.size(); ++start)
    for (const Root& r : t.rs.positive_roots())
      CHECK(walk_undirected(t.group, un, start, {r, r}) == start);

  CHECK_THROWS_AS(walk_undirected(t.group, bruhat_moment_graph(t.group), 0, {a1}), Error);
}

TEST_CASE("every modified graph is a label rotation of the plain graph") {
  for (const char* label : {"A1", "A2", "A3", "B2", "G2"}) {
    Ctx t(label);
    for (int v = 0; v < t.group.size(); ++v) {
      auto check = verify_modified_is_label_rotation(t.group, v);
      CHECK(check.ok);
      CHECK(check.source == t.group.multiply(v, t.group.longest()));
    }
  }
}
