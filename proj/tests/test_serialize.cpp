#include <doctest.h>

#include <random>

#include "alcove/serialize.hpp"
#include "helpers.hpp"

using namespace alcove;
using alcove::testing::Ctx;

TEST_CASE("word parsing accepts the documented forms") {
  CHECK(parse_affine_word("e", 2).empty());
  CHECK(parse_affine_word("", 2).empty());
  CHECK(parse_affine_word("s0 s1 s2", 2) == std::vector<int>{0, 1, 2});
  CHECK(parse_affine_word("s0s1s2", 2) == std::vector<int>{0, 1, 2});
  CHECK(parse_affine_word("s0,s1,s2", 2) == std::vector<int>{0, 1, 2});
  CHECK(parse_spherical_word("s1s2s1", 2) == std::vector<int>{1, 2, 1});
  CHECK_THROWS_WITH_AS(parse_affine_word("s3", 2), doctest::Contains("out of range"), Error);
  CHECK_THROWS_WITH_AS(parse_affine_word("x1", 2), doctest::Contains("position"), Error);
  CHECK_THROWS_AS(parse_spherical_word("s0", 2), Error);
  CHECK(parse_fold_indices("3,9") == std::vector<int>{3, 9});
  CHECK(parse_fold_indices("").empty());
  CHECK_THROWS_AS(parse_fold_indices("3,x"), Error);
}

TEST_CASE("w0 aliases") {
  Ctx t("B2");
  CHECK(parse_w0_element(t.group, "e") == 0);
  CHECK(parse_w0_element(t.group, "w0") == t.group.longest());
  CHECK(parse_w0_element(t.group, "s1 s2 s1 s2") == t.group.longest());
}

TEST_CASE("alcove JSON round trip") {
  Ctx t("B2");
  for (const Alcove& a : t.cx.ball(4)) {
    json j = alcove_to_json(t.cx, a);
    CHECK(alcove_from_json(t.cx, j) == a);
  }
  CHECK_THROWS_AS(alcove_from_json(t.cx, json{{"word", "e"}}), Error);
}

TEST_CASE("gallery reports re-parse to equal galleries") {
  Ctx t("A2");
  WeylChamberOrientation o{t.group.longest()};
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> letter(0, t.cx.num_letters() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> word;
    for (int i = 0; i < 6; ++i) word.push_back(letter(rng));
    Gallery g = gallery_from_word(t.cx.identity(), word);
    for (int i = 1; i <= g.num_steps(); ++i)
      if (coin(rng)) g = fold_at(g, i);
    json report = gallery_report_to_json(t.cx, o, g);
    CHECK(gallery_from_json(t.cx, report) == g);
  }
}

TEST_CASE("the fold report carries walls, pattern, and the walk prediction") {
  Ctx t("A2");
  WeylChamberOrientation o{t.group.longest()};
  Gallery g = fold_set(gallery_from_word(t.cx.identity(), {1, 2, 1}), {2, 3});
  json report = gallery_report_to_json(t.cx, o, g);
  CHECK(report["word_is_reduced"] == true);
  CHECK(report["folds"] == json::array({2, 3}));
  CHECK(report["pattern"][0]["pretty"] == "a1+a2");
  CHECK(report["pattern"][1]["pretty"] == "a1");
  CHECK(report["steps"][1]["wall"]["root"] == json::array({1, 1}));
  CHECK(report["steps"][1]["wall"]["level"] == 0);
  CHECK(report["spherical_direction"] == report["predicted_direction"]);
}

TEST_CASE("root system table") {
  Ctx t("B2");
  json j = root_system_to_json(t.rs);
  CHECK(j["version"] == 1);
  CHECK(j["type"] == "B2");
  CHECK(j["rank"] == 2);
  CHECK(j["coxeter_number"] == 4);
  CHECK(j["cartan"] == json::array({{2, -1}, {-2, 2}}));
  CHECK(j["positive_roots"].size() == 4);
  CHECK(j["highest_root"]["pretty"] == "2a1+a2");
}

TEST_CASE("moment graph serialization is deterministic") {
  Ctx t("A2");
  MomentGraph g = bruhat_moment_graph(t.group);
  CHECK(moment_graph_to_json(t.group, g).dump() == moment_graph_to_json(t.group, g).dump());
  std::string dot = moment_graph_to_dot(t.group, g);
  CHECK(dot == moment_graph_to_dot(t.group, g));
  CHECK(dot.find("digraph \"A2_plain\"") == 0);
  CHECK(dot.find("\"e\" -> \"s1\" [label=\"a1\"];") != std::string::npos);

  Ctx a1("A1");
  std::string a1dot = moment_graph_to_dot(a1.group, undirected_moment_graph(a1.group));
  CHECK(a1dot ==
        "graph \"A1_undirected\" {\n  \"e\";\n  \"s1\";\n  \"e\" -- \"s1\" [label=\"a1\"];\n}\n");
}

TEST_CASE("patterns JSON groups sequences by length") {
  Ctx t("A2");
  MomentGraph g = modified_moment_graph(t.group, t.group.longest());
  json j = patterns_to_json(t.group, g, 0);
  CHECK(j["count"] == 12);
  CHECK(j["max_length"] == 3);
  CHECK(j["by_length"][0]["sequences"] == json::array({json::array()}));
  CHECK(j["by_length"][3]["sequences"].size() == 4);
}
