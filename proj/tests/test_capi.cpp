#include <doctest.h>

#include <json.hpp>
#include <string>

#include "alcove/alcove.h"

namespace {

using nlohmann::json;

struct Handle {
  alc_context* ctx = nullptr;
  explicit Handle(const char* type) { REQUIRE(alc_context_create(type, &ctx) == ALC_OK); }
  ~Handle() { alc_context_destroy(ctx); }
};

struct Out {
  char* text = nullptr;
  ~Out() { alc_string_free(text); }
  json parsed() const { return json::parse(text); }
};

}  // namespace

TEST_CASE("context creation and bad types") {
  alc_context* ctx = nullptr;
  CHECK(alc_context_create("H3", &ctx) == ALC_ERROR_BAD_TYPE);
  CHECK(alc_context_create("A2", &ctx) == ALC_OK);
  CHECK(std::string(alc_last_error(ctx)).empty());
  alc_context_destroy(ctx);
  CHECK(std::string(alc_supported_types()).find("G2") != std::string::npos);
  CHECK(std::string(alc_status_name(ALC_ERROR_PARSE)) == "parse-error");
}

TEST_CASE("roots endpoint") {
  Handle h("G2");
  Out out;
  REQUIRE(alc_roots_json(h.ctx, &out.text) == ALC_OK);
  json j = out.parsed();
  CHECK(j["type"] == "G2");
  CHECK(j["positive_roots"].size() == 6);
  CHECK(j["coxeter_number"] == 6);
}

TEST_CASE("moment graph endpoint") {
  Handle h("B2");
  Out js, dot, mod;
  REQUIRE(alc_moment_graph(h.ctx, nullptr, 0, "json", &js.text) == ALC_OK);
  json j = js.parsed();
  CHECK(j["vertices"].size() == 8);
  CHECK(j["edges"].size() == 16);

  REQUIRE(alc_moment_graph(h.ctx, nullptr, 1, "dot", &dot.text) == ALC_OK);
  CHECK(std::string(dot.text).find("graph \"B2_undirected\"") == 0);

  REQUIRE(alc_moment_graph(h.ctx, "s1", 0, "json", &mod.text) == ALC_OK);
  CHECK(mod.parsed()["minimal_direction"] == "s1");

  char* bad = nullptr;
  CHECK(alc_moment_graph(h.ctx, "s1", 1, "json", &bad) == ALC_ERROR_BAD_ARGUMENT);
  CHECK(std::string(alc_last_error(h.ctx)).find("flavor") != std::string::npos);
  CHECK(alc_moment_graph(h.ctx, nullptr, 0, "yaml", &bad) == ALC_ERROR_BAD_ARGUMENT);
}

TEST_CASE("patterns endpoint carries the B2 worked example") {
  Handle h("B2");
  Out out;
  REQUIRE(alc_patterns_json(h.ctx, "w0", "s1", &out.text) == ALC_OK);
  json j = out.parsed();
  CHECK(j["chamber"] == "s1");
  json two = j["by_length"][2]["sequences"];
  CHECK(std::count(two.begin(), two.end(), json::array({"2a1+a2", "a2"})) == 1);
}

TEST_CASE("fold endpoint") {
  Handle h("A2");
  Out out;
  REQUIRE(alc_fold_json(h.ctx, "s1s2s1", "s1 s2 s1", "2,3", &out.text) == ALC_OK);
  json j = out.parsed();
  CHECK(j["pattern"].size() == 2);
  CHECK(j["pattern"][0]["pretty"] == "a1+a2");

  char* bad = nullptr;
  CHECK(alc_fold_json(h.ctx, "e", "s1 s2", "5", &bad) == ALC_ERROR_BAD_ARGUMENT);
  CHECK(alc_fold_json(h.ctx, "e", "s7", "", &bad) == ALC_ERROR_PARSE);
  CHECK(std::string(alc_last_error(h.ctx)).find("out of range") != std::string::npos);
}

TEST_CASE("verify endpoint") {
  Handle h("A2");
  Out out;
  long long counterexamples = -1;
  REQUIRE(alc_verify_json(h.ctx, "minimality", "all", 4, &out.text, &counterexamples) ==
          ALC_OK);
  CHECK(counterexamples == 0);
  json j = out.parsed();
  CHECK(j["theorem"] == "minimality");
  CHECK(j["results"].size() == 6);

  char* bad = nullptr;
  CHECK(alc_verify_json(h.ctx, "everything", nullptr, 0, &bad, nullptr) ==
        ALC_ERROR_BAD_ARGUMENT);
}

TEST_CASE("xset endpoint reproduces the radius-8 corner") {
  Handle h("A2");
  Out out;
  REQUIRE(alc_xset_json(h.ctx, "w0", "e", 8, &out.text) == ALC_OK);
  json j = out.parsed();
  CHECK(j["naive_level"] == 3);
  REQUIRE(j["alcoves"].size() == 1);
  CHECK(j["alcoves"][0]["translation"] == json::array({2, 2}));
  CHECK(j["alcoves"][0]["word"] == "e");
}

TEST_CASE("shadow endpoint") {
  Handle h("A2");
  Out out;
  REQUIRE(alc_shadow_json(h.ctx, "w0", "s1 s2 s1", &out.text) == ALC_OK);
  json j = out.parsed();
  CHECK(j["count"].get<size_t>() <= 8);
  bool has_unfolded_end = false;
  for (const auto& a : j["end_alcoves"])
    has_unfolded_end = has_unfolded_end ||
                       (a["word"] == "s1 s2 s1" && a["translation"] == json::array({0, 0}));
  CHECK(has_unfolded_end);
}

TEST_CASE("render endpoint") {
  Handle h("A2");
  Out out;
  const char* galleries = R"([{"word":["s1","s2","s1"],"folds":[2]}])";
  REQUIRE(alc_render_svg(h.ctx, "w0", galleries, 2, "e:1", &out.text) == ALC_OK);
  std::string svg = out.text;
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);

  Handle b3("B3");
  char* bad = nullptr;
  CHECK(alc_render_svg(b3.ctx, nullptr, nullptr, 2, nullptr, &bad) == ALC_ERROR_UNSUPPORTED);
  CHECK(alc_render_svg(h.ctx, nullptr, "{notjson", 2, nullptr, &bad) == ALC_ERROR_PARSE);
}
