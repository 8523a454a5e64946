#include "alcove/alcove.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <set>

#include "alcove/render.hpp"
#include "alcove/serialize.hpp"

using namespace alcove;

struct alc_context {
  std::unique_ptr<RootSystem> rs;
  std::unique_ptr<WeylGroup> group;
  std::unique_ptr<AffineComplex> cx;
  std::string last_error;
};

namespace {

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

alc_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BadType: return ALC_ERROR_BAD_TYPE;
    case ErrorCode::BadArgument: return ALC_ERROR_BAD_ARGUMENT;
    case ErrorCode::Parse: return ALC_ERROR_PARSE;
    case ErrorCode::Unsupported: return ALC_ERROR_UNSUPPORTED;
    case ErrorCode::Resource: return ALC_ERROR_RESOURCE;
    case ErrorCode::Internal: return ALC_ERROR_INTERNAL;
  }
  return ALC_ERROR_INTERNAL;
}

template <typename Fn>
alc_status guarded(alc_context* ctx, Fn&& fn) {
  try {
    ctx->last_error.clear();
    fn();
    return ALC_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return ALC_ERROR_INTERNAL;
  }
}

long long default_radius(const RootSystem& rs) { return rs.rank() <= 2 ? 8 : 5; }

std::string text_or(const char* s, const std::string& fallback) {
  return s == nullptr || *s == '\0' ? fallback : std::string(s);
}

}  // namespace

extern "C" {

const char* alc_version(void) { return "0.1.0"; }

const char* alc_supported_types(void) {
  static const std::string joined = [] {
    std::string out;
    for (const auto& t : RootSystem::supported_types()) {
      if (!out.empty()) out += ",";
      out += t;
    }
    return out;
  }();
  return joined.c_str();
}

const char* alc_status_name(alc_status status) {
  switch (status) {
    case ALC_OK: return "ok";
    case ALC_ERROR_BAD_TYPE: return "bad-type";
    case ALC_ERROR_BAD_ARGUMENT: return "bad-argument";
    case ALC_ERROR_PARSE: return "parse-error";
    case ALC_ERROR_UNSUPPORTED: return "unsupported";
    case ALC_ERROR_RESOURCE: return "resource-limit";
    case ALC_ERROR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

alc_status alc_context_create(const char* type_label, alc_context** out_ctx) {
  if (!type_label || !out_ctx) return ALC_ERROR_BAD_ARGUMENT;
  auto ctx = std::make_unique<alc_context>();
  alc_status status = guarded(ctx.get(), [&] {
    ctx->rs = std::make_unique<RootSystem>(RootSystem::build(type_label));
    ctx->group = std::make_unique<WeylGroup>(*ctx->rs);
    ctx->cx = std::make_unique<AffineComplex>(*ctx->rs, *ctx->group);
  });
  if (status != ALC_OK) return status;
  *out_ctx = ctx.release();
  return ALC_OK;
}

void alc_context_destroy(alc_context* ctx) { delete ctx; }

const char* alc_last_error(const alc_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

void alc_string_free(char* s) { std::free(s); }

alc_status alc_roots_json(alc_context* ctx, char** out) {
  if (!ctx || !out) return ALC_ERROR_BAD_ARGUMENT;
  return guarded(ctx, [&] { *out = copy_string(root_system_to_json(*ctx->rs).dump(2)); });
}

alc_status alc_moment_graph(alc_context* ctx, const char* modified_direction, int undirected,
                            const char* format, char** out) {
  if (!ctx || !out) return ALC_ERROR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    MomentGraph graph;
    if (undirected) {
      if (modified_direction && *modified_direction)
        throw Error(ErrorCode::BadArgument,
                    "choose either the undirected or a modified flavor, not both");
      graph = undirected_moment_graph(*ctx->group);
    } else if (modified_direction && *modified_direction) {
      graph = modified_moment_graph(*ctx->group,
                                    parse_w0_element(*ctx->group, modified_direction));
    } else {
      graph = bruhat_moment_graph(*ctx->group);
    }
    std::string fmt = text_or(format, "json");
    if (fmt == "json")
      *out = copy_string(moment_graph_to_json(*ctx->group, graph).dump(2));
    else if (fmt == "dot")
      *out = copy_string(moment_graph_to_dot(*ctx->group, graph));
    else
      throw Error(ErrorCode::BadArgument, "format must be 'json' or 'dot', got '" + fmt + "'");
  });
}

alc_status alc_patterns_json(alc_context* ctx, const char* orientation, const char* chamber,
                             char** out) {
  if (!ctx || !out) return ALC_ERROR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    int w = parse_w0_element(*ctx->group, text_or(orientation, "w0"));
    int v = parse_w0_element(*ctx->group, text_or(chamber, "e"));
    MomentGraph graph = modified_moment_graph(*ctx->group, w);
    json j = patterns_to_json(*ctx->group, graph, v);
    j["orientation"] = ctx->group->word_string(w);
    *out = copy_string(j.dump(2));
  });
}

alc_status alc_fold_json(alc_context* ctx, const char* orientation, const char* word,
                         const char* folds, char** out) {
  if (!ctx || !out || !word) return ALC_ERROR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    WeylChamberOrientation o{parse_w0_element(*ctx->group, text_or(orientation, "w0"))};
    Gallery g = gallery_from_word(ctx->cx->identity(),
                                  parse_affine_word(word, ctx->rs->rank()));
    for (int idx : parse_fold_indices(text_or(folds, "")))
      g = fold_at(g, idx);
    *out = copy_string(gallery_report_to_json(*ctx->cx, o, g).dump(2));
  });
}

alc_status alc_verify_json(alc_context* ctx, const char* theorem, const char* orientation,
                           long long radius, char** out, long long* out_counterexamples) {
  if (!ctx || !out || !theorem) return ALC_ERROR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    std::string which = theorem;
    long long r = radius > 0 ? radius : default_radius(*ctx->rs);

    std::vector<int> directions;
    std::string ori = text_or(orientation, "all");
    if (ori == "all") {
      for (int w = 0; w < ctx->group->size(); ++w) directions.push_back(w);
    } else {
      directions.push_back(parse_w0_element(*ctx->group, ori));
    }

    std::vector<VerificationResult> results;
    if (which == "patterns") {
      for (int w : directions) results.push_back(check_pattern_theorem(*ctx->cx, w, r));
    } else if (which == "minimality") {
      for (int w : directions)
        results.push_back(check_minimality_lemma(*ctx->cx, w, static_cast<int>(r)));
    } else if (which == "crossings") {
      for (int w : directions) {
        results.push_back(check_crossing_direction(*ctx->cx, w, r));
        results.push_back(check_crossing_direction_translated(*ctx->cx, w, r, 100));
      }
    } else if (which == "direction") {
      // Orientation-independent; one sweep.
      results.push_back(check_spherical_direction(*ctx->cx, directions.front(), r));
    } else if (which == "xset") {
      for (int w : directions) results.push_back(check_xset_proposition(*ctx->cx, w, r));
    } else {
      throw Error(ErrorCode::BadArgument,
                  "unknown theorem '" + which +
                      "'; expected patterns|minimality|crossings|direction|xset");
    }

    long long total = 0;
    json arr = json::array();
    for (const auto& res : results) {
      total += static_cast<long long>(res.counterexample_count);
      arr.push_back(verification_to_json(res));
    }
    json doc{{"type", ctx->rs->type_label()},
             {"theorem", which},
             {"radius", r},
             {"counterexample_count", total},
             {"results", arr}};
    *out = copy_string(doc.dump(2));
    if (out_counterexamples) *out_counterexamples = total;
  });
}

alc_status alc_xset_json(alc_context* ctx, const char* orientation, const char* chamber,
                         long long radius, char** out) {
  if (!ctx || !out) return ALC_ERROR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    int w = parse_w0_element(*ctx->group, text_or(orientation, "w0"));
    int v = parse_w0_element(*ctx->group, text_or(chamber, "e"));
    long long r = radius > 0 ? radius : default_radius(*ctx->rs);
    long long lp = naive_subset_level(*ctx->group, w, v);
    auto alcoves = x_set(*ctx->cx, w, v, r);
    json list = json::array();
    for (const Alcove& a : alcoves) list.push_back(alcove_to_json(*ctx->cx, a));
    json naive = json::array();
    std::set<Alcove> in_xset(alcoves.begin(), alcoves.end());
    bool contained = true;
    for (const Alcove& a : ctx->cx->ball(r)) {
      if (ctx->cx->chamber_of(a) != v || !ctx->cx->in_shrunken_chamber(a, v, lp)) continue;
      naive.push_back(alcove_to_json(*ctx->cx, a));
      contained = contained && in_xset.erase(a) == 1;
    }
    json doc{{"type", ctx->rs->type_label()},
             {"orientation", ctx->group->word_string(w)},
             {"chamber", ctx->group->word_string(v)},
             {"radius", r},
             {"naive_level", lp},
             {"alcoves", list},
             {"naive_alcoves", naive},
             {"naive_contained_in_xset", contained},
             {"naive_subset_strict", contained && !in_xset.empty()}};
    *out = copy_string(doc.dump(2));
  });
}

alc_status alc_shadow_json(alc_context* ctx, const char* orientation, const char* word,
                           char** out) {
  if (!ctx || !out || !word) return ALC_ERROR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    WeylChamberOrientation o{parse_w0_element(*ctx->group, text_or(orientation, "w0"))};
    auto letters = parse_affine_word(word, ctx->rs->rank());
    auto ends = shadow(*ctx->cx, o, letters);
    json list = json::array();
    for (const Alcove& a : ends) list.push_back(alcove_to_json(*ctx->cx, a));
    json doc{{"type", ctx->rs->type_label()},
             {"orientation", ctx->group->word_string(o.direction)},
             {"word", word_to_string(letters)},
             {"count", ends.size()},
             {"end_alcoves", list}};
    *out = copy_string(doc.dump(2));
  });
}

alc_status alc_render_svg(alc_context* ctx, const char* orientation,
                          const char* galleries_json, long long radius, const char* shrunken,
                          char** out) {
  if (!ctx || !out) return ALC_ERROR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    RenderOptions options;
    options.radius = radius > 0 ? radius : 3;
    if (orientation && *orientation)
      options.orientation =
          WeylChamberOrientation{parse_w0_element(*ctx->group, orientation)};
    if (galleries_json && *galleries_json) {
      json parsed = json::parse(galleries_json, nullptr, false);
      if (parsed.is_discarded() || !parsed.is_array())
        throw Error(ErrorCode::Parse, "galleries must be a JSON array of gallery objects");
      for (const auto& entry : parsed)
        options.galleries.push_back(gallery_from_json(*ctx->cx, entry));
    }
    if (shrunken && *shrunken) {
      std::string text = shrunken;
      size_t colon = text.rfind(':');
      if (colon == std::string::npos)
        throw Error(ErrorCode::Parse, "shrunken overlay must be WORD:LEVEL");
      int v = parse_w0_element(*ctx->group, text.substr(0, colon));
      long long k = 0;
      try {
        k = std::stoll(text.substr(colon + 1));
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad shrink level in '" + text + "'");
      }
      options.shrunken = {v, k};
    }
    *out = copy_string(render_svg(*ctx->cx, options));
  });
}

}  // extern "C"
