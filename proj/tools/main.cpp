// Command-line front end; talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 verification found counterexamples, 2 usage or
// input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "alcove/alcove.h"

namespace {

struct ContextHandle {
  alc_context* ctx = nullptr;
  ~ContextHandle() { alc_context_destroy(ctx); }
};

int fail_with(alc_context* ctx, alc_status status) {
  std::cerr << "error (" << alc_status_name(status) << "): "
            << (ctx ? alc_last_error(ctx) : "") << "\n";
  return 2;
}

int write_output(const std::string& out_path, const char* text) {
  if (out_path.empty()) {
    std::cout << text;
    if (*text && text[strlen(text) - 1] != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("--galleries", "cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alcove: alcove geometry, folded galleries, and Bruhat moment graphs"};
  app.require_subcommand(1);

  std::string type = "A2", orientation = "w0", chamber = "e", word, folds, format = "json";
  std::string out_path, json_path, galleries_path, theorem = "patterns", shrunken;
  long long radius = 0;
  bool undirected = false;
  std::string modified;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "root system type (" +
                                        std::string(alc_supported_types()) + ")");
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  CLI::App* roots = app.add_subcommand("roots", "emit the root-system table");
  add_common(roots);

  CLI::App* graph = app.add_subcommand("moment-graph", "emit a Bruhat moment graph");
  add_common(graph);
  graph->add_option("--modified", modified, "minimal direction of the modified flavor");
  graph->add_flag("--undirected", undirected, "forget edge directions");
  graph->add_option("--format", format, "json or dot");

  CLI::App* fold = app.add_subcommand("fold", "fold a gallery and report it");
  add_common(fold);
  fold->add_option("--orientation", orientation, "Weyl chamber orientation (word, e, w0)");
  fold->add_option("--word", word, "type word over s0..sn")->required();
  fold->add_option("--folds", folds, "comma-separated 1-based panel indices");

  CLI::App* patterns = app.add_subcommand("patterns", "directed-path label sequences");
  add_common(patterns);
  patterns->add_option("--orientation", orientation, "orientation direction");
  patterns->add_option("--chamber", chamber, "start vertex (word over s1..sn)");

  CLI::App* verify = app.add_subcommand("verify", "exhaustive theorem verification");
  add_common(verify);
  verify->add_option("--theorem", theorem, "patterns|minimality|crossings|direction|xset");
  verify->add_option("--orientation", orientation, "orientation word, or 'all'");
  verify->add_option("--radius", radius, "region radius (word-length cap for minimality)");
  verify->add_option("--json", json_path, "also write the full JSON report here");

  CLI::App* xset = app.add_subcommand("xset", "alcoves realizing every folding pattern");
  add_common(xset);
  xset->add_option("--orientation", orientation, "orientation direction");
  xset->add_option("--chamber", chamber, "chamber of the end alcoves");
  xset->add_option("--radius", radius, "region radius");

  CLI::App* shadow = app.add_subcommand("shadow", "end alcoves of positive foldings");
  add_common(shadow);
  shadow->add_option("--orientation", orientation, "orientation direction");
  shadow->add_option("--word", word, "type word over s0..sn")->required();

  CLI::App* render = app.add_subcommand("render", "SVG picture of a rank-2 complex");
  add_common(render);
  render->add_option("--orientation", orientation, "orientation for +/- decorations");
  render->add_option("--galleries", galleries_path, "JSON file with an array of galleries");
  render->add_option("--radius", radius, "window half-width in wall levels");
  render->add_option("--shrunken", shrunken, "shrunken-chamber overlay WORD:LEVEL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  ContextHandle handle;
  alc_status status = alc_context_create(type.c_str(), &handle.ctx);
  if (status != ALC_OK) {
    std::cerr << "error (" << alc_status_name(status) << "): unknown type '" << type
              << "'; supported: " << alc_supported_types() << "\n";
    return 2;
  }
  alc_context* ctx = handle.ctx;

  char* text = nullptr;
  int rc = 0;

  if (roots->parsed()) {
    status = alc_roots_json(ctx, &text);
  } else if (graph->parsed()) {
    status = alc_moment_graph(ctx, modified.empty() ? nullptr : modified.c_str(),
                              undirected ? 1 : 0, format.c_str(), &text);
  } else if (fold->parsed()) {
    status = alc_fold_json(ctx, orientation.c_str(), word.c_str(), folds.c_str(), &text);
  } else if (patterns->parsed()) {
    status = alc_patterns_json(ctx, orientation.c_str(), chamber.c_str(), &text);
  } else if (verify->parsed()) {
    long long counterexamples = 0;
    status = alc_verify_json(ctx, theorem.c_str(), orientation.c_str(), radius, &text,
                             &counterexamples);
    if (status == ALC_OK) {
      if (!json_path.empty()) {
        rc = write_output(json_path, text);
        if (rc != 0) {
          alc_string_free(text);
          return rc;
        }
      }
      std::cout << "verify " << theorem << " --type " << type << ": "
                << (counterexamples == 0 ? "PASS" : "FAIL") << " (" << counterexamples
                << " counterexamples)\n";
      alc_string_free(text);
      return counterexamples == 0 ? 0 : 1;
    }
  } else if (xset->parsed()) {
    status = alc_xset_json(ctx, orientation.c_str(), chamber.c_str(), radius, &text);
  } else if (shadow->parsed()) {
    status = alc_shadow_json(ctx, orientation.c_str(), word.c_str(), &text);
  } else if (render->parsed()) {
    std::string galleries;
    if (!galleries_path.empty()) {
      try {
        galleries = read_file(galleries_path);
      } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
    status = alc_render_svg(ctx, orientation.c_str(),
                            galleries.empty() ? nullptr : galleries.c_str(), radius,
                            shrunken.empty() ? nullptr : shrunken.c_str(), &text);
  }

  if (status != ALC_OK) return fail_with(ctx, status);
  rc = write_output(out_path, text);
  alc_string_free(text);
  return rc;
}
