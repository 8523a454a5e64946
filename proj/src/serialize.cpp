#include "alcove/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace alcove {

namespace {

std::vector<int> scan_word(const std::string& text, int min_letter, int max_letter,
                           const std::string& what) {
  std::vector<int> letters;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != 's')
      throw Error(ErrorCode::Parse, "bad " + what + " '" + text + "' at position " +
                                        std::to_string(pos + 1) + " (expected 's<k>')");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && isdigit(text[pos])) ++pos;
    if (pos == start)
      throw Error(ErrorCode::Parse, "bad " + what + " '" + text + "' at position " +
                                        std::to_string(pos + 1) + " (missing index)");
    int letter = std::stoi(text.substr(start, pos - start));
    if (letter < min_letter || letter > max_letter)
      throw Error(ErrorCode::Parse, "generator s" + std::to_string(letter) + " out of range s" +
                                        std::to_string(min_letter) + "..s" +
                                        std::to_string(max_letter));
    letters.push_back(letter);
    skip();
  }
  return letters;
}

}  // namespace

std::vector<int> parse_affine_word(const std::string& text, int rank) {
  if (text == "e" || text.empty()) return {};
  return scan_word(text, 0, rank, "affine word");
}

std::vector<int> parse_spherical_word(const std::string& text, int rank) {
  if (text == "e" || text.empty()) return {};
  return scan_word(text, 1, rank, "word");
}

int parse_w0_element(const WeylGroup& w0, const std::string& text) {
  if (text == "w0") return w0.longest();
  return w0.element_from_word(parse_spherical_word(text, w0.roots().rank()));
}

std::vector<int> parse_fold_indices(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad fold index '" + tok + "'");
    }
  }
  return out;
}

std::string word_to_string(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out << " ";
    out << "s" << letters[i];
  }
  return out.str();
}

json root_to_json(const RootSystem& rs, const Root& r) {
  json coeffs = json::array();
  for (int i = 0; i < rs.rank(); ++i) coeffs.push_back(r.coeffs[i]);
  return json{{"coeffs", coeffs}, {"pretty", rs.pretty(r)}};
}

json alcove_to_json(const AffineComplex& cx, const Alcove& a) {
  json translation = json::array();
  for (int i = 0; i < cx.roots().rank(); ++i) translation.push_back(a.translation[i]);
  return json{{"translation", translation}, {"word", cx.weyl().word_string(a.spherical)}};
}

Alcove alcove_from_json(const AffineComplex& cx, const json& j) {
  Alcove a{};
  if (!j.contains("translation") || !j.contains("word"))
    throw Error(ErrorCode::Parse, "alcove JSON needs 'translation' and 'word'");
  const auto& tr = j.at("translation");
  if (!tr.is_array() || static_cast<int>(tr.size()) != cx.roots().rank())
    throw Error(ErrorCode::Parse, "alcove translation must have rank entries");
  for (int i = 0; i < cx.roots().rank(); ++i) a.translation[i] = tr.at(i).get<long long>();
  a.spherical = parse_w0_element(cx.weyl(), j.at("word").get<std::string>());
  return a;
}

json hyperplane_to_json(const RootSystem& rs, const Hyperplane& h) {
  json root = json::array();
  for (int i = 0; i < rs.rank(); ++i) root.push_back(h.root.coeffs[i]);
  return json{{"root", root}, {"level", h.level}};
}

json weyl_element_to_json(const WeylGroup& w0, int w) {
  json matrix = json::array();
  for (int i = 0; i < w0.roots().rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < w0.roots().rank(); ++j) row.push_back(w0.coweight_matrix(w)[i][j]);
    matrix.push_back(row);
  }
  return json{{"word", w0.word_string(w)}, {"length", w0.length(w)}, {"matrix", matrix}};
}

json root_system_to_json(const RootSystem& rs) {
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()[i][j]);
    cartan.push_back(row);
  }
  json roots = json::array();
  for (const Root& r : rs.positive_roots()) {
    json entry = root_to_json(rs, r);
    json coroot = json::array();
    Coeffs d = rs.coroot_of(r);
    for (int i = 0; i < rs.rank(); ++i) coroot.push_back(d[i]);
    entry["coroot"] = coroot;
    roots.push_back(entry);
  }
  return json{{"version", 1},
              {"type", rs.type_label()},
              {"rank", rs.rank()},
              {"coxeter_number", rs.coxeter_number()},
              {"cartan", cartan},
              {"positive_roots", roots},
              {"highest_root", root_to_json(rs, rs.highest_root())}};
}

namespace {

const char* flavor_name(GraphFlavor f) {
  switch (f) {
    case GraphFlavor::Plain: return "plain";
    case GraphFlavor::Modified: return "modified";
    case GraphFlavor::Undirected: return "undirected";
  }
  return "?";
}

}  // namespace

json moment_graph_to_json(const WeylGroup& w0, const MomentGraph& g) {
  json out;
  out["type"] = w0.roots().type_label();
  out["flavor"] = flavor_name(g.flavor);
  if (g.flavor == GraphFlavor::Modified)
    out["minimal_direction"] = w0.word_string(g.minimal_direction);
  json vertices = json::array();
  for (int w : w0.display_order()) vertices.push_back(weyl_element_to_json(w0, w));
  out["vertices"] = vertices;
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"tail", w0.word_string(e.tail)},
                         {"head", w0.word_string(e.head)},
                         {"label", root_to_json(w0.roots(), e.label)}});
  out["edges"] = edges;
  return out;
}

std::string moment_graph_to_dot(const WeylGroup& w0, const MomentGraph& g) {
  std::ostringstream out;
  bool directed = g.flavor != GraphFlavor::Undirected;
  std::string name = w0.roots().type_label() + "_" + flavor_name(g.flavor);
  if (g.flavor == GraphFlavor::Modified) {
    std::string dir = w0.word_string(g.minimal_direction);
    std::replace(dir.begin(), dir.end(), ' ', '_');
    name += "_" + dir;
  }
  out << (directed ? "digraph" : "graph") << " \"" << name << "\" {\n";
  for (int w : w0.display_order()) out << "  \"" << w0.word_string(w) << "\";\n";
  for (const auto& e : g.edges)
    out << "  \"" << w0.word_string(e.tail) << "\" " << (directed ? "->" : "--") << " \""
        << w0.word_string(e.head) << "\" [label=\"" << w0.roots().pretty(e.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

json gallery_report_to_json(const AffineComplex& cx, const WeylChamberOrientation& o,
                            const Gallery& g) {
  const WeylGroup& w0 = cx.weyl();
  json out;
  out["type"] = cx.roots().type_label();
  out["orientation"] = w0.word_string(o.direction);
  out["start"] = alcove_to_json(cx, g.start);
  json word = json::array();
  for (int l : g.letters) word.push_back("s" + std::to_string(l));
  out["word"] = word;
  out["folds"] = g.fold_indices();

  Gallery base = gallery_from_word(g.start, g.letters);
  out["word_is_reduced"] = is_minimal(cx, base);

  json steps = json::array();
  auto seq = alcove_sequence(cx, g);
  for (int i = 1; i <= g.num_steps(); ++i) {
    json step;
    step["type"] = "s" + std::to_string(g.letters[i - 1]);
    step["folded"] = !g.crossed[i - 1];
    step["wall"] = hyperplane_to_json(cx.roots(), step_wall(cx, g, i));
    step["positive"] = g.crossed[i - 1] ? crossing_is_positive(cx, o, g, i)
                                        : fold_is_positive(cx, o, g, i);
    step["to"] = alcove_to_json(cx, seq[i]);
    steps.push_back(step);
  }
  out["steps"] = steps;

  Alcove end = end_alcove(cx, g);
  out["end"] = alcove_to_json(cx, end);
  out["spherical_direction"] = w0.word_string(end.spherical);

  FoldingPattern pattern = pattern_of(cx, g);
  json pat = json::array();
  for (const Root& r : pattern.roots) pat.push_back(root_to_json(cx.roots(), r));
  out["pattern"] = pat;
  out["positively_folded"] = gallery_is_positively_folded(cx, o, g);

  // Undirected-walk prediction from the unfolded end direction.
  int start_dir = end_alcove(cx, base).spherical;
  MomentGraph un = undirected_moment_graph(w0);
  out["predicted_direction"] =
      w0.word_string(walk_undirected(w0, un, start_dir, pattern.roots));
  return out;
}

Gallery gallery_from_json(const AffineComplex& cx, const json& j) {
  Alcove start = cx.identity();
  if (j.contains("start")) start = alcove_from_json(cx, j.at("start"));
  if (!j.contains("word")) throw Error(ErrorCode::Parse, "gallery JSON needs 'word'");
  std::vector<int> letters;
  for (const auto& entry : j.at("word")) {
    std::string s = entry.get<std::string>();
    auto parsed = parse_affine_word(s, cx.roots().rank());
    if (parsed.size() != 1)
      throw Error(ErrorCode::Parse, "bad word letter '" + s + "'");
    letters.push_back(parsed[0]);
  }
  Gallery g = gallery_from_word(start, letters);
  if (j.contains("folds"))
    for (const auto& f : j.at("folds")) g = fold_at(g, f.get<int>());
  return g;
}

json verification_to_json(const VerificationResult& r) {
  json info = json::object();
  for (const auto& [k, v] : r.info) info[k] = v;
  return json{{"theorem", r.theorem},
              {"scope", r.scope},
              {"checked", r.checked},
              {"counterexample_count", r.counterexample_count},
              {"counterexamples", r.counterexamples},
              {"info", info}};
}

json patterns_to_json(const WeylGroup& w0, const MomentGraph& graph, int chamber) {
  auto sequences = directed_path_labels_from(w0, graph, chamber);
  size_t max_len = 0;
  for (const auto& s : sequences) max_len = std::max(max_len, s.size());
  std::vector<json> by_length(max_len + 1, json::array());
  for (const auto& s : sequences) {
    json labels = json::array();
    for (const Root& r : s) labels.push_back(w0.roots().pretty(r));
    by_length[s.size()].push_back(labels);
  }
  json grouped = json::array();
  for (size_t len = 0; len <= max_len; ++len)
    grouped.push_back(json{{"length", len}, {"sequences", by_length[len]}});
  return json{{"type", w0.roots().type_label()},
              {"flavor", flavor_name(graph.flavor)},
              {"chamber", w0.word_string(chamber)},
              {"count", sequences.size()},
              {"max_length", max_len},
              {"by_length", grouped}};
}

}  // namespace alcove
