#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alcove/moment_graph.hpp"
#include "alcove/oracle.hpp"

namespace alcove {

using json = nlohmann::ordered_json;

// Word parsing. Accepted forms: "e", "s1 s2", "s1s2", "s1,s2"; the spherical
// parser also accepts "w0" for the longest element.
std::vector<int> parse_affine_word(const std::string& text, int rank);
std::vector<int> parse_spherical_word(const std::string& text, int rank);
int parse_w0_element(const WeylGroup& w0, const std::string& text);
// "3,9" -> {3, 9}; 1-based panel indices.
std::vector<int> parse_fold_indices(const std::string& text);

json root_to_json(const RootSystem& rs, const Root& r);
json alcove_to_json(const AffineComplex& cx, const Alcove& a);
Alcove alcove_from_json(const AffineComplex& cx, const json& j);
json hyperplane_to_json(const RootSystem& rs, const Hyperplane& h);
json weyl_element_to_json(const WeylGroup& w0, int w);

// Versioned root-system table: type label, Cartan matrix, positive roots
// with coroots, highest root.
json root_system_to_json(const RootSystem& rs);

json moment_graph_to_json(const WeylGroup& w0, const MomentGraph& g);
std::string moment_graph_to_dot(const WeylGroup& w0, const MomentGraph& g);

// Full gallery report: start, word, folds, per-step walls and positivity,
// pattern, end alcove, spherical direction and its undirected-walk prediction.
json gallery_report_to_json(const AffineComplex& cx, const WeylChamberOrientation& o,
                            const Gallery& g);
// Re-parse from the report schema ("start", "word", "folds"); extra fields
// are ignored, so reports round-trip.
Gallery gallery_from_json(const AffineComplex& cx, const json& j);

json verification_to_json(const VerificationResult& r);

json patterns_to_json(const WeylGroup& w0, const MomentGraph& graph, int chamber);

std::string word_to_string(const std::vector<int>& letters);

}  // namespace alcove
