#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "alcove/moment_graph.hpp"
#include "alcove/orientation.hpp"

namespace alcove {

// One fold subset of a base gallery: the folded steps (1-based), the folding
// pattern as positive-root class indices in fold order, positivity under the
// ambient orientation, and the end alcove (its spherical part is the end
// direction).
struct FoldingOutcome {
  std::vector<int> folds;
  std::vector<int> pattern;
  bool positively_folded = false;
  Alcove end;
};

struct FoldingReport {
  Gallery base;
  std::vector<FoldingOutcome> outcomes;             // 2^steps entries
  std::set<std::vector<int>> positive_patterns;     // realized by positive foldings
  std::vector<Alcove> positive_end_alcoves;         // sorted, unique
};

Gallery outcome_gallery(const FoldingReport& report, const FoldingOutcome& outcome);

// Applies every fold subset of the (unfolded) base gallery. Throws
// Error(Resource) when the gallery has more than `cap` steps.
FoldingReport enumerate_foldings(const AffineComplex& cx, const Gallery& base,
                                 const WeylChamberOrientation& o, size_t cap = 20);

// Streaming form: visit(folds, pattern, positive, end) per subset; with
// positive_only, subtrees behind a negative fold are skipped.
using FoldVisitor =
    std::function<void(const std::vector<int>&, const std::vector<int>&, bool, const Alcove&)>;
void scan_foldings(const AffineComplex& cx, const WeylChamberOrientation& o,
                   const Alcove& start, const std::vector<int>& letters, bool positive_only,
                   const FoldVisitor& visit);

struct VerificationResult {
  std::string theorem;
  std::string scope;
  unsigned long long checked = 0;
  unsigned long long counterexample_count = 0;
  std::vector<std::string> counterexamples;  // first few, for reporting
  std::vector<std::pair<std::string, std::string>> info;

  bool ok() const { return counterexample_count == 0; }
  void fail(const std::string& description);
};

// Theorem "positive folding patterns and the modified moment graph", checked
// by exhaustive folding over all alcoves with ell <= radius. Soundness: every
// positive pattern realized by a minimal gallery to x in C_v is a directed
// path label sequence from v in modified(w); checked over every reduced word
// when there are at most 200, else over the canonical one. Completeness: for
// alcoves in the l_p-shrunken chamber of C_v, every such sequence is realized
// by every enumerated word. Also certifies the fold-count bound |F| <= l(w0)
// and the spherical-direction law along the way.
VerificationResult check_pattern_theorem(const AffineComplex& cx, int w, long long radius);

// Minimality of a word gallery is equivalent to the per-root trichotomy:
// (1) <lambda, alpha> != 0 and all alpha-crossings in one direction;
// (2) <lambda, alpha> = 0, H_{alpha,0} does not separate c_f from the
//     direction chamber, no alpha-crossing;
// (3) <lambda, alpha> = 0, H_{alpha,0} separates them, exactly one crossing.
// Checked for every word over the affine letters up to the given length.
VerificationResult check_minimality_lemma(const AffineComplex& cx, int w, int max_word_length);

// Crossing directions of minimal galleries from c_f: a crossing of an
// alpha-wall is phi_w-positive iff the end chamber v has
// chamber_side(alpha, v) != chamber_side(alpha, w).
VerificationResult check_crossing_direction(const AffineComplex& cx, int w, long long radius);

// The corollary for translated starts: minimal galleries y c_f -> x c_f with
// x in the local chamber C_{mu,v} at mu = translation(y). Deterministically
// seeded random sample.
VerificationResult check_crossing_direction_translated(const AffineComplex& cx, int w,
                                                       long long radius, int samples,
                                                       unsigned seed = 20240901);

// Spherical direction of folded end alcoves equals the undirected-graph walk
// from the unfolded end direction. Holds for arbitrary fold subsets; the
// orientation only scopes the report.
VerificationResult check_spherical_direction(const AffineComplex& cx, int w, long long radius);

// Verifies the naive-subset proposition: every alcove of the region lying in
// the l_p-shrunken end chamber realizes every maximal pattern.
VerificationResult check_xset_proposition(const AffineComplex& cx, int w, long long radius);

// All alcoves of C_v with ell <= radius such that every maximal directed-path
// label sequence from v in modified(w) is realized by some minimal gallery.
std::vector<Alcove> x_set(const AffineComplex& cx, int w, int v, long long radius);

// l_p: the longest directed-path length from v in modified(w); alcoves of
// C_v at shrink level l_p lie in the X-set.
long long naive_subset_level(const WeylGroup& w0, int w, int v);

// End alcoves of all positively folded galleries with this type word from c_f.
std::vector<Alcove> shadow(const AffineComplex& cx, const WeylChamberOrientation& o,
                           const std::vector<int>& word, size_t cap = 20);

// True iff some minimal gallery to `target` admits a positive folding with
// exactly this pattern (given as positive-root class indices).
bool pattern_realizable(const AffineComplex& cx, int w, const Alcove& target,
                        const std::vector<int>& pattern);

}  // namespace alcove
