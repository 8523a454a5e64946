#include "alcove/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace alcove {

namespace {

std::string word_text(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out << " ";
    out << "s" << letters[i];
  }
  return out.str();
}

std::string alcove_text(const AffineComplex& cx, const Alcove& a) {
  std::ostringstream out;
  out << "t^[";
  for (int i = 0; i < cx.roots().rank(); ++i) {
    if (i) out << ",";
    out << a.translation[i];
  }
  out << "] " << cx.weyl().word_string(a.spherical);
  return out.str();
}

std::string pattern_text(const RootSystem& rs, const std::vector<int>& pattern) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (i) out << ", ";
    out << rs.pretty(rs.positive_roots()[pattern[i]]);
  }
  out << ")";
  return out.str();
}

// Panel data of letter l at alcove (lambda, w): the wall class is the class
// of w(alpha_l), and the alcove's side of that wall is sign(w(alpha_l)) times
// its side of the fundamental wall of l (the level terms cancel). This keeps
// the subset scan free of point arithmetic.
struct PanelTables {
  std::vector<int> cls0;   // per letter, class of the fundamental wall
  std::vector<int> side0;  // per letter, side of c_f

  explicit PanelTables(const AffineComplex& cx) {
    const RootSystem& rs = cx.roots();
    cls0.resize(cx.num_letters());
    side0.resize(cx.num_letters());
    cls0[0] = rs.class_index(rs.highest_root());
    side0[0] = -1;  // c_f lies below H_{theta,1}
    for (int l = 1; l <= rs.rank(); ++l) {
      cls0[l] = rs.class_index(rs.simple_root(l));
      side0[l] = +1;
    }
  }

  // (wall class, side of the base alcove) for letter l at spherical part w.
  std::pair<int, int> panel(const WeylGroup& w0, int w, int l) const {
    const auto& [sign, cls] = w0.root_action(w, cls0[l]);
    return {cls, sign * side0[l]};
  }
};

struct FoldScanner {
  const AffineComplex& cx;
  const WeylGroup& w0;
  int direction;
  const std::vector<int>& letters;
  bool positive_only;
  const FoldVisitor& visit;
  PanelTables tables;

  std::vector<int> folds;
  std::vector<int> pattern;

  FoldScanner(const AffineComplex& cx, const WeylChamberOrientation& o,
              const std::vector<int>& letters, bool positive_only, const FoldVisitor& visit)
      : cx(cx), w0(cx.weyl()), direction(o.direction), letters(letters),
        positive_only(positive_only), visit(visit), tables(cx) {}

  void run(int i, const Alcove& c, bool positive) {
    if (i == static_cast<int>(letters.size())) {
      visit(folds, pattern, positive, c);
      return;
    }
    run(i + 1, cx.multiply_letter(c, letters[i]), positive);  // crossing branch first
    auto [cls, side] = tables.panel(w0, c.spherical, letters[i]);
    bool fold_positive = side == w0.chamber_side_class(cls, direction);
    if (positive_only && !fold_positive) return;
    folds.push_back(i + 1);
    pattern.push_back(cls);
    run(i + 1, c, positive && fold_positive);
    folds.pop_back();
    pattern.pop_back();
  }
};

// Lexicographic enumeration of the reduced words of g; stops early when the
// callback returns true.
bool for_each_reduced_word(const AffineComplex& cx, const AffineElement& g, long long len,
                           std::vector<int>& prefix,
                           const std::function<bool(const std::vector<int>&)>& callback) {
  if (len == 0) return callback(prefix);
  for (int letter = 0; letter < cx.num_letters(); ++letter) {
    AffineElement next = cx.multiply(cx.generator(letter), g);
    long long nl = cx.ell(next);
    if (nl < len) {
      prefix.push_back(letter);
      if (for_each_reduced_word(cx, next, nl, prefix, callback)) {
        prefix.pop_back();
        return true;
      }
      prefix.pop_back();
    }
  }
  return false;
}

// Can the pattern suffix P[t..] be realized with positive folds along the
// remaining steps, starting from alcove c?
bool realize_from(const AffineComplex& cx, const PanelTables& tables, int direction,
                  const std::vector<int>& letters, const std::vector<int>& pattern, size_t i,
                  size_t t, const Alcove& c) {
  if (t == pattern.size()) return true;
  if (letters.size() - i < pattern.size() - t) return false;
  if (realize_from(cx, tables, direction, letters, pattern, i + 1, t,
                   cx.multiply_letter(c, letters[i])))
    return true;
  auto [cls, side] = tables.panel(cx.weyl(), c.spherical, letters[i]);
  if (cls == pattern[t] && side == cx.weyl().chamber_side_class(cls, direction))
    return realize_from(cx, tables, direction, letters, pattern, i + 1, t + 1, c);
  return false;
}

// Directed-path data of modified(w), computed per start chamber.
struct ChamberPaths {
  std::set<std::vector<int>> allowed;
  std::vector<std::vector<int>> maximal;
  long long lp = 0;
};

class PatternTables {
 public:
  PatternTables(const WeylGroup& w0, int w) : w0_(w0), graph_(modified_moment_graph(w0, w)) {}

  const ChamberPaths& at(int v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    ChamberPaths cp;
    auto sequences = directed_path_labels_from(w0_, graph_, v);
    std::vector<std::vector<int>> as_classes;
    for (const auto& seq : sequences) {
      std::vector<int> cls;
      for (const Root& r : seq) cls.push_back(w0_.roots().class_index(r));
      cp.lp = std::max(cp.lp, static_cast<long long>(cls.size()));
      cp.allowed.insert(cls);
      as_classes.push_back(std::move(cls));
    }
    // Maximal = not a proper prefix of another sequence.
    for (const auto& cls : as_classes) {
      bool extendable = false;
      for (size_t c = 0; c < w0_.roots().positive_roots().size() && !extendable; ++c) {
        std::vector<int> ext = cls;
        ext.push_back(static_cast<int>(c));
        extendable = cp.allowed.count(ext) > 0;
      }
      if (!extendable) cp.maximal.push_back(cls);
    }
    return cache_.emplace(v, std::move(cp)).first->second;
  }

  const MomentGraph& graph() const { return graph_; }

 private:
  const WeylGroup& w0_;
  MomentGraph graph_;
  std::map<int, ChamberPaths> cache_;
};

std::vector<std::vector<int>> words_for_alcove(const AffineComplex& cx, const Alcove& a,
                                               size_t cap = 200) {
  if (cx.reduced_word_count(a, cap + 1) <= cap) return cx.reduced_words(a, cap + 1);
  return {cx.canonical_word(a)};
}

long long shrunken_depth(const AffineComplex& cx, const Alcove& a, int v) {
  // Largest k with a in the k-shrunken chamber of its own chamber v.
  long long depth = -1;
  for (int i = 1; i <= cx.roots().rank(); ++i) {
    Root va = cx.weyl().apply(v, cx.roots().simple_root(i));
    long long k = floor_div(cx.pair_numerator(va, a), cx.roots().coxeter_number());
    depth = depth < 0 ? k : std::min(depth, k);
  }
  return depth < 0 ? 0 : depth;
}

}  // namespace

void VerificationResult::fail(const std::string& description) {
  ++counterexample_count;
  if (counterexamples.size() < 25) counterexamples.push_back(description);
}

Gallery outcome_gallery(const FoldingReport& report, const FoldingOutcome& outcome) {
  return fold_set(report.base, outcome.folds);
}

void scan_foldings(const AffineComplex& cx, const WeylChamberOrientation& o,
                   const Alcove& start, const std::vector<int>& letters, bool positive_only,
                   const FoldVisitor& visit) {
  FoldScanner scanner(cx, o, letters, positive_only, visit);
  scanner.run(0, start, true);
}

FoldingReport enumerate_foldings(const AffineComplex& cx, const Gallery& base,
                                 const WeylChamberOrientation& o, size_t cap) {
  if (base.letters.size() > cap)
    throw Error(ErrorCode::Resource,
                "gallery has " + std::to_string(base.letters.size()) +
                    " steps; the folding-enumeration cap is " + std::to_string(cap) +
                    " (choose a smaller region)");
  FoldingReport report;
  report.base = base;
  scan_foldings(cx, o, base.start, base.letters, false,
                [&](const std::vector<int>& folds, const std::vector<int>& pattern,
                    bool positive, const Alcove& end) {
                  report.outcomes.push_back({folds, pattern, positive, end});
                  if (positive) {
                    report.positive_patterns.insert(pattern);
                    report.positive_end_alcoves.push_back(end);
                  }
                });
  std::sort(report.positive_end_alcoves.begin(), report.positive_end_alcoves.end());
  report.positive_end_alcoves.erase(
      std::unique(report.positive_end_alcoves.begin(), report.positive_end_alcoves.end()),
      report.positive_end_alcoves.end());
  return report;
}

VerificationResult check_pattern_theorem(const AffineComplex& cx, int w, long long radius) {
  const WeylGroup& w0 = cx.weyl();
  const RootSystem& rs = cx.roots();
  WeylChamberOrientation o{w};
  PatternTables tables(w0, w);

  VerificationResult result;
  result.theorem = "patterns";
  result.scope = rs.type_label() + ", orientation " + w0.word_string(w) + ", radius " +
                 std::to_string(radius);

  long long max_folds = 0;
  std::map<int, long long> max_incomplete_depth;  // per chamber, canonical word

  MomentGraph undirected = undirected_moment_graph(w0);

  for (const Alcove& a : cx.ball(radius)) {
    int v = cx.chamber_of(a);
    const ChamberPaths& cp = tables.at(v);
    bool in_naive = cx.in_shrunken_chamber(a, v, cp.lp);
    auto words = words_for_alcove(cx, a);
    std::set<std::vector<int>> realized;  // union over the enumerated words
    for (const auto& word : words) {
      scan_foldings(cx, o, cx.identity(), word, true,
                    [&](const std::vector<int>&, const std::vector<int>& pattern,
                        bool, const Alcove& end) {
                      ++result.checked;
                      if (!cp.allowed.count(pattern))
                        result.fail("soundness: pattern " + pattern_text(rs, pattern) +
                                    " realized for " + alcove_text(cx, a) + " via word " +
                                    word_text(word) + " but is no directed path from " +
                                    w0.word_string(v));
                      std::vector<Root> proots;
                      for (int cls : pattern) proots.push_back(rs.positive_roots()[cls]);
                      if (walk_undirected(w0, undirected, a.spherical, proots) != end.spherical)
                        result.fail("direction: fold of " + alcove_text(cx, a) +
                                    " disagrees with the undirected walk");
                      realized.insert(pattern);
                      max_folds = std::max(max_folds,
                                           static_cast<long long>(pattern.size()));
                    });
    }
    // Completeness is an existence statement: some minimal gallery realizes
    // each sequence. Individual reduced words can miss patterns at any depth,
    // so fall back to the full search before declaring a counterexample.
    bool union_complete = true;
    for (const auto& m : cp.maximal) {
      if (realized.count(m)) continue;
      union_complete = false;
      if (in_naive && !pattern_realizable(cx, w, a, m))
        result.fail("completeness: pattern " + pattern_text(rs, m) +
                    " not realized by any minimal gallery to " + alcove_text(cx, a) +
                    " despite shrunken-chamber depth " + std::to_string(cp.lp));
    }
    if (!union_complete) {
      long long d = shrunken_depth(cx, a, v);
      auto it = max_incomplete_depth.find(v);
      if (it == max_incomplete_depth.end())
        max_incomplete_depth[v] = d;
      else
        it->second = std::max(it->second, d);
    }
  }

  result.info.emplace_back("max_positive_folds", std::to_string(max_folds));
  result.info.emplace_back("longest_element_length",
                           std::to_string(w0.length(w0.longest())));
  for (int v = 0; v < w0.size(); ++v) {
    auto it = max_incomplete_depth.find(v);
    long long depth = it == max_incomplete_depth.end() ? 0 : it->second + 1;
    result.info.emplace_back("empirical_complete_depth[" + w0.word_string(v) + "]",
                             std::to_string(depth));
  }
  return result;
}

VerificationResult check_minimality_lemma(const AffineComplex& cx, int w,
                                          int max_word_length) {
  const WeylGroup& w0 = cx.weyl();
  const RootSystem& rs = cx.roots();
  WeylChamberOrientation o{w};

  VerificationResult result;
  result.theorem = "minimality";
  result.scope = rs.type_label() + ", orientation " + w0.word_string(w) +
                 ", word length <= " + std::to_string(max_word_length);

  const int letters = cx.num_letters();
  const auto& pos = rs.positive_roots();

  std::vector<int> word;
  auto test_word = [&]() {
    ++result.checked;
    Gallery g = gallery_from_word(cx.identity(), word);
    Alcove end = end_alcove(cx, g);
    bool minimal = is_minimal(cx, g);

    // Crossing signs per parallelism class.
    std::vector<std::vector<int>> signs(pos.size());
    Alcove cur = g.start;
    for (int i = 0; i < g.num_steps(); ++i) {
      Alcove next = cx.multiply_letter(cur, g.letters[i]);
      Hyperplane wall = cx.separating_wall(cur, next);
      signs[rs.class_index(wall.root)].push_back(orientation_sign(cx, o, wall, cur));
      cur = next;
    }

    bool trichotomy = true;
    for (size_t c = 0; c < pos.size() && trichotomy; ++c) {
      long long lam = rs.pair_lattice(pos[c], end.translation);
      bool separated = w0.chamber_side(pos[c], end.spherical) < 0;
      const auto& s = signs[c];
      // Condition (1) holds vacuously when no wall of the class is crossed;
      // a nonzero lattice pairing does not force a crossing (t^{theta^vee} w0
      // stays inside the 0-strip of the simple classes).
      bool cond1 = lam != 0 &&
                   (std::all_of(s.begin(), s.end(), [](int x) { return x > 0; }) ||
                    std::all_of(s.begin(), s.end(), [](int x) { return x < 0; }));
      bool cond2 = lam == 0 && !separated && s.empty();
      bool cond3 = lam == 0 && separated && s.size() == 1;
      trichotomy = cond1 || cond2 || cond3;
    }
    if (minimal != trichotomy)
      result.fail("word " + word_text(word) + ": is_minimal=" +
                  (minimal ? "true" : "false") + " but trichotomy=" +
                  (trichotomy ? "true" : "false"));
  };

  auto sweep = [&](auto&& self, int remaining) -> void {
    test_word();
    if (remaining == 0) return;
    for (int l = 0; l < letters; ++l) {
      word.push_back(l);
      self(self, remaining - 1);
      word.pop_back();
    }
  };
  sweep(sweep, max_word_length);
  return result;
}

VerificationResult check_crossing_direction(const AffineComplex& cx, int w,
                                            long long radius) {
  const WeylGroup& w0 = cx.weyl();
  const RootSystem& rs = cx.roots();

  VerificationResult result;
  result.theorem = "crossings";
  result.scope = rs.type_label() + ", orientation " + w0.word_string(w) + ", radius " +
                 std::to_string(radius);

  PanelTables tables(cx);
  for (const Alcove& a : cx.ball(radius)) {
    int v = cx.chamber_of(a);
    for (const auto& word : words_for_alcove(cx, a)) {
      Alcove cur = cx.identity();
      for (size_t i = 0; i < word.size(); ++i) {
        ++result.checked;
        auto [cls, side] = tables.panel(w0, cur.spherical, word[i]);
        bool positive = side == w0.chamber_side_class(cls, w);
        bool expected = w0.chamber_side_class(cls, v) != w0.chamber_side_class(cls, w);
        if (positive != expected)
          result.fail("crossing of " + rs.pretty(rs.positive_roots()[cls]) +
                      "-wall at step " + std::to_string(i + 1) + " of word " +
                      word_text(word) + " contradicts the chamber-side rule for v=" +
                      w0.word_string(v));
        cur = cx.multiply_letter(cur, word[i]);
      }
    }
  }
  return result;
}

VerificationResult check_crossing_direction_translated(const AffineComplex& cx, int w,
                                                       long long radius, int samples,
                                                       unsigned seed) {
  const WeylGroup& w0 = cx.weyl();
  const RootSystem& rs = cx.roots();
  WeylChamberOrientation o{w};

  VerificationResult result;
  result.theorem = "crossings-translated";
  result.scope = rs.type_label() + ", orientation " + w0.word_string(w) + ", radius " +
                 std::to_string(radius) + ", " + std::to_string(samples) + " samples";

  auto starts = cx.ball(3);
  auto targets = cx.ball(radius);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick_start(0, starts.size() - 1);
  std::uniform_int_distribution<size_t> pick_target(0, targets.size() - 1);

  for (int n = 0; n < samples; ++n) {
    Alcove y = starts[pick_start(rng)];
    AffineElement rel = targets[pick_target(rng)];
    if (rel == cx.identity()) {
      --n;
      continue;
    }
    Alcove x = cx.multiply(y, rel);
    int v = cx.local_chamber_of(x, y.translation);
    Gallery g = gallery_from_word(y, cx.canonical_word(rel));
    for (const auto& [step, wall] : crossings(cx, g)) {
      ++result.checked;
      bool positive = crossing_is_positive(cx, o, g, step);
      bool expected = w0.chamber_side(wall.root, v) != w0.chamber_side(wall.root, w);
      if (positive != expected)
        result.fail("translated start " + alcove_text(cx, y) + ", crossing of " +
                    rs.pretty(wall.root) + "-wall contradicts the rule for v=" +
                    w0.word_string(v));
    }
  }
  return result;
}

VerificationResult check_spherical_direction(const AffineComplex& cx, int w,
                                             long long radius) {
  const WeylGroup& w0 = cx.weyl();
  WeylChamberOrientation o{w};

  VerificationResult result;
  result.theorem = "direction";
  result.scope = cx.roots().type_label() + ", radius " + std::to_string(radius) +
                 " (orientation-independent)";

  MomentGraph undirected = undirected_moment_graph(w0);

  for (const Alcove& a : cx.ball(radius)) {
    auto word = cx.canonical_word(a);
    unsigned long long outcomes = 0;
    scan_foldings(cx, o, cx.identity(), word, false,
                  [&](const std::vector<int>&, const std::vector<int>& pattern, bool,
                      const Alcove& end) {
                    ++outcomes;
                    ++result.checked;
                    std::vector<Root> proots;
                    for (int cls : pattern)
                      proots.push_back(cx.roots().positive_roots()[cls]);
                    int predicted = walk_undirected(w0, undirected, a.spherical, proots);
                    if (predicted != end.spherical)
                      result.fail("fold of " + alcove_text(cx, a) + " with pattern " +
                                  pattern_text(cx.roots(), pattern) + " ends in direction " +
                                  w0.word_string(end.spherical) + ", walk predicts " +
                                  w0.word_string(predicted));
                  });
    if (outcomes != (1ull << word.size()))
      result.fail("subset count mismatch for " + alcove_text(cx, a));
  }
  return result;
}

VerificationResult check_xset_proposition(const AffineComplex& cx, int w, long long radius) {
  const WeylGroup& w0 = cx.weyl();
  VerificationResult result;
  result.theorem = "xset";
  result.scope = cx.roots().type_label() + ", orientation " + w0.word_string(w) +
                 ", radius " + std::to_string(radius);

  PatternTables tables(w0, w);
  for (const Alcove& a : cx.ball(radius)) {
    int v = cx.chamber_of(a);
    const ChamberPaths& cp = tables.at(v);
    if (!cx.in_shrunken_chamber(a, v, cp.lp)) continue;
    for (const auto& m : cp.maximal) {
      ++result.checked;
      if (!pattern_realizable(cx, w, a, m))
        result.fail("alcove " + alcove_text(cx, a) + " at naive depth misses pattern " +
                    pattern_text(cx.roots(), m));
    }
  }
  return result;
}

bool pattern_realizable(const AffineComplex& cx, int w, const Alcove& target,
                        const std::vector<int>& pattern) {
  PanelTables tables(cx);
  std::vector<int> prefix;
  return for_each_reduced_word(
      cx, target, cx.ell(target), prefix, [&](const std::vector<int>& word) {
        return realize_from(cx, tables, w, word, pattern, 0, 0, cx.identity());
      });
}

std::vector<Alcove> x_set(const AffineComplex& cx, int w, int v, long long radius) {
  PatternTables tables(cx.weyl(), w);
  const ChamberPaths& cp = tables.at(v);
  std::vector<Alcove> out;
  for (const Alcove& a : cx.ball(radius)) {
    if (cx.chamber_of(a) != v) continue;
    bool all = std::all_of(cp.maximal.begin(), cp.maximal.end(), [&](const auto& m) {
      return pattern_realizable(cx, w, a, m);
    });
    if (all) out.push_back(a);
  }
  return out;
}

long long naive_subset_level(const WeylGroup& w0, int w, int v) {
  return longest_path_from(w0, modified_moment_graph(w0, w), v);
}

std::vector<Alcove> shadow(const AffineComplex& cx, const WeylChamberOrientation& o,
                           const std::vector<int>& word, size_t cap) {
  if (word.size() > cap)
    throw Error(ErrorCode::Resource, "word has " + std::to_string(word.size()) +
                                         " letters; the folding cap is " +
                                         std::to_string(cap));
  std::vector<Alcove> out;
  scan_foldings(cx, o, cx.identity(), word, true,
                [&](const std::vector<int>&, const std::vector<int>&, bool,
                    const Alcove& end) { out.push_back(end); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace alcove
