#include "alcove/gallery.hpp"

#include <algorithm>

namespace alcove {

namespace {

void check_step_index(const Gallery& g, int i) {
  if (i < 1 || i > g.num_steps())
    throw Error(ErrorCode::BadArgument,
                "step index " + std::to_string(i) + " out of range 1.." +
                    std::to_string(g.num_steps()));
}

}  // namespace

bool Gallery::is_unfolded() const {
  return std::all_of(crossed.begin(), crossed.end(), [](bool b) { return b; });
}

std::vector<int> Gallery::fold_indices() const {
  std::vector<int> out;
  for (int i = 0; i < num_steps(); ++i)
    if (!crossed[i]) out.push_back(i + 1);
  return out;
}

Gallery gallery_from_word(const Alcove& start, const std::vector<int>& letters) {
  Gallery g;
  g.start = start;
  g.letters = letters;
  g.crossed.assign(letters.size(), true);
  return g;
}

std::vector<Alcove> alcove_sequence(const AffineComplex& cx, const Gallery& g) {
  std::vector<Alcove> seq;
  seq.reserve(g.alcove_count());
  seq.push_back(g.start);
  for (int i = 0; i < g.num_steps(); ++i)
    seq.push_back(g.crossed[i] ? cx.multiply_letter(seq.back(), g.letters[i]) : seq.back());
  return seq;
}

Alcove end_alcove(const AffineComplex& cx, const Gallery& g) {
  Alcove cur = g.start;
  for (int i = 0; i < g.num_steps(); ++i)
    if (g.crossed[i]) cur = cx.multiply_letter(cur, g.letters[i]);
  return cur;
}

Hyperplane step_wall(const AffineComplex& cx, const Gallery& g, int i) {
  check_step_index(g, i);
  Alcove cur = g.start;
  for (int j = 0; j + 1 < i; ++j)
    if (g.crossed[j]) cur = cx.multiply_letter(cur, g.letters[j]);
  return cx.separating_wall(cur, cx.multiply_letter(cur, g.letters[i - 1]));
}

bool is_minimal(const AffineComplex& cx, const Gallery& g) {
  if (!g.is_unfolded()) return false;
  AffineElement rel = cx.multiply(cx.inverse(g.start), end_alcove(cx, g));
  return cx.ell(rel) == g.num_steps();
}

std::vector<std::pair<int, Hyperplane>> crossings(const AffineComplex& cx, const Gallery& g) {
  std::vector<std::pair<int, Hyperplane>> out;
  Alcove cur = g.start;
  for (int i = 0; i < g.num_steps(); ++i) {
    if (g.crossed[i]) {
      Alcove next = cx.multiply_letter(cur, g.letters[i]);
      out.emplace_back(i + 1, cx.separating_wall(cur, next));
      cur = next;
    }
  }
  return out;
}

Gallery fold_at(const Gallery& g, int i) {
  check_step_index(g, i);
  Gallery out = g;
  out.crossed[i - 1] = !out.crossed[i - 1];
  return out;
}

Gallery fold_set(const Gallery& g, const std::vector<int>& idxs) {
  Gallery out = g;
  for (int i : idxs) {
    check_step_index(g, i);
    out.crossed[i - 1] = false;
  }
  return out;
}

FoldingPattern pattern_of(const AffineComplex& cx, const Gallery& g) {
  FoldingPattern p;
  Alcove cur = g.start;
  for (int i = 0; i < g.num_steps(); ++i) {
    if (g.crossed[i]) {
      cur = cx.multiply_letter(cur, g.letters[i]);
    } else {
      p.roots.push_back(cx.separating_wall(cur, cx.multiply_letter(cur, g.letters[i])).root);
    }
  }
  return p;
}

Gallery concatenate(const AffineComplex& cx, const Gallery& g1, const Gallery& g2) {
  if (!(g2.start == cx.identity()))
    throw Error(ErrorCode::BadArgument, "second gallery must start at the fundamental alcove");
  Gallery out = g1;
  out.letters.insert(out.letters.end(), g2.letters.begin(), g2.letters.end());
  out.crossed.insert(out.crossed.end(), g2.crossed.begin(), g2.crossed.end());
  return out;
}

}  // namespace alcove
