#include "alcove/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace alcove {

namespace {

struct Vec2 {
  double x = 0, y = 0;
};

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Euclidean embedding of the coweight coordinate plane.
struct Embedding {
  Vec2 alpha[2];    // simple roots
  Vec2 coweight[2];  // fundamental coweights: 2 (alpha_i, coweight[j]) / (alpha_i, alpha_i) = delta_ij

  explicit Embedding(const RootSystem& rs) {
    double angle, ratio;
    if (rs.type_label() == "A2") {
      angle = 2.0 * M_PI / 3.0;
      ratio = 1.0;
    } else if (rs.type_label() == "B2") {
      angle = 3.0 * M_PI / 4.0;
      ratio = std::sqrt(2.0);
    } else if (rs.type_label() == "G2") {
      angle = 5.0 * M_PI / 6.0;
      ratio = std::sqrt(3.0);
    } else {
      throw Error(ErrorCode::Unsupported,
                  "rendering supports rank-2 types only; got " + rs.type_label());
    }
    alpha[0] = {1.0, 0.0};
    alpha[1] = {ratio * std::cos(angle), ratio * std::sin(angle)};
    // Solve 2 (alpha_i, c_j) / (alpha_i, alpha_i) = delta_ij for the coweights.
    for (int j = 0; j < 2; ++j) {
      double a = 2 * alpha[0].x / dot(alpha[0], alpha[0]);
      double b = 2 * alpha[0].y / dot(alpha[0], alpha[0]);
      double c = 2 * alpha[1].x / dot(alpha[1], alpha[1]);
      double d = 2 * alpha[1].y / dot(alpha[1], alpha[1]);
      double det = a * d - b * c;
      double r0 = j == 0 ? 1.0 : 0.0;
      double r1 = j == 1 ? 1.0 : 0.0;
      coweight[j] = {(r0 * d - r1 * b) / det, (a * r1 - c * r0) / det};
    }
  }

  Vec2 map(const std::array<Rational, kMaxRank>& coords) const {
    Vec2 out{};
    for (int i = 0; i < 2; ++i)
      out = out + boost::rational_cast<double>(coords[i]) * coweight[i];
    return out;
  }

  // The root's Euclidean vector; pair(beta, .) = k is the line through
  // (k/2) beta_E with direction perpendicular to beta_E.
  Vec2 root_vec(const Root& r) const {
    Vec2 out{};
    for (int i = 0; i < 2; ++i) out = out + static_cast<double>(r.coeffs[i]) * alpha[i];
    return out;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v + 0.0);  // avoid -0.0000
  return buf;
}

const char* kChamberFill[] = {"#f4f7fb", "#fdf3e7", "#eef8ee", "#f9eef5", "#eff4f9", "#fbf7e9",
                              "#f2eff8", "#f7f1ec", "#edf6f4", "#f8f0f0", "#f1f3ea", "#eef1f7"};
const char* kGalleryColor[] = {"#555555", "#1c7c54", "#c2571a", "#7c1c54", "#1a57c2", "#b89b1e"};

// Rational vertices of an alcove: images of the fundamental vertices
// 0, coweight_1 / c_1, ..., coweight_n / c_n (theta = sum c_i alpha_i).
std::vector<std::array<Rational, kMaxRank>> alcove_vertices(const AffineComplex& cx,
                                                            const Alcove& a) {
  const RootSystem& rs = cx.roots();
  const int n = rs.rank();
  std::vector<std::array<Rational, kMaxRank>> fundamental;
  fundamental.push_back({});
  for (int i = 0; i < n; ++i) {
    std::array<Rational, kMaxRank> v{};
    v[i] = Rational(1, rs.highest_root().coeffs[i]);
    fundamental.push_back(v);
  }
  const IntMat& m = cx.weyl().coweight_matrix(a.spherical);
  Coeffs shift = rs.coweight_of_coroot(a.translation);
  std::vector<std::array<Rational, kMaxRank>> out;
  for (const auto& v : fundamental) {
    std::array<Rational, kMaxRank> image{};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) image[i] += Rational(m[i][j]) * v[j];
      image[i] += Rational(shift[i]);
    }
    out.push_back(image);
  }
  return out;
}

}  // namespace

std::string render_svg(const AffineComplex& cx, const RenderOptions& options) {
  const RootSystem& rs = cx.roots();
  if (rs.rank() != 2)
    throw Error(ErrorCode::Unsupported,
                "rendering supports rank-2 types only; got " + rs.type_label());
  Embedding em(rs);
  const long long R = std::max<long long>(1, options.radius);
  const long long h = rs.coxeter_number();

  // Window: alcoves with |pair(beta, pt)| <= R + 1 for every positive root.
  std::vector<Alcove> window;
  {
    std::set<Alcove> seen;
    std::vector<Alcove> queue{cx.identity()};
    seen.insert(queue[0]);
    auto inside = [&](const Alcove& a) {
      for (const Root& beta : rs.positive_roots())
        if (std::llabs(cx.pair_numerator(beta, a)) > (R + 1) * h) return false;
      return true;
    };
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int l = 0; l < cx.num_letters(); ++l) {
        Alcove next = cx.multiply_letter(queue[head], l);
        if (!inside(next) || !seen.insert(next).second) continue;
        queue.push_back(next);
      }
    }
    window.assign(seen.begin(), seen.end());
  }

  double extent = 0;
  for (const Alcove& a : window)
    for (const auto& v : alcove_vertices(cx, a)) {
      Vec2 p = em.map(v);
      extent = std::max({extent, std::fabs(p.x), std::fabs(p.y)});
    }
  extent += 0.4;
  const double scale = 60.0;
  const double size = 2 * extent * scale;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
      << fmt(size) << "\" viewBox=\"" << fmt(-extent) << " " << fmt(-extent) << " "
      << fmt(2 * extent) << " " << fmt(2 * extent) << "\">\n";
  svg << "<g transform=\"scale(1,-1)\" font-family=\"sans-serif\">\n";

  // Alcove polygons, shaded by chamber.
  std::map<int, int> chamber_palette;
  for (int i = 0; i < cx.weyl().size(); ++i)
    chamber_palette[cx.weyl().display_order()[i]] = i % 12;
  for (const Alcove& a : window) {
    svg << "<polygon points=\"";
    bool first = true;
    for (const auto& v : alcove_vertices(cx, a)) {
      Vec2 p = em.map(v);
      if (!first) svg << " ";
      svg << fmt(p.x) << "," << fmt(p.y);
      first = false;
    }
    svg << "\" fill=\"" << kChamberFill[chamber_palette[cx.chamber_of(a)]]
        << "\" stroke=\"none\"/>\n";
  }

  // Shrunken-chamber overlay.
  if (options.shrunken) {
    auto [v, k] = *options.shrunken;
    const IntMat& m = cx.weyl().coweight_matrix(v);
    Coeffs ones{1, 1, 0};
    Coeffs apexc = mat_apply(m, ones);  // v applied to the coweight sum
    Vec2 dir[2];
    for (int i = 0; i < 2; ++i) {
      std::array<Rational, kMaxRank> col{};
      for (int j = 0; j < 2; ++j) col[j] = Rational(m[j][i]);
      dir[i] = em.map(col);
    }
    std::array<Rational, kMaxRank> apex_coords{};
    for (int j = 0; j < 2; ++j) apex_coords[j] = Rational(k * apexc[j]);
    Vec2 apex = em.map(apex_coords);
    double T = 6.0 * extent;
    Vec2 p1 = apex + T * dir[0];
    Vec2 p2 = apex + T * dir[0] + T * dir[1];
    Vec2 p3 = apex + T * dir[1];
    svg << "<polygon points=\"" << fmt(apex.x) << "," << fmt(apex.y) << " " << fmt(p1.x) << ","
        << fmt(p1.y) << " " << fmt(p2.x) << "," << fmt(p2.y) << " " << fmt(p3.x) << ","
        << fmt(p3.y) << "\" fill=\"#2e8b57\" fill-opacity=\"0.18\" stroke=\"none\"/>\n";
  }

  // Walls, one line per (class, level) meeting the window.
  for (const Root& beta : rs.positive_roots()) {
    Vec2 b = em.root_vec(beta);
    Vec2 unit = (1.0 / std::sqrt(dot(b, b))) * b;
    Vec2 tangent{-unit.y, unit.x};
    for (long long k = -(R + 1); k <= R + 1; ++k) {
      Vec2 base = (0.5 * k) * b;
      double T = 3.0 * extent;
      Vec2 p = base - T * tangent, q = base + T * tangent;
      svg << "<line x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y) << "\" x2=\"" << fmt(q.x)
          << "\" y2=\"" << fmt(q.y) << "\" stroke=\"#8899aa\" stroke-width=\"0.012\"/>\n";
    }
  }

  // Orientation decorations: one +/- pair per wall class, at the rim of the
  // level-0 wall, plus on the positive side of the class.
  if (options.orientation) {
    for (const Root& beta : rs.positive_roots()) {
      Vec2 b = em.root_vec(beta);
      Vec2 unit = (1.0 / std::sqrt(dot(b, b))) * b;
      Vec2 tangent{-unit.y, unit.x};
      int side = cx.weyl().chamber_side(beta, options.orientation->direction);
      Vec2 spot = (0.9 * extent) * tangent;
      Vec2 plus = spot + (0.08 * side) * unit;
      Vec2 minus = spot - (0.08 * side) * unit;
      svg << "<text x=\"" << fmt(plus.x) << "\" y=\"" << fmt(-plus.y)
          << "\" transform=\"scale(1,-1)\" font-size=\"0.12\" fill=\"#223\">+</text>\n";
      svg << "<text x=\"" << fmt(minus.x) << "\" y=\"" << fmt(-minus.y)
          << "\" transform=\"scale(1,-1)\" font-size=\"0.12\" fill=\"#223\">-</text>\n";
    }
  }

  // Galleries: polylines through alcove interior points, folds marked at the
  // panel midpoints.
  int color = 0;
  for (const Gallery& g : options.galleries) {
    const char* stroke = kGalleryColor[color++ % 6];
    auto seq = alcove_sequence(cx, g);
    svg << "<polyline points=\"";
    for (size_t i = 0; i < seq.size(); ++i) {
      Vec2 p = em.map(cx.interior_point(seq[i]).coords);
      if (i) svg << " ";
      svg << fmt(p.x) << "," << fmt(p.y);
    }
    svg << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"0.03\" stroke-linejoin=\"round\"/>\n";
    for (int i = 1; i <= g.num_steps(); ++i) {
      if (g.crossed[i - 1]) continue;
      // Panel of type letters[i-1] at alcove c_{i-1}: all its vertices but one.
      auto verts = alcove_vertices(cx, seq[i - 1]);
      int omit = g.letters[i - 1] == 0 ? 0 : g.letters[i - 1];
      std::array<Rational, kMaxRank> mid{};
      int count = 0;
      for (size_t vi = 0; vi < verts.size(); ++vi) {
        if (static_cast<int>(vi) == omit) continue;
        for (int j = 0; j < 2; ++j) mid[j] += verts[vi][j];
        ++count;
      }
      for (int j = 0; j < 2; ++j) mid[j] /= count;
      Vec2 p = em.map(mid);
      svg << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
          << "\" r=\"0.045\" fill=\"" << stroke << "\"/>\n";
    }
  }

  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace alcove
