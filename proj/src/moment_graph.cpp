#include "alcove/moment_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alcove {

namespace {

std::vector<int> display_position(const WeylGroup& w0) {
  std::vector<int> pos(w0.size());
  for (int i = 0; i < w0.size(); ++i) pos[w0.display_order()[i]] = i;
  return pos;
}

// One entry per unordered pair {u, r_alpha u}; direction chosen by `directed`.
template <typename DirectedTowards>
MomentGraph build_graph(const WeylGroup& w0, GraphFlavor flavor, int minimal_direction,
                        DirectedTowards head_is) {
  const auto& pos_roots = w0.roots().positive_roots();
  std::vector<int> pos = display_position(w0);
  MomentGraph g;
  g.flavor = flavor;
  g.minimal_direction = minimal_direction;
  for (int u = 0; u < w0.size(); ++u)
    for (size_t c = 0; c < pos_roots.size(); ++c) {
      int r = w0.reflection(pos_roots[c]);
      int w = w0.multiply(r, u);
      if (pos[u] > pos[w]) continue;  // emit each pair once
      MomentGraphEdge e;
      e.label = pos_roots[c];
      if (head_is(u, w, pos_roots[c])) {
        e.tail = u;
        e.head = w;
      } else {
        e.tail = w;
        e.head = u;
      }
      g.edges.push_back(e);
    }
  std::sort(g.edges.begin(), g.edges.end(),
            [&](const MomentGraphEdge& a, const MomentGraphEdge& b) {
              if (pos[a.tail] != pos[b.tail]) return pos[a.tail] < pos[b.tail];
              if (pos[a.head] != pos[b.head]) return pos[a.head] < pos[b.head];
              return w0.roots().class_index(a.label) < w0.roots().class_index(b.label);
            });
  return g;
}

std::vector<std::vector<std::pair<int, int>>> out_adjacency(const WeylGroup& w0,
                                                            const MomentGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> out(w0.size());  // (class, head)
  for (const auto& e : g.edges)
    out[e.tail].emplace_back(w0.roots().class_index(e.label), e.head);
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

MomentGraph bruhat_moment_graph(const WeylGroup& w0) {
  return build_graph(w0, GraphFlavor::Plain, -1, [&](int u, int w, const Root&) {
    return w0.length(u) < w0.length(w);  // head is the longer element
  });
}

MomentGraph modified_moment_graph(const WeylGroup& w0, int v) {
  return build_graph(w0, GraphFlavor::Modified, v, [&](int, int w, const Root& alpha) {
    // Directed towards the endpoint whose chamber shares v's side of H_{alpha,0}.
    return w0.chamber_side(alpha, w) == w0.chamber_side(alpha, v);
  });
}

MomentGraph undirected_moment_graph(const WeylGroup& w0) {
  MomentGraph g = bruhat_moment_graph(w0);
  g.flavor = GraphFlavor::Undirected;
  return g;
}

std::vector<std::vector<Root>> directed_path_labels_from(const WeylGroup& w0,
                                                         const MomentGraph& g, int v,
                                                         size_t cap) {
  if (g.flavor == GraphFlavor::Undirected)
    throw Error(ErrorCode::BadArgument, "directed paths require a directed flavor");
  auto out = out_adjacency(w0, g);
  std::vector<std::vector<Root>> sequences;
  std::vector<Root> prefix;
  // Out-edges of a vertex carry distinct labels, so sequences are unique and
  // preorder traversal in class order emits them in lexicographic order.
  auto dfs = [&](auto&& self, int u) -> void {
    if (sequences.size() >= cap)
      throw Error(ErrorCode::Resource, "too many directed paths; tighten the query");
    sequences.push_back(prefix);
    for (const auto& [cls, head] : out[u]) {
      prefix.push_back(w0.roots().positive_roots()[cls]);
      self(self, head);
      prefix.pop_back();
    }
  };
  dfs(dfs, v);
  return sequences;
}

long long longest_path_from(const WeylGroup& w0, const MomentGraph& g, int v) {
  if (g.flavor == GraphFlavor::Undirected)
    throw Error(ErrorCode::BadArgument, "longest path requires a directed flavor");
  auto out = out_adjacency(w0, g);
  std::vector<long long> memo(w0.size(), -1);
  std::vector<int> onstack(w0.size(), 0);
  auto dfs = [&](auto&& self, int u) -> long long {
    if (memo[u] >= 0) return memo[u];
    if (onstack[u]) throw Error(ErrorCode::Internal, "moment graph has a cycle");
    onstack[u] = 1;
    long long best = 0;
    for (const auto& [cls, head] : out[u]) best = std::max(best, 1 + self(self, head));
    onstack[u] = 0;
    memo[u] = best;
    return best;
  };
  return dfs(dfs, v);
}

int walk_undirected(const WeylGroup& w0, const MomentGraph& g, int start,
                    const std::vector<Root>& pattern) {
  if (g.flavor != GraphFlavor::Undirected)
    throw Error(ErrorCode::BadArgument, "walk requires the undirected flavor");
  int vertex = start;
  for (const Root& alpha : pattern) vertex = w0.multiply(w0.reflection(alpha), vertex);
  return vertex;
}

LabelRotationCheck verify_modified_is_label_rotation(const WeylGroup& w0, int v) {
  MomentGraph plain = bruhat_moment_graph(w0);
  MomentGraph mod = modified_moment_graph(w0, v);

  LabelRotationCheck result;

  // Identical as undirected labeled graphs, via the identity on vertices.
  std::set<std::tuple<int, int, int>> plain_un, mod_un;
  for (const auto& e : plain.edges)
    plain_un.insert({std::min(e.tail, e.head), std::max(e.tail, e.head),
                     w0.roots().class_index(e.label)});
  for (const auto& e : mod.edges)
    mod_un.insert({std::min(e.tail, e.head), std::max(e.tail, e.head),
                   w0.roots().class_index(e.label)});
  if (plain_un != mod_un) return result;

  // Unique source (no ingoing edges).
  std::vector<int> indeg(w0.size(), 0);
  for (const auto& e : mod.edges) ++indeg[e.head];
  int source = -1;
  for (int u = 0; u < w0.size(); ++u)
    if (indeg[u] == 0) {
      if (source >= 0) return result;
      source = u;
    }
  if (source < 0) return result;
  result.source = source;

  std::set<std::tuple<int, int, int>> plain_dir;
  for (const auto& e : plain.edges)
    plain_dir.insert({e.tail, e.head, w0.roots().class_index(e.label)});

  const auto& pos_roots = w0.roots().positive_roots();
  auto matches = [&](auto&& vertex_map, auto&& label_map) {
    for (const auto& e : mod.edges)
      if (!plain_dir.count({vertex_map(e.tail), vertex_map(e.head),
                            label_map(w0.roots().class_index(e.label))}))
        return false;
    return true;
  };

  for (int g = 0; g < w0.size(); ++g) {
    auto left = [&](int u) { return w0.multiply(g, u); };
    auto rotate = [&](int cls) { return w0.roots().class_index(w0.apply(g, pos_roots[cls])); };
    if (matches(left, rotate)) {
      result.ok = true;
      return result;
    }
    auto right = [&](int u) { return w0.multiply(u, g); };
    auto keep = [&](int cls) { return cls; };
    if (matches(right, keep)) {
      result.ok = true;
      return result;
    }
  }
  return result;
}

}  // namespace alcove
