#pragma once

#include <vector>

#include "alcove/gallery.hpp"

namespace alcove {

enum class GraphFlavor { Plain, Modified, Undirected };

// Edge u -> w (tail -> head) labeled by the positive root alpha with
// w = r_alpha * u. Undirected graphs keep one entry per wall pair with the
// direction of the plain graph, ignored by queries.
struct MomentGraphEdge {
  int tail = 0;
  int head = 0;
  Root label;

  bool operator==(const MomentGraphEdge&) const = default;
};

// Labeled graph on all of W0. Every unordered pair {u, r_alpha u} carries
// exactly one edge labeled alpha, so every vertex has undirected degree
// |Phi+|. The plain and modified flavors are acyclic.
struct MomentGraph {
  GraphFlavor flavor = GraphFlavor::Plain;
  int minimal_direction = -1;  // the v of modified(v); -1 otherwise
  std::vector<MomentGraphEdge> edges;
};

// Directed edge (u, w, alpha) iff w = r_alpha u and l(u) < l(w).
MomentGraph bruhat_moment_graph(const WeylGroup& w0);

// Same undirected labeled edges; edge directed u -> w iff the chamber of w is
// on the same side of H_{alpha,0} as the chamber of v. modified(w0) is the
// plain graph; v is the unique sink.
MomentGraph modified_moment_graph(const WeylGroup& w0, int v);

MomentGraph undirected_moment_graph(const WeylGroup& w0);

// All label sequences of directed paths starting at v, the empty path
// included, sorted lexicographically by positive-root class index. Throws for
// the undirected flavor, and Error(Resource) past `cap` sequences.
std::vector<std::vector<Root>> directed_path_labels_from(const WeylGroup& w0,
                                                         const MomentGraph& g, int v,
                                                         size_t cap = 200000);

// Length of a longest directed path starting at v.
long long longest_path_from(const WeylGroup& w0, const MomentGraph& g, int v);

// From `start`, traverse the unique incident edge with each pattern label in
// turn (vertex ↦ r_alpha * vertex); total since every vertex has one edge per
// class. Requires the undirected flavor.
int walk_undirected(const WeylGroup& w0, const MomentGraph& g, int start,
                    const std::vector<Root>& pattern);

struct LabelRotationCheck {
  bool ok = false;
  int source = -1;  // the vertex of the modified graph with no ingoing edges
};

// Certifies that modified(v) is a label-rotated copy of the plain graph:
// identical to it as an undirected labeled graph, and isomorphic to it as a
// directed labeled graph under some vertex bijection paired with a label
// bijection. Reports the unique source vertex.
LabelRotationCheck verify_modified_is_label_rotation(const WeylGroup& w0, int v);

}  // namespace alcove
