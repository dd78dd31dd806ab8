#ifndef FTDIAM_SPT_HPP
#define FTDIAM_SPT_HPP

#include <vector>

#include "ftdiam/graph.hpp"

namespace ftdiam {

// Rooted shortest-path tree under the canonical tie-break. Ties between
// equal-length paths are broken by a lexicographic edge-rank perturbation:
// among shortest paths, the one whose edge set contains the lowest-id edge in
// the symmetric difference wins. This gives every vertex pair one canonical
// shortest path that is symmetric (the u-v path is the reverse of the v-u
// path) and subpath-consistent across all roots, so the tree rooted at any v
// stores exactly the canonical v-to-x paths. Unreachable vertices keep
// dist = inf and no parent.
struct TreeCore {
    Vertex root = -1;
    std::vector<Vertex> parent;       // -1 for the root and unreachable vertices
    std::vector<EdgeId> parent_edge;  // -1 likewise
    std::vector<Distance> dist;       // kInfDist if unreachable
    std::vector<int> pre, post;       // traversal numbers, -1 if unreachable
    std::vector<int> depth;           // tree depth in edges, -1 if unreachable

    int n() const { return static_cast<int>(parent.size()); }
    bool reachable(Vertex v) const { return !is_inf(dist[static_cast<size_t>(v)]); }

    // Ancestry via pre/post nesting: a is an ancestor of b (or b itself).
    bool is_ancestor(Vertex a, Vertex b) const {
        size_t ia = static_cast<size_t>(a), ib = static_cast<size_t>(b);
        return pre[ia] <= pre[ib] && post[ia] >= post[ib];
    }

    // Children ordered by ascending vertex id (the traversal order).
    std::vector<std::vector<Vertex>> children() const;

    // Root-to-v canonical path; error if v is unreachable.
    std::vector<Vertex> path_from_root(Vertex v) const;
};

// Dijkstra from `source` on g minus the excluded edges, with the canonical
// tie-break. Deterministic: two builds with identical inputs produce
// identical parent arrays.
TreeCore build_sp_tree(const Graph& g, Vertex source, const FailureSet* excluded = nullptr);

// Distance-only Dijkstra (no tie-breaking ranks, cheaper).
std::vector<Distance> dijkstra_distances(const Graph& g, Vertex source,
                                         const FailureSet* excluded = nullptr);

// TreeCore plus a constant-time LCA index (Euler tour + sparse table).
class ShortestPathTree {
  public:
    explicit ShortestPathTree(TreeCore core);

    const TreeCore& core() const { return core_; }
    Vertex root() const { return core_.root; }
    Distance dist(Vertex v) const { return core_.dist[static_cast<size_t>(v)]; }
    Vertex parent(Vertex v) const { return core_.parent[static_cast<size_t>(v)]; }

    // Error if u or v is unreachable from the root.
    Vertex lca(Vertex u, Vertex v) const;

  private:
    TreeCore core_;
    std::vector<Vertex> euler_;         // vertices in Euler-tour order
    std::vector<int> first_;            // first occurrence per vertex, -1 unreachable
    std::vector<std::vector<int>> table_;  // sparse table of argmin-depth indices
    int shallower(int i, int j) const;
};

ShortestPathTree shortest_paths_from(const Graph& g, Vertex source,
                                     const FailureSet* excluded = nullptr);

// True iff the graph edge {eu, ev} lies on the tree path between x and y.
// Decided by two LCA ancestry conditions (against x and against y) plus a
// parent-relation check; the latter is needed because a non-tree edge can
// join two vertices of the same root path at exactly their tree distance.
bool edge_on_tree_path(const ShortestPathTree& t, Vertex x, Vertex y, Vertex eu, Vertex ev);

}  // namespace ftdiam

#endif
