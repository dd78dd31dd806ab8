#ifndef FTDIAM_FDO_ST_HPP
#define FTDIAM_FDO_ST_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "ftdiam/fdo.hpp"
#include "ftdiam/spt.hpp"

namespace ftdiam {

// Shortest-path tree rooted at v with membership marks. A vertex s in S is
// s-marked in the tree of v iff some canonical shortest path from s to a
// T-vertex passes through v, i.e. d(s,t) = d(s,v) + d(v,t); t-marks are
// symmetric. Counts are subtree totals used for reachability arithmetic.
struct MarkedTree {
    TreeCore tree;
    std::vector<char> s_mark, t_mark;
    std::vector<int> s_count, t_count;
};

// Picks at most 2^f marked vertices such that, for every failure set of at
// most f edges, the root reaches a marked vertex in the tree minus the
// failures iff it reaches a picked one inside the subtree they span.
// Recursive selection over branches that still hold a relevant vertex
// (marked, with no marked vertex closer to the root): a branching node
// splits its failure budget between the first branch and the rest; f+1
// branches with disjoint root paths short-cut to f+1 single picks.
std::vector<Vertex> select_leaves(const TreeCore& tree, const std::vector<char>& marks, int f);

// One long root-to-leaf-direction path, top vertex first.
struct PathSegment {
    std::vector<Vertex> vertices;
};

// Vertices hitting every long path, each with its own shortest-path tree.
// Seeded sampling of ceil(3 * sqrt(n) * ln n) vertices, re-sampled with an
// incremented seed until every path is hit; deterministic given the seed.
class PivotSet {
  public:
    static PivotSet build(const std::vector<PathSegment>& paths, const Graph& g,
                          std::uint64_t seed);

    const std::vector<Vertex>& pivots() const { return z_; }
    bool contains(Vertex v) const;
    const ShortestPathTree& tree_for(Vertex z) const;
    // Smallest pivot on the segment; -1 if none hits it.
    Vertex hitting_pivot(const PathSegment& seg) const;

  private:
    std::vector<Vertex> z_;  // sorted
    std::vector<ShortestPathTree> trees_;
};

// Compact form of a marked tree: the subtree spanning the root and the
// selected leaves, with every long path between consecutive branch points
// (root and leaves also terminate segments) contracted to a representative
// edge annotated with a hitting pivot. Nodes are stored in preorder.
struct CompressedTree {
    Vertex root = -1;
    std::vector<Vertex> nodes;        // preorder, nodes[0] == root
    std::vector<int> parent_idx;      // -1 for root
    std::vector<EdgeId> link_edge;    // graph edge id; -1 for representative links
    std::vector<Vertex> link_pivot;   // pivot z for representative links; -1 otherwise
    std::vector<int> leaf_count;      // selected leaves in the subtree (k values)
    std::vector<int> pre, post;
    std::vector<Vertex> leaves;       // sorted
    std::vector<int> rep_links;       // node indices whose parent link is representative

    int index_of(Vertex v) const;  // -1 if v is not a node
    int size() const { return static_cast<int>(nodes.size()); }

  private:
    friend CompressedTree compress_tree(const TreeCore&, const std::vector<Vertex>&, int,
                                        const PivotSet&);
    std::vector<std::pair<Vertex, int>> index_;  // sorted vertex -> node position
};

// Maximal chains of the spanned subtree with at least `threshold` edges.
std::vector<PathSegment> long_segments(const TreeCore& tree, const std::vector<Vertex>& leaves,
                                       int threshold);

// Errors if some long segment is not hit by any pivot.
CompressedTree compress_tree(const TreeCore& tree, const std::vector<Vertex>& leaves,
                             int threshold, const PivotSet& pivots);

enum class StRegime { kFull, kCompressed, kAuto };

// Fault-tolerant ST-diameter oracle over an all-pairs DSO, stretch 1 + 3sigma.
// Undirected graphs only. A query maps V(F) to proxy sets S' and T' (vertices
// of V(F) whose marked tree still reaches a marked vertex) and answers
// diam(G,S,T) plus the largest DSO estimate over S' x T'; at most 4f^2 DSO
// calls. The full regime keeps all n marked trees; the compressed regime
// keeps a leaf-selected, path-contracted pair of trees per vertex plus the
// shared pivot set, and answers every query identically.
class StDiameterOracle {
  public:
    static StDiameterOracle build(const Graph& g, std::vector<Vertex> S, std::vector<Vertex> T,
                                  std::shared_ptr<const AllPairsDso> dso, int sensitivity,
                                  StRegime regime = StRegime::kAuto, std::uint64_t seed = 0,
                                  int threads = 1);

    std::vector<Vertex> compute_s_prime(const FailureSet& f) const;
    std::vector<Vertex> compute_t_prime(const FailureSet& f) const;
    OracleAnswer query(const FailureSet& f) const;

    Distance base_st_diameter() const { return diam_st_; }
    bool compressed() const { return compressed_; }
    int sensitivity() const { return f_; }
    // Build-time structures, exposed for verification.
    const MarkedTree& marked_tree(Vertex v) const;
    const CompressedTree& compressed_tree(Vertex v, bool s_side) const;
    const PivotSet& pivot_set() const;

  private:
    std::vector<Vertex> prime_set(const FailureSet& f, bool s_side) const;

    Distance diam_st_ = 0;
    int f_ = 0;
    bool compressed_ = false;
    std::shared_ptr<const AllPairsDso> dso_;
    std::vector<Edge> graph_edges_;                  // failed-edge id -> endpoints
    std::vector<MarkedTree> trees_;                  // full regime
    std::vector<CompressedTree> s_trees_, t_trees_;  // compressed regime
    PivotSet pivots_;
};

}  // namespace ftdiam

#endif
