#ifndef FTDIAM_GRAPH_HPP
#define FTDIAM_GRAPH_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "ftdiam/base.hpp"

namespace ftdiam {

struct Edge {
    Vertex u = -1;
    Vertex v = -1;
    Distance w = 0;
};

struct HalfEdge {
    Vertex to = -1;
    EdgeId id = -1;
};

// Weighted graph, undirected by default. Vertex ids live in [0, n), edge ids
// are assigned by insertion (file) order and are stable across reversal.
// Weights are strictly positive 64-bit integers; weighted input files declare
// a fixed-point scale in the header and are stored pre-scaled, so all
// arithmetic stays exact. Self-loops and parallel edges are rejected.
// Immutable once built; safe for concurrent reads.
class Graph {
  public:
    Graph(int n, bool directed, int fixed_digits = 0);

    // Rejects self-loops, repeated edges and non-positive weights.
    EdgeId add_edge(Vertex u, Vertex v, Distance w);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    bool directed() const { return directed_; }
    int fixed_digits() const { return fixed_digits_; }

    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<size_t>(e)); }
    const std::vector<Edge>& edges() const { return edges_; }
    // Outgoing half-edges (both directions for undirected graphs).
    const std::vector<HalfEdge>& out(Vertex u) const { return adj_.at(static_cast<size_t>(u)); }

    bool has_vertex(Vertex u) const { return u >= 0 && u < n_; }
    // Looks up the edge id for an endpoint pair; -1 if absent. For undirected
    // graphs the order of u, v does not matter.
    EdgeId find_edge(Vertex u, Vertex v) const;

    // Same vertices and edge ids, all arcs flipped. For undirected graphs
    // this is a plain copy.
    Graph reversed() const;

    // Edge-list format: header `n m directed={0|1} weights={int|fixed:<k>}`,
    // then m lines `u v w`. Lines starting with '#' are comments.
    static Graph parse(std::istream& in);
    static Graph load_file(const std::string& path);

  private:
    int n_;
    bool directed_;
    int fixed_digits_;
    std::vector<Edge> edges_;
    std::vector<std::vector<HalfEdge>> adj_;
};

// A set F of failed edges together with its endpoint set V(F). Edge ids must
// exist in the graph the set was built against; |F| <= f is checked by each
// oracle against its declared sensitivity at query time.
class FailureSet {
  public:
    FailureSet() = default;
    FailureSet(const Graph& g, std::vector<EdgeId> edge_ids);

    static FailureSet from_pairs(const Graph& g,
                                 const std::vector<std::pair<Vertex, Vertex>>& pairs);

    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    bool contains(EdgeId e) const;

    // Sorted, duplicate-free.
    const std::vector<EdgeId>& edges() const { return edges_; }
    // V(F), sorted; |endpoints| <= 2|F|.
    const std::vector<Vertex>& endpoints() const { return endpoints_; }

  private:
    std::vector<EdgeId> edges_;
    std::vector<Vertex> endpoints_;
};

}  // namespace ftdiam

#endif
