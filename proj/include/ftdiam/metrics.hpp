#ifndef FTDIAM_METRICS_HPP
#define FTDIAM_METRICS_HPP

#include <vector>

#include "ftdiam/graph.hpp"

namespace ftdiam {

// n x n matrix of shortest-path distances, kInfDist for disconnected pairs.
std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g);

// max_{s in S, t in T} d_G(s, t); S and T must be non-empty.
Distance st_diameter(const Graph& g, const std::vector<Vertex>& S, const std::vector<Vertex>& T);

// diam(G) = st_diameter over V x V (ordered pairs for directed graphs).
Distance diameter(const Graph& g);

std::vector<Vertex> all_vertices(const Graph& g);

}  // namespace ftdiam

#endif
