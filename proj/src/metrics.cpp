#include "ftdiam/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "ftdiam/spt.hpp"

namespace ftdiam {

std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<Distance>> d(static_cast<size_t>(g.n()));
    for (Vertex s = 0; s < g.n(); ++s) d[static_cast<size_t>(s)] = dijkstra_distances(g, s);
    return d;
}

Distance st_diameter(const Graph& g, const std::vector<Vertex>& S, const std::vector<Vertex>& T) {
    if (S.empty() || T.empty()) throw error("st_diameter: empty vertex set");
    Distance best = 0;
    for (Vertex s : S) {
        if (!g.has_vertex(s)) throw error("st_diameter: vertex out of range");
        auto dist = dijkstra_distances(g, s);
        for (Vertex t : T) {
            if (!g.has_vertex(t)) throw error("st_diameter: vertex out of range");
            best = std::max(best, dist[static_cast<size_t>(t)]);
            if (is_inf(best)) return kInfDist;
        }
    }
    return best;
}

Distance diameter(const Graph& g) {
    auto v = all_vertices(g);
    return st_diameter(g, v, v);
}

std::vector<Vertex> all_vertices(const Graph& g) {
    std::vector<Vertex> v(static_cast<size_t>(g.n()));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace ftdiam
