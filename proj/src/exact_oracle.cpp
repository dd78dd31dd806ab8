#include "ftdiam/exact_oracle.hpp"

#include <algorithm>

#include "ftdiam/metrics.hpp"
#include "ftdiam/spt.hpp"

namespace ftdiam {

Distance exact_st_diameter(const Graph& g, const std::vector<Vertex>& S,
                           const std::vector<Vertex>& T, const FailureSet& f) {
    if (S.empty() || T.empty()) throw error("exact oracle: empty vertex set");
    Distance best = 0;
    for (Vertex s : S) {
        auto dist = dijkstra_distances(g, s, &f);
        for (Vertex t : T) {
            if (!g.has_vertex(t)) throw error("exact oracle: vertex out of range");
            best = std::max(best, dist[static_cast<size_t>(t)]);
            if (is_inf(best)) return kInfDist;
        }
    }
    return best;
}

Distance exact_diameter(const Graph& g, const FailureSet& f) {
    auto v = all_vertices(g);
    return exact_st_diameter(g, v, v, f);
}

}  // namespace ftdiam
