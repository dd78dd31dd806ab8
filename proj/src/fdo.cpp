#include "ftdiam/fdo.hpp"

#include <algorithm>

#include "ftdiam/metrics.hpp"
#include "ftdiam/spt.hpp"

namespace ftdiam {

DiameterOracleAllPairs DiameterOracleAllPairs::build(const Graph& g,
                                                     std::shared_ptr<const AllPairsDso> dso) {
    if (!dso) throw error("fdo: null dso");
    DiameterOracleAllPairs o;
    o.diam_g_ = diameter(g);
    o.directed_ = g.directed();
    o.dso_ = std::move(dso);
    return o;
}

OracleAnswer DiameterOracleAllPairs::query(const FailureSet& f) const {
    if (f.size() > sensitivity()) throw error("fdo: failure set exceeds sensitivity");
    if (is_inf(diam_g_)) return {kInfDist, 0};  // already disconnected without failures
    const auto& ends = f.endpoints();
    Distance worst = 0;
    int calls = 0;
    for (size_t i = 0; i < ends.size(); ++i) {
        for (size_t j = i + 1; j < ends.size(); ++j) {
            worst = std::max(worst, dso_->query(ends[i], ends[j], f));
            ++calls;
            if (directed_) {
                worst = std::max(worst, dso_->query(ends[j], ends[i], f));
                ++calls;
            }
        }
    }
    return {dist_add(diam_g_, worst), calls};
}

DiameterOracleSingleSource DiameterOracleSingleSource::build(
    const Graph& g, Vertex s, std::shared_ptr<const SingleSourceDso> dso_out,
    std::shared_ptr<const SingleSourceDso> dso_in) {
    if (!dso_out || !dso_in) throw error("fdo: null dso");
    if (!g.has_vertex(s)) throw error("fdo: source out of range");
    if (dso_out->source() != s || dso_in->source() != s)
        throw error("fdo: dso source mismatch");
    DiameterOracleSingleSource o;
    o.s_ = s;
    auto out_dist = dijkstra_distances(g, s);
    o.ecc_out_ = *std::max_element(out_dist.begin(), out_dist.end());
    if (g.directed()) {
        Graph rev = g.reversed();
        auto in_dist = dijkstra_distances(rev, s);
        o.ecc_in_ = *std::max_element(in_dist.begin(), in_dist.end());
    } else {
        o.ecc_in_ = o.ecc_out_;
    }
    o.dso_out_ = std::move(dso_out);
    o.dso_in_ = std::move(dso_in);
    return o;
}

OracleAnswer DiameterOracleSingleSource::query(const FailureSet& f) const {
    if (f.size() > sensitivity()) throw error("fdo: failure set exceeds sensitivity");
    if (is_inf(ecc_in_) || is_inf(ecc_out_)) return {kInfDist, 0};
    Distance worst_out = 0, worst_in = 0;
    int calls = 0;
    for (Vertex v : f.endpoints()) {
        worst_out = std::max(worst_out, dso_out_->query(v, f));
        worst_in = std::max(worst_in, dso_in_->query(v, f));
        calls += 2;
    }
    Distance d = dist_add(dist_add(ecc_in_, ecc_out_), dist_add(worst_out, worst_in));
    return {d, calls};
}

}  // namespace ftdiam
