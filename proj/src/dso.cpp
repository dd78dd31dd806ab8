#include "ftdiam/dso.hpp"

#include <cmath>

#include "ftdiam/spt.hpp"

namespace ftdiam {

namespace {

void check_query(const Graph& g, int f, const FailureSet& fs) {
    if (fs.size() > f)
        throw error("dso: failure set larger than declared sensitivity " + std::to_string(f));
    for (EdgeId e : fs.edges())
        if (e < 0 || e >= g.m()) throw error("dso: failure edge id out of range");
}

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t failure_hash(std::uint64_t seed, const FailureSet& f) {
    std::uint64_t h = mix64(seed);
    for (EdgeId e : f.edges()) h = mix64(h ^ static_cast<std::uint64_t>(e));
    return h;
}

Distance inflate_estimate(Distance base, double lambda, std::uint64_t query_hash) {
    if (is_inf(base) || base == 0 || lambda <= 1.0) return base;
    double extra = (lambda - 1.0) * static_cast<double>(base);
    Distance max_extra = static_cast<Distance>(std::floor(extra));
    if (max_extra <= 0) return base;
    Distance offset = static_cast<Distance>(
        query_hash % static_cast<std::uint64_t>(max_extra + 1));
    return dist_add(base, offset);
}

RecomputeDso::RecomputeDso(std::shared_ptr<const Graph> g, int sensitivity)
    : g_(std::move(g)), f_(sensitivity) {
    if (f_ < 0) throw error("dso: negative sensitivity");
}

Distance RecomputeDso::query(Vertex u, Vertex v, const FailureSet& f) const {
    check_query(*g_, f_, f);
    if (!g_->has_vertex(u) || !g_->has_vertex(v)) throw error("dso: vertex out of range");
    if (u == v) return 0;
    return dijkstra_distances(*g_, u, &f)[static_cast<size_t>(v)];
}

RecomputeSingleSourceDso::RecomputeSingleSourceDso(std::shared_ptr<const Graph> g, Vertex source,
                                                   int sensitivity)
    : g_(std::move(g)), s_(source), f_(sensitivity) {
    if (!g_->has_vertex(s_)) throw error("dso: source out of range");
    if (f_ < 0) throw error("dso: negative sensitivity");
}

std::shared_ptr<RecomputeSingleSourceDso> RecomputeSingleSourceDso::on_reversed(
    const Graph& g, Vertex source, int sensitivity) {
    return std::make_shared<RecomputeSingleSourceDso>(std::make_shared<Graph>(g.reversed()),
                                                      source, sensitivity);
}

Distance RecomputeSingleSourceDso::query(Vertex v, const FailureSet& f) const {
    check_query(*g_, f_, f);
    if (!g_->has_vertex(v)) throw error("dso: vertex out of range");
    if (v == s_) return 0;
    return dijkstra_distances(*g_, s_, &f)[static_cast<size_t>(v)];
}

StretchedDso::StretchedDso(std::shared_ptr<const AllPairsDso> inner, double lambda)
    : inner_(std::move(inner)), lambda_(lambda) {
    if (lambda_ < 1.0) throw error("stretched dso: inflation factor below 1");
}

Distance StretchedDso::query(Vertex u, Vertex v, const FailureSet& f) const {
    Distance base = inner_->query(u, v, f);
    std::uint64_t h = failure_hash(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
            static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)),
        f);
    return inflate_estimate(base, lambda_, h);
}

double StretchedDso::stretch() const { return inner_->stretch() * lambda_; }

StretchedSingleSourceDso::StretchedSingleSourceDso(std::shared_ptr<const SingleSourceDso> inner,
                                                   double lambda)
    : inner_(std::move(inner)), lambda_(lambda) {
    if (lambda_ < 1.0) throw error("stretched dso: inflation factor below 1");
}

Distance StretchedSingleSourceDso::query(Vertex v, const FailureSet& f) const {
    Distance base = inner_->query(v, f);
    std::uint64_t h = failure_hash(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(inner_->source())) << 32) |
            static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)),
        f);
    return inflate_estimate(base, lambda_, h);
}

double StretchedSingleSourceDso::stretch() const { return inner_->stretch() * lambda_; }

}  // namespace ftdiam
