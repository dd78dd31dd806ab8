#include "ftdiam/lower_bound.hpp"

#include <cmath>
#include <random>

#include "ftdiam/exact_oracle.hpp"
#include "ftdiam/spt.hpp"

namespace ftdiam {

LbTensor::LbTensor(int r) : r_(r) {
    if (r < 1) throw error("tensor: root must be positive");
    bits_.assign(static_cast<size_t>(r) * static_cast<size_t>(r) * static_cast<size_t>(r), 0);
}

LbTensor LbTensor::zeros(int r) { return LbTensor(r); }

LbTensor LbTensor::ones(int r) {
    LbTensor t(r);
    std::fill(t.bits_.begin(), t.bits_.end(), 1);
    return t;
}

LbTensor LbTensor::random(int r, std::uint64_t seed) {
    LbTensor t(r);
    std::mt19937_64 rng(seed);
    for (auto& b : t.bits_) b = static_cast<std::uint8_t>(rng() & 1);
    return t;
}

size_t LbTensor::offset(int i, int j, int k) const {
    if (i < 1 || i > r_ || j < 1 || j > r_ || k < 1 || k > r_)
        throw error("tensor: index out of range");
    return (static_cast<size_t>(i - 1) * static_cast<size_t>(r_) + static_cast<size_t>(j - 1)) *
               static_cast<size_t>(r_) +
           static_cast<size_t>(k - 1);
}

bool LbTensor::get(int i, int j, int k) const { return bits_[offset(i, j, k)] != 0; }
void LbTensor::set(int i, int j, int k, bool value) {
    bits_[offset(i, j, k)] = value ? 1 : 0;
}

namespace {

int checked_root(int N) {
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(N))));
    if (r < 1 || r * r != N) throw error("lower bound: N must be a perfect square");
    return r;
}

void check_index(const LbGraph& g, int i, int j, int k = 1) {
    if (i < 1 || i > g.r || j < 1 || j > g.r || k < 0 || k > 1)
        throw error("lower bound: index out of range");
}

}  // namespace

Vertex LbGraph::a(int i, int j) const {
    check_index(*this, i, j);
    return static_cast<Vertex>((i - 1) * r + (j - 1));
}

Vertex LbGraph::b(int i, int j, int k) const {
    check_index(*this, i, j, k);
    return static_cast<Vertex>(N() + 2 * ((i - 1) * r + (j - 1)) + k);
}

Vertex LbGraph::c(int i, int j, int k) const {
    check_index(*this, i, j, k);
    return static_cast<Vertex>(3 * N() + 2 * ((i - 1) * r + (j - 1)) + k);
}

Vertex LbGraph::d(int i, int j) const {
    check_index(*this, i, j);
    return static_cast<Vertex>(5 * N() + (i - 1) * r + (j - 1));
}

std::string LbGraph::label(Vertex v) const {
    int n = N();
    auto pair_of = [&](int off) {
        return "[" + std::to_string(off / r + 1) + "," + std::to_string(off % r + 1) + "]";
    };
    auto triple_of = [&](int off) {
        int k = off % 2, ij = off / 2;
        return "[" + std::to_string(ij / r + 1) + "," + std::to_string(ij % r + 1) + "," +
               std::to_string(k) + "]";
    };
    if (v < n) return "a" + pair_of(v);
    if (v < 3 * n) return "b" + triple_of(v - n);
    if (v < 5 * n) return "c" + triple_of(v - 3 * n);
    if (v < 6 * n) return "d" + pair_of(v - 5 * n);
    throw error("lower bound: vertex out of range");
}

LbGraph build_h(int N) {
    int r = checked_root(N);
    LbGraph h{Graph(6 * N, /*directed=*/false), r};
    // Layers B and C: edge iff exactly one of the first two indices matches.
    for (int layer = 0; layer < 2; ++layer) {
        auto vert = [&](int i, int j, int k) { return layer == 0 ? h.b(i, j, k) : h.c(i, j, k); };
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                for (int y = j + 1; y <= r; ++y)
                    for (int k = 0; k <= 1; ++k)
                        for (int z = 0; z <= 1; ++z) h.g.add_edge(vert(i, j, k), vert(i, y, z), 1);
        for (int j = 1; j <= r; ++j)
            for (int i = 1; i <= r; ++i)
                for (int x = i + 1; x <= r; ++x)
                    for (int k = 0; k <= 1; ++k)
                        for (int z = 0; z <= 1; ++z) h.g.add_edge(vert(i, j, k), vert(x, j, z), 1);
    }
    // A to B: first indices match, B side in the k=0 slice.
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            for (int y = 1; y <= r; ++y) h.g.add_edge(h.a(i, j), h.b(i, y, 0), 1);
    // B to C: both indices match, slices free.
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            for (int k = 0; k <= 1; ++k)
                for (int z = 0; z <= 1; ++z) h.g.add_edge(h.b(i, j, k), h.c(i, j, z), 1);
    // C to D: second indices match, C side in the k=0 slice.
    for (int i = 1; i <= r; ++i)
        for (int y = 1; y <= r; ++y)
            for (int x = 1; x <= r; ++x) h.g.add_edge(h.c(i, y, 0), h.d(x, y), 1);
    return h;
}

LbGraph build_g(const LbGraph& h, const LbTensor& m) {
    if (m.root() != h.r) throw error("lower bound: tensor dimension mismatch");
    LbGraph g{Graph(h.g.n(), /*directed=*/false), h.r};
    for (const Edge& e : h.g.edges()) g.g.add_edge(e.u, e.v, e.w);
    int r = h.r;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            for (int y = 1; y <= r; ++y)
                if (m.get(i, j, y)) g.g.add_edge(g.a(i, j), g.b(i, y, 1), 1);
    for (int i = 1; i <= r; ++i)
        for (int x = 1; x <= r; ++x)
            for (int y = 1; y <= r; ++y)
                if (m.get(i, x, y)) g.g.add_edge(g.c(i, y, 1), g.d(x, y), 1);
    return g;
}

LbFailures failure_sets(const LbGraph& g, int i, int j, int x, int y) {
    if (i == x || j == y) throw error("failure sets: require i != x and j != y");
    check_index(g, i, j);
    check_index(g, x, y);
    EdgeId e1 = g.g.find_edge(g.a(i, j), g.b(i, y, 0));
    EdgeId e2 = g.g.find_edge(g.c(i, y, 0), g.d(x, y));
    if (e1 == -1 || e2 == -1) throw error("failure sets: base edges missing");
    LbFailures out{FailureSet(g.g, {e1, e2}),
                   {g.a(i, j), g.b(i, y, 1)},
                   {g.c(i, y, 1), g.d(x, y)}};
    return out;
}

Dichotomy verify_dichotomy(const LbGraph& g_with_m, const LbTensor& m, int i, int j, int x,
                           int y) {
    bool m1 = m.get(i, j, y);
    bool m2 = m.get(i, x, y);
    if (m1 != m2) throw error("dichotomy: governing tensor entries differ, case undefined");
    LbFailures fs = failure_sets(g_with_m, i, j, x, y);
    Distance diam = exact_diameter(g_with_m.g, fs.f);
    if (m1) {
        if (diam > 3) throw error("dichotomy violated: expected diameter at most 3");
        return Dichotomy::kAtMost3;
    }
    Distance pair_dist = dijkstra_distances(g_with_m.g, g_with_m.a(i, j),
                                            &fs.f)[static_cast<size_t>(g_with_m.d(x, y))];
    if (!is_inf(pair_dist) && pair_dist < 5)
        throw error("dichotomy violated: a-d distance below 5");
    if (!is_inf(diam) && diam < 5) throw error("dichotomy violated: expected diameter at least 5");
    return Dichotomy::kAtLeast5;
}

}  // namespace ftdiam
