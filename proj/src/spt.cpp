#include "ftdiam/spt.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace ftdiam {

std::vector<std::vector<Vertex>> TreeCore::children() const {
    std::vector<std::vector<Vertex>> ch(parent.size());
    for (Vertex v = 0; v < n(); ++v)
        if (parent[static_cast<size_t>(v)] != -1)
            ch[static_cast<size_t>(parent[static_cast<size_t>(v)])].push_back(v);
    // parent[] is scanned in ascending v, so each list is already sorted
    return ch;
}

std::vector<Vertex> TreeCore::path_from_root(Vertex v) const {
    if (!reachable(v)) throw error("tree path: vertex unreachable: " + std::to_string(v));
    std::vector<Vertex> path;
    for (Vertex x = v; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

// Edge-rank bitsets, one word block per vertex. rank(v) is the edge-id set of
// the canonical root-to-v path; comparing two candidates at equal length,
// the one containing the lowest edge id in the symmetric difference wins.
class RankTable {
  public:
    RankTable(int n, int m)
        : words_((m + 63) / 64), bits_(static_cast<size_t>(n) * static_cast<size_t>(words_), 0) {}

    // True iff (rank(u) + edge e) beats the incumbent rank(v).
    bool candidate_beats(Vertex u, EdgeId e, Vertex v) const {
        const std::uint64_t* ru = row(u);
        const std::uint64_t* rv = row(v);
        int ew = e >> 6;
        std::uint64_t eb = 1ULL << (e & 63);
        for (int k = 0; k < words_; ++k) {
            std::uint64_t a = ru[k] | (k == ew ? eb : 0);
            std::uint64_t b = rv[k];
            if (a != b) {
                int low = std::countr_zero(a ^ b);
                return ((a >> low) & 1ULL) != 0;
            }
        }
        return false;
    }

    void assign(Vertex v, Vertex u, EdgeId e) {
        const std::uint64_t* ru = row(u);
        std::uint64_t* rv = mut_row(v);
        for (int k = 0; k < words_; ++k) rv[k] = ru[k];
        rv[e >> 6] |= 1ULL << (e & 63);
    }

  private:
    const std::uint64_t* row(Vertex v) const {
        return bits_.data() + static_cast<size_t>(v) * static_cast<size_t>(words_);
    }
    std::uint64_t* mut_row(Vertex v) {
        return bits_.data() + static_cast<size_t>(v) * static_cast<size_t>(words_);
    }
    int words_;
    std::vector<std::uint64_t> bits_;
};

void number_tree(TreeCore& t) {
    int n = t.n();
    t.pre.assign(static_cast<size_t>(n), -1);
    t.post.assign(static_cast<size_t>(n), -1);
    t.depth.assign(static_cast<size_t>(n), -1);
    auto ch = t.children();
    std::vector<std::pair<Vertex, size_t>> stack;  // (vertex, next child index)
    int pre = 0, post = 0;
    t.depth[static_cast<size_t>(t.root)] = 0;
    t.pre[static_cast<size_t>(t.root)] = pre++;
    stack.emplace_back(t.root, 0);
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        auto& kids = ch[static_cast<size_t>(v)];
        if (i < kids.size()) {
            Vertex c = kids[i++];
            t.depth[static_cast<size_t>(c)] = t.depth[static_cast<size_t>(v)] + 1;
            t.pre[static_cast<size_t>(c)] = pre++;
            stack.emplace_back(c, 0);
        } else {
            t.post[static_cast<size_t>(v)] = post++;
            stack.pop_back();
        }
    }
}

}  // namespace

TreeCore build_sp_tree(const Graph& g, Vertex source, const FailureSet* excluded) {
    if (!g.has_vertex(source)) throw error("sssp: source out of range");
    int n = g.n();
    TreeCore t;
    t.root = source;
    t.parent.assign(static_cast<size_t>(n), -1);
    t.parent_edge.assign(static_cast<size_t>(n), -1);
    t.dist.assign(static_cast<size_t>(n), kInfDist);
    RankTable ranks(n, std::max(1, g.m()));
    std::vector<char> settled(static_cast<size_t>(n), 0);

    using Item = std::pair<Distance, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    t.dist[static_cast<size_t>(source)] = 0;
    pq.emplace(0, source);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (settled[static_cast<size_t>(u)]) continue;
        settled[static_cast<size_t>(u)] = 1;
        for (const HalfEdge& h : g.out(u)) {
            if (excluded && excluded->contains(h.id)) continue;
            Distance nd = dist_add(d, g.edge(h.id).w);
            Distance& dv = t.dist[static_cast<size_t>(h.to)];
            if (nd < dv) {
                dv = nd;
                t.parent[static_cast<size_t>(h.to)] = u;
                t.parent_edge[static_cast<size_t>(h.to)] = h.id;
                ranks.assign(h.to, u, h.id);
                pq.emplace(nd, h.to);
            } else if (nd == dv && !settled[static_cast<size_t>(h.to)] &&
                       ranks.candidate_beats(u, h.id, h.to)) {
                t.parent[static_cast<size_t>(h.to)] = u;
                t.parent_edge[static_cast<size_t>(h.to)] = h.id;
                ranks.assign(h.to, u, h.id);
            }
        }
    }
    number_tree(t);
    return t;
}

std::vector<Distance> dijkstra_distances(const Graph& g, Vertex source,
                                         const FailureSet* excluded) {
    if (!g.has_vertex(source)) throw error("sssp: source out of range");
    std::vector<Distance> dist(static_cast<size_t>(g.n()), kInfDist);
    using Item = std::pair<Distance, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[static_cast<size_t>(source)] = 0;
    pq.emplace(0, source);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[static_cast<size_t>(u)]) continue;
        for (const HalfEdge& h : g.out(u)) {
            if (excluded && excluded->contains(h.id)) continue;
            Distance nd = dist_add(d, g.edge(h.id).w);
            if (nd < dist[static_cast<size_t>(h.to)]) {
                dist[static_cast<size_t>(h.to)] = nd;
                pq.emplace(nd, h.to);
            }
        }
    }
    return dist;
}

ShortestPathTree::ShortestPathTree(TreeCore core) : core_(std::move(core)) {
    int n = core_.n();
    first_.assign(static_cast<size_t>(n), -1);
    auto ch = core_.children();
    // Euler tour: every vertex is revisited after each child subtree.
    std::vector<std::pair<Vertex, size_t>> stack;
    stack.emplace_back(core_.root, 0);
    euler_.push_back(core_.root);
    first_[static_cast<size_t>(core_.root)] = 0;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        auto& kids = ch[static_cast<size_t>(v)];
        if (i < kids.size()) {
            Vertex c = kids[i++];
            first_[static_cast<size_t>(c)] = static_cast<int>(euler_.size());
            euler_.push_back(c);
            stack.emplace_back(c, 0);
        } else {
            stack.pop_back();
            if (!stack.empty()) euler_.push_back(stack.back().first);
        }
    }
    int len = static_cast<int>(euler_.size());
    int levels = 1;
    while ((1 << levels) <= len) ++levels;
    table_.assign(static_cast<size_t>(levels), std::vector<int>());
    table_[0].resize(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) table_[0][static_cast<size_t>(i)] = i;
    for (int k = 1; k < levels; ++k) {
        int span = 1 << k;
        if (span > len) break;
        table_[static_cast<size_t>(k)].resize(static_cast<size_t>(len - span + 1));
        for (int i = 0; i + span <= len; ++i)
            table_[static_cast<size_t>(k)][static_cast<size_t>(i)] =
                shallower(table_[static_cast<size_t>(k - 1)][static_cast<size_t>(i)],
                          table_[static_cast<size_t>(k - 1)][static_cast<size_t>(i + span / 2)]);
    }
}

int ShortestPathTree::shallower(int i, int j) const {
    Vertex a = euler_[static_cast<size_t>(i)], b = euler_[static_cast<size_t>(j)];
    return core_.depth[static_cast<size_t>(a)] <= core_.depth[static_cast<size_t>(b)] ? i : j;
}

Vertex ShortestPathTree::lca(Vertex u, Vertex v) const {
    if (!core_.reachable(u) || !core_.reachable(v))
        throw error("lca: vertex unreachable from root");
    int i = first_[static_cast<size_t>(u)], j = first_[static_cast<size_t>(v)];
    if (i > j) std::swap(i, j);
    int len = j - i + 1;
    int k = std::bit_width(static_cast<unsigned>(len)) - 1;
    int best = shallower(table_[static_cast<size_t>(k)][static_cast<size_t>(i)],
                         table_[static_cast<size_t>(k)][static_cast<size_t>(j - (1 << k) + 1)]);
    return euler_[static_cast<size_t>(best)];
}

ShortestPathTree shortest_paths_from(const Graph& g, Vertex source, const FailureSet* excluded) {
    return ShortestPathTree(build_sp_tree(g, source, excluded));
}

bool edge_on_tree_path(const ShortestPathTree& t, Vertex x, Vertex y, Vertex eu, Vertex ev) {
    const TreeCore& c = t.core();
    if (!c.reachable(x) || !c.reachable(y)) throw error("edge_on_tree_path: endpoint unreachable");
    if (!c.reachable(eu) || !c.reachable(ev)) return false;
    Vertex child;
    if (c.parent[static_cast<size_t>(eu)] == ev)
        child = eu;
    else if (c.parent[static_cast<size_t>(ev)] == eu)
        child = ev;
    else
        return false;  // not a tree edge
    Vertex anc = t.lca(x, y);
    int dc = c.depth[static_cast<size_t>(child)];
    if (dc <= c.depth[static_cast<size_t>(anc)]) return false;
    return c.is_ancestor(child, x) || c.is_ancestor(child, y);
}

}  // namespace ftdiam
