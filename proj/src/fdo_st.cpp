#include "ftdiam/fdo_st.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "ftdiam/metrics.hpp"

namespace ftdiam {

namespace {

// Smallest t with t*t >= n, i.e. ceil(sqrt(n)).
int ceil_isqrt(int n) {
    int t = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (t > 0 && static_cast<long long>(t - 1) * (t - 1) >= n) --t;
    while (static_cast<long long>(t) * t < n) ++t;
    return t;
}

// Relevant vertices: marked, with no marked vertex strictly between them and
// the root. An antichain; every marked vertex has a relevant one above it on
// its root path, so root-to-marked reachability equals root-to-relevant
// reachability.
std::vector<char> relevant_flags(const TreeCore& tree, const std::vector<char>& marks) {
    std::vector<char> rel(static_cast<size_t>(tree.n()), 0);
    auto ch = tree.children();
    std::vector<Vertex> stack{tree.root};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (marks[static_cast<size_t>(v)]) {
            rel[static_cast<size_t>(v)] = 1;
            continue;  // nothing deeper can be relevant
        }
        for (Vertex c : ch[static_cast<size_t>(v)]) stack.push_back(c);
    }
    return rel;
}

struct Selector {
    const TreeCore& tree;
    std::vector<std::vector<Vertex>> children;
    std::vector<char> relevant;
    std::vector<char> active;       // subtree holds a relevant vertex
    std::vector<Vertex> first_rel;  // first relevant in preorder within subtree, -1 if none

    Selector(const TreeCore& t, const std::vector<char>& marks)
        : tree(t), children(t.children()), relevant(relevant_flags(t, marks)) {
        int n = t.n();
        active.assign(static_cast<size_t>(n), 0);
        first_rel.assign(static_cast<size_t>(n), -1);
        std::vector<Vertex> order;
        order.reserve(static_cast<size_t>(n));
        std::vector<Vertex> stack{t.root};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (Vertex c : children[static_cast<size_t>(v)]) stack.push_back(c);
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Vertex v = *it;
            if (relevant[static_cast<size_t>(v)]) {
                active[static_cast<size_t>(v)] = 1;
                first_rel[static_cast<size_t>(v)] = v;
                continue;  // antichain: no relevant vertex below
            }
            for (Vertex c : children[static_cast<size_t>(v)]) {
                if (!active[static_cast<size_t>(c)]) continue;
                active[static_cast<size_t>(v)] = 1;
                if (first_rel[static_cast<size_t>(v)] == -1)
                    first_rel[static_cast<size_t>(v)] = first_rel[static_cast<size_t>(c)];
            }
        }
    }

    std::vector<Vertex> active_children(Vertex v) const {
        std::vector<Vertex> a;
        for (Vertex c : children[static_cast<size_t>(v)])
            if (active[static_cast<size_t>(c)]) a.push_back(c);
        return a;
    }

    void select(Vertex x, int budget, std::vector<Vertex>& out) const {
        while (true) {
            if (relevant[static_cast<size_t>(x)]) {
                out.push_back(x);
                return;
            }
            auto act = active_children(x);
            if (act.size() == 1) {
                x = act[0];  // chain vertex: descend for free
                continue;
            }
            select_group(act, budget, out);
            return;
        }
    }

    // A failure either disables an entire earlier branch or lands inside the
    // surviving one, so each side of the split gets budget - 1. With
    // budget + 1 branches the root paths are edge-disjoint and one pick per
    // branch always survives.
    void select_group(const std::vector<Vertex>& branches, int budget,
                      std::vector<Vertex>& out) const {
        if (branches.empty()) return;
        if (branches.size() == 1) {
            select(branches[0], budget, out);
            return;
        }
        if (budget == 0) {
            out.push_back(first_rel[static_cast<size_t>(branches[0])]);
            return;
        }
        if (static_cast<int>(branches.size()) >= budget + 1) {
            for (int i = 0; i <= budget; ++i)
                out.push_back(first_rel[static_cast<size_t>(branches[static_cast<size_t>(i)])]);
            return;
        }
        select(branches[0], budget - 1, out);
        std::vector<Vertex> rest(branches.begin() + 1, branches.end());
        select_group(rest, budget - 1, out);
    }
};

}  // namespace

std::vector<Vertex> select_leaves(const TreeCore& tree, const std::vector<char>& marks, int f) {
    if (static_cast<int>(marks.size()) != tree.n())
        throw error("select_leaves: mark array size mismatch");
    if (f < 0) throw error("select_leaves: negative sensitivity");
    Selector sel(tree, marks);
    if (!sel.active[static_cast<size_t>(tree.root)]) return {};
    std::vector<Vertex> out;
    sel.select(tree.root, f, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct Span {
    std::vector<char> in;
    std::vector<std::vector<Vertex>> children;
};

Span spanned_subtree(const TreeCore& tree, const std::vector<Vertex>& leaves) {
    Span s;
    s.in.assign(static_cast<size_t>(tree.n()), 0);
    s.in[static_cast<size_t>(tree.root)] = 1;
    for (Vertex l : leaves)
        for (Vertex x = l; x != -1 && !s.in[static_cast<size_t>(x)];
             x = tree.parent[static_cast<size_t>(x)])
            s.in[static_cast<size_t>(x)] = 1;
    s.children.assign(static_cast<size_t>(tree.n()), {});
    for (Vertex v = 0; v < tree.n(); ++v) {
        Vertex p = tree.parent[static_cast<size_t>(v)];
        if (p != -1 && s.in[static_cast<size_t>(v)])
            s.children[static_cast<size_t>(p)].push_back(v);
    }
    return s;
}

// Visits every maximal chain between consecutive terminals (root, branch
// vertices with two or more spanned children, leaves), top vertex first.
template <typename Fn>
void for_each_segment(const TreeCore& tree, const std::vector<Vertex>& leaves, Fn&& fn) {
    if (leaves.empty()) return;
    Span span = spanned_subtree(tree, leaves);
    std::vector<char> is_leaf(static_cast<size_t>(tree.n()), 0);
    for (Vertex l : leaves) is_leaf[static_cast<size_t>(l)] = 1;
    auto terminal = [&](Vertex v) {
        return v == tree.root || is_leaf[static_cast<size_t>(v)] ||
               span.children[static_cast<size_t>(v)].size() >= 2;
    };
    std::vector<Vertex> pending{tree.root};
    while (!pending.empty()) {
        Vertex top = pending.back();
        pending.pop_back();
        for (Vertex c : span.children[static_cast<size_t>(top)]) {
            PathSegment seg;
            seg.vertices.push_back(top);
            Vertex x = c;
            while (true) {
                seg.vertices.push_back(x);
                if (terminal(x)) break;
                x = span.children[static_cast<size_t>(x)][0];
            }
            pending.push_back(x);
            fn(std::move(seg));
        }
    }
}

}  // namespace

std::vector<PathSegment> long_segments(const TreeCore& tree, const std::vector<Vertex>& leaves,
                                       int threshold) {
    std::vector<PathSegment> out;
    for_each_segment(tree, leaves, [&](PathSegment seg) {
        if (static_cast<int>(seg.vertices.size()) - 1 >= threshold) out.push_back(std::move(seg));
    });
    return out;
}

PivotSet PivotSet::build(const std::vector<PathSegment>& paths, const Graph& g,
                         std::uint64_t seed) {
    PivotSet ps;
    if (paths.empty()) return ps;
    int n = g.n();
    double want = 3.0 * std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n));
    std::uint64_t samples = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(want)));
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt > 10000) throw error("pivots: sampling failed to hit all long paths");
        std::mt19937_64 rng(seed + attempt);
        std::set<Vertex> z;
        for (std::uint64_t i = 0; i < samples; ++i)
            z.insert(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)));
        bool all_hit = true;
        for (const PathSegment& p : paths) {
            bool hit = false;
            for (Vertex v : p.vertices)
                if (z.count(v)) {
                    hit = true;
                    break;
                }
            if (!hit) {
                all_hit = false;
                break;
            }
        }
        if (all_hit) {
            ps.z_.assign(z.begin(), z.end());
            break;
        }
    }
    ps.trees_.reserve(ps.z_.size());
    for (Vertex z : ps.z_) ps.trees_.push_back(shortest_paths_from(g, z));
    return ps;
}

bool PivotSet::contains(Vertex v) const {
    return std::binary_search(z_.begin(), z_.end(), v);
}

const ShortestPathTree& PivotSet::tree_for(Vertex z) const {
    auto it = std::lower_bound(z_.begin(), z_.end(), z);
    if (it == z_.end() || *it != z) throw error("pivots: unknown pivot");
    return trees_[static_cast<size_t>(it - z_.begin())];
}

Vertex PivotSet::hitting_pivot(const PathSegment& seg) const {
    Vertex best = -1;
    for (Vertex v : seg.vertices)
        if (contains(v) && (best == -1 || v < best)) best = v;
    return best;
}

int CompressedTree::index_of(Vertex v) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(v, -1));
    if (it == index_.end() || it->first != v) return -1;
    return it->second;
}

CompressedTree compress_tree(const TreeCore& tree, const std::vector<Vertex>& leaves,
                             int threshold, const PivotSet& pivots) {
    CompressedTree ct;
    ct.root = tree.root;
    ct.leaves = leaves;
    std::sort(ct.leaves.begin(), ct.leaves.end());

    struct Link {
        Vertex parent;
        Vertex child;
        EdgeId edge;   // -1 for representative links
        Vertex pivot;  // -1 for ordinary links
    };
    std::vector<Link> links;
    for_each_segment(tree, leaves, [&](PathSegment seg) {
        int edges = static_cast<int>(seg.vertices.size()) - 1;
        if (edges >= threshold) {
            Vertex z = pivots.hitting_pivot(seg);
            if (z == -1) throw error("compress_tree: long path not hit by any pivot");
            links.push_back({seg.vertices.front(), seg.vertices.back(), -1, z});
        } else {
            for (size_t i = 1; i < seg.vertices.size(); ++i) {
                Vertex child = seg.vertices[i];
                links.push_back({seg.vertices[i - 1], child,
                                 tree.parent_edge[static_cast<size_t>(child)], -1});
            }
        }
    });
    std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
        return a.parent != b.parent ? a.parent < b.parent : a.child < b.child;
    });
    auto children_of = [&](Vertex v) {
        Link probe{v, -1, 0, 0};
        auto lo = std::lower_bound(links.begin(), links.end(), probe,
                                   [](const Link& a, const Link& b) { return a.parent < b.parent; });
        auto hi = std::upper_bound(links.begin(), links.end(), probe,
                                   [](const Link& a, const Link& b) { return a.parent < b.parent; });
        return std::make_pair(lo, hi);
    };

    std::vector<char> is_leaf_v(static_cast<size_t>(tree.n()), 0);
    for (Vertex l : ct.leaves) is_leaf_v[static_cast<size_t>(l)] = 1;

    struct Frame {
        int idx;
        std::vector<Link>::const_iterator next, end;
    };
    ct.nodes.push_back(ct.root);
    ct.parent_idx.push_back(-1);
    ct.link_edge.push_back(-1);
    ct.link_pivot.push_back(-1);
    int pre = 0, post = 0;
    ct.pre.push_back(pre++);
    ct.post.push_back(-1);
    auto [rlo, rhi] = children_of(ct.root);
    std::vector<Frame> frames{{0, rlo, rhi}};
    while (!frames.empty()) {
        Frame& fr = frames.back();
        if (fr.next != fr.end) {
            const Link& link = *fr.next++;
            int idx = static_cast<int>(ct.nodes.size());
            ct.nodes.push_back(link.child);
            ct.parent_idx.push_back(fr.idx);
            ct.link_edge.push_back(link.edge);
            ct.link_pivot.push_back(link.pivot);
            if (link.edge == -1) ct.rep_links.push_back(idx);
            ct.pre.push_back(pre++);
            ct.post.push_back(-1);
            auto [lo, hi] = children_of(link.child);
            frames.push_back({idx, lo, hi});
        } else {
            ct.post[static_cast<size_t>(fr.idx)] = post++;
            frames.pop_back();
        }
    }

    ct.leaf_count.assign(ct.nodes.size(), 0);
    for (int i = static_cast<int>(ct.nodes.size()) - 1; i >= 0; --i) {
        if (is_leaf_v[static_cast<size_t>(ct.nodes[static_cast<size_t>(i)])])
            ct.leaf_count[static_cast<size_t>(i)] += 1;
        int p = ct.parent_idx[static_cast<size_t>(i)];
        if (p != -1)
            ct.leaf_count[static_cast<size_t>(p)] += ct.leaf_count[static_cast<size_t>(i)];
    }
    for (size_t i = 0; i < ct.nodes.size(); ++i)
        ct.index_.push_back({ct.nodes[i], static_cast<int>(i)});
    std::sort(ct.index_.begin(), ct.index_.end());
    return ct;
}

namespace {

// Domination pruning plus count arithmetic: subtract the subtree counts of
// the surviving (non-dominated) cut edges from the root total; the root
// still reaches a marked item iff the difference is positive.
template <typename AncestorOfParent>
bool root_keeps_marked(int total, const std::vector<std::pair<int, int>>& cuts,
                       AncestorOfParent&& dominates) {
    int lost = 0;
    for (size_t i = 0; i < cuts.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < cuts.size() && !dominated; ++j)
            if (j != i && dominates(cuts[j].first, cuts[i].first)) dominated = true;
        if (!dominated) lost += cuts[i].second;
    }
    return total - lost > 0;
}

bool full_reaches_marked(const MarkedTree& mt, const FailureSet& f, bool s_side,
                         const std::vector<Edge>& edges) {
    const TreeCore& t = mt.tree;
    const std::vector<int>& count = s_side ? mt.s_count : mt.t_count;
    if (count[static_cast<size_t>(t.root)] == 0) return false;
    std::vector<std::pair<int, int>> cuts;  // (lower endpoint, subtree count)
    for (EdgeId e : f.edges()) {
        const Edge& ed = edges[static_cast<size_t>(e)];
        Vertex lower = -1;
        if (t.parent_edge[static_cast<size_t>(ed.u)] == e)
            lower = ed.u;
        else if (t.parent_edge[static_cast<size_t>(ed.v)] == e)
            lower = ed.v;
        if (lower != -1) cuts.push_back({lower, count[static_cast<size_t>(lower)]});
    }
    auto dominates = [&](int cut_j, int cut_i) {
        Vertex parent = t.parent[static_cast<size_t>(cut_i)];
        return t.is_ancestor(static_cast<Vertex>(cut_j), parent);
    };
    return root_keeps_marked(count[static_cast<size_t>(t.root)], cuts, dominates);
}

bool compressed_reaches_leaf(const CompressedTree& ct, const FailureSet& f,
                             const PivotSet& pivots, const std::vector<Edge>& edges) {
    if (ct.leaves.empty()) return false;
    std::vector<int> cut_nodes;
    for (EdgeId e : f.edges()) {
        const Edge& ed = edges[static_cast<size_t>(e)];
        for (Vertex end : {ed.u, ed.v}) {
            int idx = ct.index_of(end);
            if (idx != -1 && ct.link_edge[static_cast<size_t>(idx)] == e) cut_nodes.push_back(idx);
        }
    }
    for (int idx : ct.rep_links) {
        Vertex top = ct.nodes[static_cast<size_t>(ct.parent_idx[static_cast<size_t>(idx)])];
        Vertex bottom = ct.nodes[static_cast<size_t>(idx)];
        const ShortestPathTree& tz = pivots.tree_for(ct.link_pivot[static_cast<size_t>(idx)]);
        for (EdgeId e : f.edges()) {
            const Edge& ed = edges[static_cast<size_t>(e)];
            if (edge_on_tree_path(tz, top, bottom, ed.u, ed.v)) {
                cut_nodes.push_back(idx);
                break;
            }
        }
    }
    std::sort(cut_nodes.begin(), cut_nodes.end());
    cut_nodes.erase(std::unique(cut_nodes.begin(), cut_nodes.end()), cut_nodes.end());
    std::vector<std::pair<int, int>> cuts;
    for (int idx : cut_nodes) cuts.push_back({idx, ct.leaf_count[static_cast<size_t>(idx)]});
    auto dominates = [&](int cut_j, int cut_i) {
        int pi = ct.parent_idx[static_cast<size_t>(cut_i)];
        return ct.pre[static_cast<size_t>(cut_j)] <= ct.pre[static_cast<size_t>(pi)] &&
               ct.post[static_cast<size_t>(cut_j)] >= ct.post[static_cast<size_t>(pi)];
    };
    return root_keeps_marked(ct.leaf_count[0], cuts, dominates);
}

}  // namespace

StDiameterOracle StDiameterOracle::build(const Graph& g, std::vector<Vertex> S,
                                         std::vector<Vertex> T,
                                         std::shared_ptr<const AllPairsDso> dso, int sensitivity,
                                         StRegime regime, std::uint64_t seed, int threads) {
    if (g.directed()) throw error("st oracle: undirected graphs only");
    if (S.empty() || T.empty()) throw error("st oracle: empty vertex set");
    if (!dso) throw error("st oracle: null dso");
    if (sensitivity < 1) throw error("st oracle: sensitivity must be at least 1");
    if (sensitivity > dso->sensitivity()) throw error("st oracle: dso sensitivity too small");
    for (Vertex v : S)
        if (!g.has_vertex(v)) throw error("st oracle: S vertex out of range");
    for (Vertex v : T)
        if (!g.has_vertex(v)) throw error("st oracle: T vertex out of range");
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());

    StDiameterOracle o;
    o.f_ = sensitivity;
    o.dso_ = std::move(dso);
    o.diam_st_ = st_diameter(g, S, T);
    o.graph_edges_ = g.edges();
    // compressed iff 2^f <= sqrt(n), i.e. 4^f <= n
    o.compressed_ =
        regime == StRegime::kCompressed ||
        (regime == StRegime::kAuto && sensitivity < 16 && (1LL << (2 * sensitivity)) <= g.n());

    int n = g.n();
    std::vector<TreeCore> cores(static_cast<size_t>(n));
    int workers = std::max(1, threads);
    if (workers == 1) {
        for (Vertex v = 0; v < n; ++v) cores[static_cast<size_t>(v)] = build_sp_tree(g, v);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int v = next.fetch_add(1); v < n; v = next.fetch_add(1))
                    cores[static_cast<size_t>(v)] = build_sp_tree(g, static_cast<Vertex>(v));
            });
        for (auto& th : pool) th.join();
    }

    // Membership marks from the trees' distance arrays: the tree of v holds
    // an s-mark iff d(s,v) + d(v,t) = d(s,t) for some t, and symmetrically
    // for t-marks.
    std::vector<std::vector<char>> s_marks(static_cast<size_t>(n)),
        t_marks(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        s_marks[static_cast<size_t>(v)].assign(static_cast<size_t>(n), 0);
        t_marks[static_cast<size_t>(v)].assign(static_cast<size_t>(n), 0);
    }
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex s : S) {
            Distance dsv = cores[static_cast<size_t>(s)].dist[static_cast<size_t>(v)];
            if (is_inf(dsv)) continue;
            for (Vertex t : T) {
                Distance dst = cores[static_cast<size_t>(s)].dist[static_cast<size_t>(t)];
                Distance dvt = cores[static_cast<size_t>(t)].dist[static_cast<size_t>(v)];
                if (is_inf(dst) || is_inf(dvt)) continue;
                if (dsv + dvt == dst) {
                    s_marks[static_cast<size_t>(v)][static_cast<size_t>(s)] = 1;
                    break;
                }
            }
        }
        for (Vertex t : T) {
            Distance dvt = cores[static_cast<size_t>(t)].dist[static_cast<size_t>(v)];
            if (is_inf(dvt)) continue;
            for (Vertex s : S) {
                Distance dst = cores[static_cast<size_t>(s)].dist[static_cast<size_t>(t)];
                Distance dsv = cores[static_cast<size_t>(s)].dist[static_cast<size_t>(v)];
                if (is_inf(dst) || is_inf(dsv)) continue;
                if (dsv + dvt == dst) {
                    t_marks[static_cast<size_t>(v)][static_cast<size_t>(t)] = 1;
                    break;
                }
            }
        }
    }

    auto subtree_counts = [](const TreeCore& t, const std::vector<char>& marks) {
        std::vector<int> count(static_cast<size_t>(t.n()), 0);
        auto ch = t.children();
        std::vector<Vertex> order, stack{t.root};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (Vertex c : ch[static_cast<size_t>(v)]) stack.push_back(c);
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Vertex v = *it;
            count[static_cast<size_t>(v)] = marks[static_cast<size_t>(v)] ? 1 : 0;
            for (Vertex c : ch[static_cast<size_t>(v)])
                count[static_cast<size_t>(v)] += count[static_cast<size_t>(c)];
        }
        return count;
    };

    if (!o.compressed_) {
        o.trees_.reserve(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            MarkedTree mt;
            mt.tree = std::move(cores[static_cast<size_t>(v)]);
            mt.s_mark = std::move(s_marks[static_cast<size_t>(v)]);
            mt.t_mark = std::move(t_marks[static_cast<size_t>(v)]);
            mt.s_count = subtree_counts(mt.tree, mt.s_mark);
            mt.t_count = subtree_counts(mt.tree, mt.t_mark);
            o.trees_.push_back(std::move(mt));
        }
        return o;
    }

    int threshold = ceil_isqrt(n);
    std::vector<std::vector<Vertex>> s_leaves(static_cast<size_t>(n)),
        t_leaves(static_cast<size_t>(n));
    std::vector<PathSegment> all_long;
    for (Vertex v = 0; v < n; ++v) {
        const TreeCore& core = cores[static_cast<size_t>(v)];
        s_leaves[static_cast<size_t>(v)] =
            select_leaves(core, s_marks[static_cast<size_t>(v)], sensitivity);
        t_leaves[static_cast<size_t>(v)] =
            select_leaves(core, t_marks[static_cast<size_t>(v)], sensitivity);
        for (bool s_side : {true, false}) {
            auto segs = long_segments(
                core, s_side ? s_leaves[static_cast<size_t>(v)] : t_leaves[static_cast<size_t>(v)],
                threshold);
            if (static_cast<int>(segs.size()) > threshold)
                throw error("st oracle: tree exceeds the long-path budget");
            for (auto& seg : segs) all_long.push_back(std::move(seg));
        }
    }
    o.pivots_ = PivotSet::build(all_long, g, seed);
    o.s_trees_.reserve(static_cast<size_t>(n));
    o.t_trees_.reserve(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const TreeCore& core = cores[static_cast<size_t>(v)];
        o.s_trees_.push_back(
            compress_tree(core, s_leaves[static_cast<size_t>(v)], threshold, o.pivots_));
        o.t_trees_.push_back(
            compress_tree(core, t_leaves[static_cast<size_t>(v)], threshold, o.pivots_));
    }
    return o;
}

std::vector<Vertex> StDiameterOracle::prime_set(const FailureSet& f, bool s_side) const {
    std::vector<Vertex> out;
    for (Vertex v : f.endpoints()) {
        bool in;
        if (!compressed_) {
            in = full_reaches_marked(trees_[static_cast<size_t>(v)], f, s_side, graph_edges_);
        } else {
            const CompressedTree& ct =
                s_side ? s_trees_[static_cast<size_t>(v)] : t_trees_[static_cast<size_t>(v)];
            in = compressed_reaches_leaf(ct, f, pivots_, graph_edges_);
        }
        if (in) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> StDiameterOracle::compute_s_prime(const FailureSet& f) const {
    if (f.size() > f_) throw error("st oracle: failure set exceeds sensitivity");
    return prime_set(f, true);
}

std::vector<Vertex> StDiameterOracle::compute_t_prime(const FailureSet& f) const {
    if (f.size() > f_) throw error("st oracle: failure set exceeds sensitivity");
    return prime_set(f, false);
}

OracleAnswer StDiameterOracle::query(const FailureSet& f) const {
    if (f.size() > f_) throw error("st oracle: failure set exceeds sensitivity");
    auto sp = prime_set(f, true);
    auto tp = prime_set(f, false);
    Distance worst = 0;
    int calls = 0;
    for (Vertex u : sp)
        for (Vertex v : tp) {
            worst = std::max(worst, dso_->query(u, v, f));
            ++calls;
        }
    return {dist_add(diam_st_, worst), calls};
}

const MarkedTree& StDiameterOracle::marked_tree(Vertex v) const {
    if (compressed_) throw error("st oracle: no marked trees in compressed regime");
    return trees_.at(static_cast<size_t>(v));
}

const CompressedTree& StDiameterOracle::compressed_tree(Vertex v, bool s_side) const {
    if (!compressed_) throw error("st oracle: not in compressed regime");
    return s_side ? s_trees_.at(static_cast<size_t>(v)) : t_trees_.at(static_cast<size_t>(v));
}

const PivotSet& StDiameterOracle::pivot_set() const {
    if (!compressed_) throw error("st oracle: not in compressed regime");
    return pivots_;
}

}  // namespace ftdiam
