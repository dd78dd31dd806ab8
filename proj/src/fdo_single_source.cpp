#include "ftdiam/fdo_single_source.hpp"

#include <algorithm>

namespace ftdiam {

SingleSourceStOracle SingleSourceStOracle::build(const Graph& g, Vertex s, std::vector<Vertex> T,
                                                 std::shared_ptr<const SingleSourceDso> dso) {
    if (g.directed()) throw error("sT oracle: undirected graphs only");
    if (T.empty()) throw error("sT oracle: empty target set");
    if (!g.has_vertex(s)) throw error("sT oracle: source out of range");
    if (!dso) throw error("sT oracle: null dso");
    if (dso->source() != s) throw error("sT oracle: dso source mismatch");
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    for (Vertex t : T)
        if (!g.has_vertex(t)) throw error("sT oracle: target out of range");

    SingleSourceStOracle o;
    o.s_ = s;
    o.dso_ = std::move(dso);
    o.tree_ = build_sp_tree(g, s);
    o.graph_edges_ = g.edges();
    std::vector<char> in_t(static_cast<size_t>(g.n()), 0);
    o.c_ = 0;
    for (Vertex t : T) {
        in_t[static_cast<size_t>(t)] = 1;
        o.c_ = std::max(o.c_, o.tree_.dist[static_cast<size_t>(t)]);
    }
    // count(v) = T-vertices in the subtree of v, including v itself
    o.count_.assign(static_cast<size_t>(g.n()), 0);
    auto ch = o.tree_.children();
    std::vector<Vertex> order, stack{s};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex c : ch[static_cast<size_t>(v)]) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        o.count_[static_cast<size_t>(v)] = in_t[static_cast<size_t>(v)] ? 1 : 0;
        for (Vertex c : ch[static_cast<size_t>(v)])
            o.count_[static_cast<size_t>(v)] += o.count_[static_cast<size_t>(c)];
    }
    return o;
}

std::vector<Vertex> SingleSourceStOracle::component_roots_with_targets(
    const FailureSet& f) const {
    // B_0: the source plus b(e), the endpoint farther from the source, for
    // every failed edge that lies in the tree. Non-tree failures contribute
    // nothing.
    std::vector<Vertex> b0{s_};
    for (EdgeId e : f.edges()) {
        const Edge& ed = graph_edges_[static_cast<size_t>(e)];
        if (tree_.parent_edge[static_cast<size_t>(ed.u)] == e)
            b0.push_back(ed.u);
        else if (tree_.parent_edge[static_cast<size_t>(ed.v)] == e)
            b0.push_back(ed.v);
    }
    // Each member charges its subtree count to its nearest proper ancestor
    // inside B_0 (the one with the highest pre number); members whose
    // residual stays positive root a component that still holds a T-vertex.
    size_t k = b0.size();
    std::vector<int> residual(k);
    for (size_t i = 0; i < k; ++i) residual[i] = count_[static_cast<size_t>(b0[i])];
    for (size_t i = 0; i < k; ++i) {
        int best = -1;
        for (size_t j = 0; j < k; ++j) {
            if (b0[j] == b0[i]) continue;
            if (!tree_.is_ancestor(b0[j], b0[i])) continue;
            if (best == -1 || tree_.pre[static_cast<size_t>(b0[j])] >
                                  tree_.pre[static_cast<size_t>(b0[static_cast<size_t>(best)])])
                best = static_cast<int>(j);
        }
        if (best != -1) residual[static_cast<size_t>(best)] -= count_[static_cast<size_t>(b0[i])];
    }
    std::vector<Vertex> roots;
    for (size_t i = 0; i < k; ++i)
        if (residual[i] > 0) roots.push_back(b0[i]);
    std::sort(roots.begin(), roots.end());
    return roots;
}

OracleAnswer SingleSourceStOracle::query(const FailureSet& f) const {
    if (f.size() > sensitivity()) throw error("sT oracle: failure set exceeds sensitivity");
    if (is_inf(c_)) return {kInfDist, 0};
    auto roots = component_roots_with_targets(f);
    Distance worst = 0;
    int calls = 0;
    for (Vertex x : roots) {
        worst = std::max(worst, dso_->query(x, f));
        ++calls;
    }
    return {dist_add(c_, worst), calls};
}

Distance combine_st_estimates(Distance d_ts, Distance d_st) {
    return dist_add(dist_add(d_ts, d_st), std::min(d_ts, d_st));
}

CombinedStOracle CombinedStOracle::build(const Graph& g, const std::vector<Vertex>& S,
                                         const std::vector<Vertex>& T, Vertex s, Vertex t,
                                         std::shared_ptr<const SingleSourceDso> dso_at_s,
                                         std::shared_ptr<const SingleSourceDso> dso_at_t,
                                         CombineMode mode) {
    if (S.empty() || T.empty()) throw error("combined oracle: empty vertex set");
    if (std::find(S.begin(), S.end(), s) == S.end())
        throw error("combined oracle: s must be a member of S");
    if (std::find(T.begin(), T.end(), t) == T.end())
        throw error("combined oracle: t must be a member of T");
    CombinedStOracle o;
    o.sT_ = SingleSourceStOracle::build(g, s, T, dso_at_s);
    o.tS_ = SingleSourceStOracle::build(g, t, S, std::move(dso_at_t));
    o.dso_at_s_ = std::move(dso_at_s);
    o.s_ = s;
    o.t_ = t;
    o.mode_ = mode;
    return o;
}

OracleAnswer CombinedStOracle::query(const FailureSet& f) const {
    OracleAnswer ts = tS_.query(f);
    OracleAnswer st = sT_.query(f);
    if (mode_ == CombineMode::kLemma) {
        return {combine_st_estimates(ts.value, st.value), ts.dso_calls + st.dso_calls};
    }
    Distance mid = dso_at_s_->query(t_, f);
    return {dist_add(dist_add(ts.value, mid), st.value), ts.dso_calls + st.dso_calls + 1};
}

}  // namespace ftdiam
