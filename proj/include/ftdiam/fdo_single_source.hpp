#ifndef FTDIAM_FDO_SINGLE_SOURCE_HPP
#define FTDIAM_FDO_SINGLE_SOURCE_HPP

#include <memory>
#include <vector>

#include "ftdiam/fdo.hpp"
#include "ftdiam/spt.hpp"

namespace ftdiam {

// Fault-tolerant sT-diameter oracle: fixed source s, target set T, backed by
// a single-source DSO at s. Keeps the shortest-path tree of s with per-node
// counts of T-descendants and C = max_{t in T} d(s,t). A query finds the
// roots of the tree components that still hold a T-vertex (at most f+1 of
// them) and answers C plus the worst DSO estimate among those roots.
// Stretch 1 + 2sigma, at most f+1 DSO calls. Undirected graphs only.
class SingleSourceStOracle {
  public:
    static SingleSourceStOracle build(const Graph& g, Vertex s, std::vector<Vertex> T,
                                      std::shared_ptr<const SingleSourceDso> dso);

    OracleAnswer query(const FailureSet& f) const;

    // X_F: roots of the components of the tree minus the failures that
    // contain a T-vertex, via pre/post ancestry and count arithmetic.
    std::vector<Vertex> component_roots_with_targets(const FailureSet& f) const;

    Vertex source() const { return s_; }
    Distance max_target_dist() const { return c_; }  // C
    const TreeCore& tree() const { return tree_; }
    int target_count(Vertex v) const { return count_[static_cast<size_t>(v)]; }
    int sensitivity() const { return dso_->sensitivity(); }

  private:
    Vertex s_ = 0;
    Distance c_ = 0;
    TreeCore tree_;
    std::vector<int> count_;
    std::vector<Edge> graph_edges_;
    std::shared_ptr<const SingleSourceDso> dso_;
};

// a + b + min(a, b), with infinity absorbing.
Distance combine_st_estimates(Distance d_ts, Distance d_st);

enum class CombineMode { kLemma, kThm5 };

// Fault-tolerant ST-diameter oracle from two single-source DSOs: an sT
// oracle at some s in S, a tS oracle at some t in T, and (for the three-leg
// variant) the raw DSO estimate of d(s,t). The two-leg combination answers
// D_tS + D_sT + min of the two; the three-leg one answers D_tS + d(s,t)
// estimate + D_sT, which tightens the stretch to 2 + 5sigma.
class CombinedStOracle {
  public:
    static CombinedStOracle build(const Graph& g, const std::vector<Vertex>& S,
                                  const std::vector<Vertex>& T, Vertex s, Vertex t,
                                  std::shared_ptr<const SingleSourceDso> dso_at_s,
                                  std::shared_ptr<const SingleSourceDso> dso_at_t,
                                  CombineMode mode);

    OracleAnswer query(const FailureSet& f) const;

    const SingleSourceStOracle& st_side() const { return sT_; }
    const SingleSourceStOracle& ts_side() const { return tS_; }
    CombineMode mode() const { return mode_; }
    int sensitivity() const { return sT_.sensitivity(); }

  private:
    SingleSourceStOracle sT_, tS_;
    std::shared_ptr<const SingleSourceDso> dso_at_s_;
    Vertex s_ = 0, t_ = 0;
    CombineMode mode_ = CombineMode::kThm5;
};

}  // namespace ftdiam

#endif
