#ifndef FTDIAM_FDO_HPP
#define FTDIAM_FDO_HPP

#include <memory>

#include "ftdiam/dso.hpp"
#include "ftdiam/graph.hpp"

namespace ftdiam {

// Every oracle query reports its answer together with the number of DSO
// invocations it spent, so call budgets can be asserted per query.
struct OracleAnswer {
    Distance value = 0;
    int dso_calls = 0;
};

// Fault-tolerant diameter oracle over an all-pairs DSO. Precomputes diam(G);
// a query F answers diam(G) plus the largest DSO estimate between endpoints
// of failed edges. Stretch 1 + sigma, at most 2f(2f-1) DSO calls (unordered
// endpoint pairs for undirected graphs, both orders for directed ones;
// reflexive pairs are skipped since their distance is 0).
class DiameterOracleAllPairs {
  public:
    static DiameterOracleAllPairs build(const Graph& g, std::shared_ptr<const AllPairsDso> dso);

    OracleAnswer query(const FailureSet& f) const;

    Distance base_diameter() const { return diam_g_; }
    int sensitivity() const { return dso_->sensitivity(); }

  private:
    Distance diam_g_ = 0;
    bool directed_ = false;
    std::shared_ptr<const AllPairsDso> dso_;
};

// Fault-tolerant diameter oracle over single-source DSOs rooted at s: one on
// the graph itself and one on the edge-reversed graph. Precomputes both
// eccentricities of s; a query sums them with the worst estimated distances
// from s to V(F) and from V(F) back to s. Stretch 2(1 + sigma), at most 4f
// DSO calls.
class DiameterOracleSingleSource {
  public:
    static DiameterOracleSingleSource build(const Graph& g, Vertex s,
                                            std::shared_ptr<const SingleSourceDso> dso_out,
                                            std::shared_ptr<const SingleSourceDso> dso_in);

    OracleAnswer query(const FailureSet& f) const;

    Vertex source() const { return s_; }
    Distance ecc_in() const { return ecc_in_; }
    Distance ecc_out() const { return ecc_out_; }
    int sensitivity() const { return dso_out_->sensitivity(); }

  private:
    Vertex s_ = 0;
    Distance ecc_in_ = 0;   // max_v d(v, s)
    Distance ecc_out_ = 0;  // max_v d(s, v)
    std::shared_ptr<const SingleSourceDso> dso_out_;
    std::shared_ptr<const SingleSourceDso> dso_in_;
};

}  // namespace ftdiam

#endif
