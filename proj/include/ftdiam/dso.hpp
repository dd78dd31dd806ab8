#ifndef FTDIAM_DSO_HPP
#define FTDIAM_DSO_HPP

#include <memory>

#include "ftdiam/graph.hpp"

namespace ftdiam {

// All-pairs distance sensitivity oracle: query(u, v, F) returns an estimate
// of d_{G-F}(u, v) with d <= estimate <= stretch() * d, for |F| <= f. The
// diameter oracles consume DSOs only through this interface and
// SingleSourceDso; they never touch the graph at query time except through
// their own precomputed structures. Implementations must be safe under
// concurrent queries.
class AllPairsDso {
  public:
    virtual ~AllPairsDso() = default;
    virtual Distance query(Vertex u, Vertex v, const FailureSet& f) const = 0;
    virtual double stretch() const = 0;
    virtual int sensitivity() const = 0;
};

// Single-source variant: the source is fixed, queries give the target only.
class SingleSourceDso {
  public:
    virtual ~SingleSourceDso() = default;
    virtual Distance query(Vertex v, const FailureSet& f) const = 0;
    virtual Vertex source() const = 0;
    virtual double stretch() const = 0;
    virtual int sensitivity() const = 0;
};

// Exact reference oracle: recomputes d_{G-F}(u, v) from scratch on every
// query. Stretch exactly 1, stateless between queries.
class RecomputeDso final : public AllPairsDso {
  public:
    RecomputeDso(std::shared_ptr<const Graph> g, int sensitivity);
    Distance query(Vertex u, Vertex v, const FailureSet& f) const override;
    double stretch() const override { return 1.0; }
    int sensitivity() const override { return f_; }

  private:
    std::shared_ptr<const Graph> g_;
    int f_;
};

class RecomputeSingleSourceDso final : public SingleSourceDso {
  public:
    RecomputeSingleSourceDso(std::shared_ptr<const Graph> g, Vertex source, int sensitivity);

    // Oracle for d_{G-F}(v, s): preprocesses the edge-reversed graph with the
    // same source and edge ids. For undirected graphs this equals the forward
    // oracle.
    static std::shared_ptr<RecomputeSingleSourceDso> on_reversed(const Graph& g, Vertex source,
                                                                 int sensitivity);

    Distance query(Vertex v, const FailureSet& f) const override;
    Vertex source() const override { return s_; }
    double stretch() const override { return 1.0; }
    int sensitivity() const override { return f_; }

  private:
    std::shared_ptr<const Graph> g_;
    Vertex s_;
    int f_;
};

// Wraps any all-pairs DSO and inflates finite answers by a deterministic
// per-query factor in [1, lambda]; the hash of (u, v, F) picks the factor, so
// adversarial stretch testing stays reproducible. Infinite answers pass
// through untouched.
class StretchedDso final : public AllPairsDso {
  public:
    StretchedDso(std::shared_ptr<const AllPairsDso> inner, double lambda);
    Distance query(Vertex u, Vertex v, const FailureSet& f) const override;
    double stretch() const override;
    int sensitivity() const override { return inner_->sensitivity(); }

  private:
    std::shared_ptr<const AllPairsDso> inner_;
    double lambda_;
};

class StretchedSingleSourceDso final : public SingleSourceDso {
  public:
    StretchedSingleSourceDso(std::shared_ptr<const SingleSourceDso> inner, double lambda);
    Distance query(Vertex v, const FailureSet& f) const override;
    Vertex source() const override { return inner_->source(); }
    double stretch() const override;
    int sensitivity() const override { return inner_->sensitivity(); }

  private:
    std::shared_ptr<const SingleSourceDso> inner_;
    double lambda_;
};

// Deterministic inflation shared by both wrappers: a value in
// [base, floor(lambda * base)] chosen by hashing the query.
Distance inflate_estimate(Distance base, double lambda, std::uint64_t query_hash);
std::uint64_t failure_hash(std::uint64_t seed, const FailureSet& f);

}  // namespace ftdiam

#endif
