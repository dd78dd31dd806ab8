#ifndef FTDIAM_LOWER_BOUND_HPP
#define FTDIAM_LOWER_BOUND_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ftdiam/graph.hpp"

namespace ftdiam {

// Binary r x r x r tensor with 1-based indices.
class LbTensor {
  public:
    static LbTensor zeros(int r);
    static LbTensor ones(int r);
    static LbTensor random(int r, std::uint64_t seed);

    int root() const { return r_; }
    bool get(int i, int j, int k) const;
    void set(int i, int j, int k, bool value);

  private:
    explicit LbTensor(int r);
    size_t offset(int i, int j, int k) const;
    int r_;
    std::vector<std::uint8_t> bits_;
};

// The four-layer dichotomy graph on n = 6N vertices (N = r^2): layers A and
// D of size N, B and C of size 2N, wired by index-match rules; a tensor adds
// edges from A into the k=1 slice of B and from the k=1 slice of C into D.
// Row-major labeling: a[i,j] -> (i-1)r + (j-1), B and C interleave k, then D.
struct LbGraph {
    Graph g;
    int r = 0;

    int N() const { return r * r; }
    Vertex a(int i, int j) const;
    Vertex b(int i, int j, int k) const;
    Vertex c(int i, int j, int k) const;
    Vertex d(int i, int j) const;
    std::string label(Vertex v) const;
};

// Base graph (no tensor edges); N must be a perfect square.
LbGraph build_h(int N);

// Supergraph with the tensor edges added; edge ids of the base graph are
// preserved, tensor edges are appended.
LbGraph build_g(const LbGraph& h, const LbTensor& m);

// The two base failures for indices (i,j,x,y) with i != x and j != y, plus
// the swap pairs that are edges of the supergraph only when the governing
// tensor entries are 1.
struct LbFailures {
    FailureSet f;
    std::pair<Vertex, Vertex> f_prime_1, f_prime_2;
};
LbFailures failure_sets(const LbGraph& g, int i, int j, int x, int y);

enum class Dichotomy { kAtMost3, kAtLeast5 };

// Requires M[i,j,y] == M[i,x,y]; brute-forces diam(G - F) and checks the
// classification: at most 3 when both entries are 1, and at least 5 (also
// for the a[i,j]-d[x,y] distance specifically) when both are 0. Throws if
// the check fails or the two entries differ.
Dichotomy verify_dichotomy(const LbGraph& g_with_m, const LbTensor& m, int i, int j, int x, int y);

}  // namespace ftdiam

#endif
