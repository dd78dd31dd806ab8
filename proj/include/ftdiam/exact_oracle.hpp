#ifndef FTDIAM_EXACT_ORACLE_HPP
#define FTDIAM_EXACT_ORACLE_HPP

#include <vector>

#include "ftdiam/graph.hpp"

namespace ftdiam {

// Brute-force ground truth: one SSSP per source on G-F, recomputed from
// scratch on every call so it stays independent of the structures under
// test. Deliberately slow.
Distance exact_st_diameter(const Graph& g, const std::vector<Vertex>& S,
                           const std::vector<Vertex>& T, const FailureSet& f);

// diam(G-F) over all ordered vertex pairs.
Distance exact_diameter(const Graph& g, const FailureSet& f);

}  // namespace ftdiam

#endif
