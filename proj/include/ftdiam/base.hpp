#ifndef FTDIAM_BASE_HPP
#define FTDIAM_BASE_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ftdiam {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

// Distances and diameter estimates. kInfDist is the +infinity sentinel for
// disconnection; it is a value, never an error.
using Distance = std::int64_t;
constexpr Distance kInfDist = std::numeric_limits<Distance>::max();

inline bool is_inf(Distance d) { return d == kInfDist; }

// Saturating addition: x + inf = inf, and finite sums that would overflow
// saturate to inf as well.
inline Distance dist_add(Distance a, Distance b) {
    if (is_inf(a) || is_inf(b)) return kInfDist;
    if (a > kInfDist - b) return kInfDist;
    return a + b;
}

inline std::string dist_to_string(Distance d) {
    return is_inf(d) ? std::string("inf") : std::to_string(d);
}

// Contract violations (bad inputs, parse failures, broken preconditions).
class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ftdiam

#endif
