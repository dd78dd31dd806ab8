#ifndef FTDIAM_BENCH_HPP
#define FTDIAM_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ftdiam/fdo_st.hpp"
#include "ftdiam/graph.hpp"

namespace ftdiam {

enum class OracleKind { kThm1, kThm2, kFdoSt, kSt, kLemma, kThm5, kExact };

OracleKind parse_oracle_selector(const std::string& s);
std::string oracle_selector_name(OracleKind k);

// DSO selector: "exact" or "stretched:<lambda>" with lambda a decimal >= 1.
// The factor is kept as an exact rational so sandwich checks stay integral.
struct DsoConfig {
    bool stretched = false;
    double lambda = 1.0;
    long long lambda_num = 1;
    long long lambda_den = 1;
    std::string raw = "exact";
};

DsoConfig parse_dso_selector(const std::string& s);

struct RunConfig {
    std::string graph_path;
    OracleKind oracle = OracleKind::kThm1;
    DsoConfig dso;
    int f = 1;
    std::string s_set_path, t_set_path;  // empty = all vertices
    Vertex source = -1;                  // -1 = default for the oracle kind
    Vertex sink = -1;
    StRegime regime = StRegime::kAuto;
    std::uint64_t seed = 0;
    std::string queries;  // file path or "random:<count>:<seed>"
    bool verify = false;
    bool timing = false;
    int threads = 1;
};

// Upper stretch bound of an oracle kind as a + b * sigma, with sigma the
// stretch of the configured DSO.
struct StretchBound {
    long long a = 1, b = 0;
};
StretchBound oracle_stretch_terms(OracleKind k);

// Per-query DSO call budget.
int oracle_call_budget(OracleKind k, int f);

// Newline-separated vertex ids, '#' comments allowed.
std::vector<Vertex> load_vertex_set(const std::string& path, const Graph& g);

// One query per line: comma-separated `u-v` edge tokens, or `none` for the
// empty failure set; rejects unknown edges with their line number.
std::vector<FailureSet> load_queries_file(const std::string& path, const Graph& g);

// `count` failure sets, each drawn uniformly over f-subsets of the edge set
// (distinct edges within a set). Deterministic given the seed.
std::vector<FailureSet> random_queries(const Graph& g, int f, int count, std::uint64_t seed);

// Runs the configured oracle over the query stream, writing one JSON object
// per query plus a final summary object to `out`. Deterministic
// byte-identical output for identical configs unless `timing` is set (wall
// times are only emitted on request). Returns 0, or 1 when --verify found a
// sandwich or budget violation.
int run_benchmark(const RunConfig& cfg, std::ostream& out);

}  // namespace ftdiam

#endif
