#include "ftdiam/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ftdiam/exact_oracle.hpp"
#include "ftdiam/fdo.hpp"
#include "ftdiam/fdo_single_source.hpp"
#include "ftdiam/fdo_st.hpp"
#include "ftdiam/metrics.hpp"

namespace ftdiam {

namespace {

using json = nlohmann::ordered_json;

json dist_json(Distance d) {
    if (is_inf(d)) return json("inf");
    return json(d);
}

}  // namespace

OracleKind parse_oracle_selector(const std::string& s) {
    if (s == "thm1") return OracleKind::kThm1;
    if (s == "thm2") return OracleKind::kThm2;
    if (s == "fdo-st") return OracleKind::kFdoSt;
    if (s == "sT") return OracleKind::kSt;
    if (s == "lemma") return OracleKind::kLemma;
    if (s == "thm5") return OracleKind::kThm5;
    if (s == "exact") return OracleKind::kExact;
    throw error("unknown oracle selector: " + s);
}

std::string oracle_selector_name(OracleKind k) {
    switch (k) {
        case OracleKind::kThm1: return "thm1";
        case OracleKind::kThm2: return "thm2";
        case OracleKind::kFdoSt: return "fdo-st";
        case OracleKind::kSt: return "sT";
        case OracleKind::kLemma: return "lemma";
        case OracleKind::kThm5: return "thm5";
        case OracleKind::kExact: return "exact";
    }
    throw error("bad oracle kind");
}

DsoConfig parse_dso_selector(const std::string& s) {
    DsoConfig cfg;
    cfg.raw = s;
    if (s == "exact") return cfg;
    const std::string prefix = "stretched:";
    if (s.rfind(prefix, 0) != 0) throw error("unknown dso selector: " + s);
    std::string num = s.substr(prefix.size());
    if (num.empty()) throw error("dso selector: missing inflation factor");
    size_t dot = num.find('.');
    std::string ip = dot == std::string::npos ? num : num.substr(0, dot);
    std::string fp = dot == std::string::npos ? "" : num.substr(dot + 1);
    if (ip.empty() || fp.size() > 9) throw error("dso selector: bad inflation factor: " + num);
    for (char c : ip + fp)
        if (c < '0' || c > '9') throw error("dso selector: bad inflation factor: " + num);
    long long n = 0, d = 1;
    for (char c : ip + fp) n = n * 10 + (c - '0');
    for (size_t i = 0; i < fp.size(); ++i) d *= 10;
    if (n < d) throw error("dso selector: inflation factor must be at least 1");
    cfg.stretched = true;
    cfg.lambda_num = n;
    cfg.lambda_den = d;
    cfg.lambda = static_cast<double>(n) / static_cast<double>(d);
    return cfg;
}

StretchBound oracle_stretch_terms(OracleKind k) {
    switch (k) {
        case OracleKind::kThm1: return {1, 1};
        case OracleKind::kThm2: return {2, 2};
        case OracleKind::kFdoSt: return {1, 3};
        case OracleKind::kSt: return {1, 2};
        case OracleKind::kLemma: return {3, 6};
        case OracleKind::kThm5: return {2, 5};
        case OracleKind::kExact: return {1, 0};
    }
    throw error("bad oracle kind");
}

int oracle_call_budget(OracleKind k, int f) {
    switch (k) {
        case OracleKind::kThm1: return 4 * f * f;
        case OracleKind::kThm2: return 4 * f;
        case OracleKind::kFdoSt: return 4 * f * f;
        case OracleKind::kSt: return f + 1;
        case OracleKind::kLemma: return 2 * (f + 1);
        case OracleKind::kThm5: return 2 * (f + 1) + 1;
        case OracleKind::kExact: return 0;
    }
    throw error("bad oracle kind");
}

std::vector<Vertex> load_vertex_set(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw error("cannot open vertex set file: " + path);
    std::vector<Vertex> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream is(line);
        long long v;
        if (!(is >> v) || !g.has_vertex(static_cast<Vertex>(v)))
            throw error(path + " line " + std::to_string(lineno) + ": bad vertex id");
        out.push_back(static_cast<Vertex>(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw error(path + ": empty vertex set");
    return out;
}

std::vector<FailureSet> load_queries_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw error("cannot open queries file: " + path);
    std::vector<FailureSet> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        size_t last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);
        if (body == "none") {
            out.emplace_back();
            continue;
        }
        std::vector<std::pair<Vertex, Vertex>> pairs;
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t dash = tok.find('-');
            if (dash == std::string::npos)
                throw error(path + " line " + std::to_string(lineno) + ": bad edge token " + tok);
            try {
                Vertex u = static_cast<Vertex>(std::stoll(tok.substr(0, dash)));
                Vertex v = static_cast<Vertex>(std::stoll(tok.substr(dash + 1)));
                if (g.find_edge(u, v) == -1)
                    throw error(path + " line " + std::to_string(lineno) + ": no such edge " +
                                tok);
                pairs.emplace_back(u, v);
            } catch (const std::invalid_argument&) {
                throw error(path + " line " + std::to_string(lineno) + ": bad edge token " + tok);
            }
        }
        out.push_back(FailureSet::from_pairs(g, pairs));
    }
    return out;
}

std::vector<FailureSet> random_queries(const Graph& g, int f, int count, std::uint64_t seed) {
    if (f < 0 || count < 0) throw error("random queries: bad parameters");
    if (count > 0 && f > g.m()) throw error("random queries: f exceeds edge count");
    std::mt19937_64 rng(seed);
    std::vector<FailureSet> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<EdgeId> pool(static_cast<size_t>(g.m()));
    for (int i = 0; i < g.m(); ++i) pool[static_cast<size_t>(i)] = i;
    for (int q = 0; q < count; ++q) {
        // partial Fisher-Yates: f distinct edges, uniform over f-subsets
        for (int i = 0; i < f; ++i) {
            size_t j = static_cast<size_t>(i) +
                       static_cast<size_t>(rng() % static_cast<std::uint64_t>(g.m() - i));
            std::swap(pool[static_cast<size_t>(i)], pool[j]);
        }
        out.emplace_back(g, std::vector<EdgeId>(pool.begin(), pool.begin() + f));
    }
    return out;
}

namespace {

struct BuiltOracle {
    std::function<OracleAnswer(const FailureSet&)> query;
    std::function<Distance(const FailureSet&)> exact;  // ground truth for --verify
    double build_ms = 0;
};

std::shared_ptr<const AllPairsDso> make_all_pairs_dso(const std::shared_ptr<const Graph>& g,
                                                      const RunConfig& cfg) {
    std::shared_ptr<const AllPairsDso> dso = std::make_shared<RecomputeDso>(g, cfg.f);
    if (cfg.dso.stretched) dso = std::make_shared<StretchedDso>(dso, cfg.dso.lambda);
    return dso;
}

std::shared_ptr<const SingleSourceDso> make_single_source_dso(const std::shared_ptr<const Graph>& g,
                                                              Vertex s, const RunConfig& cfg,
                                                              bool reversed) {
    std::shared_ptr<const SingleSourceDso> dso;
    if (reversed)
        dso = RecomputeSingleSourceDso::on_reversed(*g, s, cfg.f);
    else
        dso = std::make_shared<RecomputeSingleSourceDso>(g, s, cfg.f);
    if (cfg.dso.stretched)
        dso = std::make_shared<StretchedSingleSourceDso>(dso, cfg.dso.lambda);
    return dso;
}

BuiltOracle build_oracle(const std::shared_ptr<const Graph>& g, const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    BuiltOracle built;
    std::vector<Vertex> S =
        cfg.s_set_path.empty() ? all_vertices(*g) : load_vertex_set(cfg.s_set_path, *g);
    std::vector<Vertex> T =
        cfg.t_set_path.empty() ? all_vertices(*g) : load_vertex_set(cfg.t_set_path, *g);
    switch (cfg.oracle) {
        case OracleKind::kThm1: {
            auto oracle = std::make_shared<DiameterOracleAllPairs>(
                DiameterOracleAllPairs::build(*g, make_all_pairs_dso(g, cfg)));
            built.query = [oracle](const FailureSet& f) { return oracle->query(f); };
            built.exact = [g](const FailureSet& f) { return exact_diameter(*g, f); };
            break;
        }
        case OracleKind::kThm2: {
            Vertex s = cfg.source == -1 ? 0 : cfg.source;
            auto oracle = std::make_shared<DiameterOracleSingleSource>(
                DiameterOracleSingleSource::build(*g, s, make_single_source_dso(g, s, cfg, false),
                                                  make_single_source_dso(g, s, cfg, true)));
            built.query = [oracle](const FailureSet& f) { return oracle->query(f); };
            built.exact = [g](const FailureSet& f) { return exact_diameter(*g, f); };
            break;
        }
        case OracleKind::kFdoSt: {
            auto oracle = std::make_shared<StDiameterOracle>(
                StDiameterOracle::build(*g, S, T, make_all_pairs_dso(g, cfg), cfg.f, cfg.regime,
                                        cfg.seed, cfg.threads));
            built.query = [oracle](const FailureSet& f) { return oracle->query(f); };
            built.exact = [g, S, T](const FailureSet& f) {
                return exact_st_diameter(*g, S, T, f);
            };
            break;
        }
        case OracleKind::kSt: {
            Vertex s = cfg.source == -1 ? 0 : cfg.source;
            auto oracle = std::make_shared<SingleSourceStOracle>(SingleSourceStOracle::build(
                *g, s, T, make_single_source_dso(g, s, cfg, false)));
            built.query = [oracle](const FailureSet& f) { return oracle->query(f); };
            built.exact = [g, s, T](const FailureSet& f) {
                return exact_st_diameter(*g, {s}, T, f);
            };
            break;
        }
        case OracleKind::kLemma:
        case OracleKind::kThm5: {
            Vertex s = cfg.source == -1 ? S.front() : cfg.source;
            Vertex t = cfg.sink == -1 ? T.front() : cfg.sink;
            CombineMode mode =
                cfg.oracle == OracleKind::kLemma ? CombineMode::kLemma : CombineMode::kThm5;
            auto oracle = std::make_shared<CombinedStOracle>(CombinedStOracle::build(
                *g, S, T, s, t, make_single_source_dso(g, s, cfg, false),
                make_single_source_dso(g, t, cfg, false), mode));
            built.query = [oracle](const FailureSet& f) { return oracle->query(f); };
            built.exact = [g, S, T](const FailureSet& f) {
                return exact_st_diameter(*g, S, T, f);
            };
            break;
        }
        case OracleKind::kExact: {
            built.query = [g, S, T](const FailureSet& f) {
                return OracleAnswer{exact_st_diameter(*g, S, T, f), 0};
            };
            built.exact = [g, S, T](const FailureSet& f) {
                return exact_st_diameter(*g, S, T, f);
            };
            break;
        }
    }
    built.build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
    return built;
}

// est <= (a + b * num/den) * exact, exactly in integers.
bool within_bound(Distance est, Distance exact, StretchBound bound, long long num,
                  long long den) {
    if (is_inf(exact)) return is_inf(est);
    if (is_inf(est)) return false;
    __int128 lhs = static_cast<__int128>(est) * den;
    __int128 rhs = static_cast<__int128>(exact) * (bound.a * den + bound.b * num);
    return est >= exact && lhs <= rhs;
}

struct Record {
    Distance estimate = 0;
    int dso_calls = 0;
    Distance exact = 0;
    bool has_exact = false;
    bool violation = false;
    double query_us = 0;
};

}  // namespace

int run_benchmark(const RunConfig& cfg, std::ostream& out) {
    if (cfg.f < 1) throw error("benchmark: f must be at least 1");
    auto g = std::make_shared<const Graph>(Graph::load_file(cfg.graph_path));
    BuiltOracle oracle = build_oracle(g, cfg);

    std::vector<FailureSet> queries;
    const std::string rnd = "random:";
    if (cfg.queries.rfind(rnd, 0) == 0) {
        std::string rest = cfg.queries.substr(rnd.size());
        size_t colon = rest.find(':');
        if (colon == std::string::npos) throw error("bad random query selector: " + cfg.queries);
        int count = std::stoi(rest.substr(0, colon));
        std::uint64_t seed = std::stoull(rest.substr(colon + 1));
        queries = random_queries(*g, cfg.f, count, seed);
    } else if (!cfg.queries.empty()) {
        queries = load_queries_file(cfg.queries, *g);
        for (const FailureSet& f : queries)
            if (f.size() > cfg.f)
                throw error("benchmark: query failure set larger than f=" + std::to_string(cfg.f));
    }

    StretchBound bound = oracle_stretch_terms(cfg.oracle);
    long long num = cfg.dso.lambda_num, den = cfg.dso.lambda_den;
    int budget = oracle_call_budget(cfg.oracle, cfg.f);

    std::vector<Record> records(queries.size());
    auto run_one = [&](size_t i) {
        Record& r = records[i];
        auto q0 = std::chrono::steady_clock::now();
        OracleAnswer ans = oracle.query(queries[i]);
        r.query_us =
            std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - q0)
                .count();
        r.estimate = ans.value;
        r.dso_calls = ans.dso_calls;
        if (cfg.verify) {
            r.exact = oracle.exact(queries[i]);
            r.has_exact = true;
            if (!within_bound(r.estimate, r.exact, bound, num, den)) r.violation = true;
            if (cfg.oracle != OracleKind::kExact && r.dso_calls > budget) r.violation = true;
        }
    };
    int workers = std::max(1, cfg.threads);
    if (workers == 1 || queries.size() < 2) {
        for (size_t i = 0; i < queries.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < queries.size(); i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    // Records are written in input order regardless of completion order.
    int violations = 0;
    long long total_calls = 0;
    double max_stretch = 0, sum_stretch = 0;
    int stretch_count = 0;
    for (size_t i = 0; i < records.size(); ++i) {
        const Record& r = records[i];
        json rec;
        rec["type"] = "query";
        rec["index"] = i;
        json fails = json::array();
        for (EdgeId e : queries[i].edges()) {
            const Edge& ed = g->edge(e);
            fails.push_back(json::array({ed.u, ed.v}));
        }
        rec["failures"] = fails;
        rec["estimate"] = dist_json(r.estimate);
        rec["dso_calls"] = r.dso_calls;
        if (r.has_exact) {
            rec["exact"] = dist_json(r.exact);
            if (!(is_inf(r.exact) && is_inf(r.estimate))) {
                double stretch = r.exact == 0
                                     ? 1.0
                                     : static_cast<double>(r.estimate) /
                                           static_cast<double>(r.exact);
                if (is_inf(r.estimate) != is_inf(r.exact)) stretch = -1.0;  // violation marker
                rec["stretch"] = stretch;
                if (stretch > 0) {
                    max_stretch = std::max(max_stretch, stretch);
                    sum_stretch += stretch;
                    ++stretch_count;
                }
            }
            if (r.violation) rec["violation"] = true;
        }
        if (cfg.timing) rec["query_us"] = r.query_us;
        if (r.violation) ++violations;
        total_calls += r.dso_calls;
        out << rec.dump() << "\n";
    }

    json summary;
    summary["type"] = "summary";
    summary["oracle"] = oracle_selector_name(cfg.oracle);
    summary["dso"] = cfg.dso.raw;
    summary["f"] = cfg.f;
    summary["queries"] = records.size();
    summary["total_dso_calls"] = total_calls;
    if (stretch_count > 0) {
        summary["max_stretch"] = max_stretch;
        summary["mean_stretch"] = sum_stretch / stretch_count;
    }
    if (cfg.verify) summary["violations"] = violations;
    if (cfg.timing) {
        std::vector<double> times;
        times.reserve(records.size());
        for (const Record& r : records) times.push_back(r.query_us);
        std::sort(times.begin(), times.end());
        summary["build_ms"] = oracle.build_ms;
        if (!times.empty()) {
            summary["p50_query_us"] = times[times.size() / 2];
            summary["p99_query_us"] = times[std::min(times.size() - 1, times.size() * 99 / 100)];
        }
    }
    out << summary.dump() << "\n";
    return cfg.verify && violations > 0 ? 1 : 0;
}

}  // namespace ftdiam
