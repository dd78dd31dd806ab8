// Acceptance suite: quantitative property checks over the full oracle stack,
// one pass/fail line per criterion. Takes the CLI binary path as argv[1] for
// the regression criterion.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ftdiam/exact_oracle.hpp"
#include "ftdiam/fdo.hpp"
#include "ftdiam/fdo_single_source.hpp"
#include "ftdiam/fdo_st.hpp"
#include "ftdiam/lower_bound.hpp"
#include "gen.hpp"

using namespace ftdiam;
using namespace ftdiam::testgen;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name
              << " (" << detail << ")\n";
    if (!pass) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// est within [exact, (a + b*sigma) * exact], integer-exact, infinities match.
bool sandwich_ok(Distance est, Distance exact, long long a, long long b, long long sigma) {
    if (is_inf(exact)) return is_inf(est);
    if (is_inf(est)) return false;
    return est >= exact && est <= (a + b * sigma) * exact;
}

struct SweepCounters {
    long long sandwich_violations = 0;
    long long regime_mismatches = 0;       // filtered per the regime condition
    long long regime_mismatches_all = 0;   // every query
    long long regime_checked = 0;
    long long budget_violations = 0;
    long long queries = 0;
};

SweepCounters run_sandwich_sweep() {
    SweepCounters c;
    std::mt19937_64 rng(0x5eed0001);
    for (int gi = 0; gi < 50; ++gi) {
        int n = 10 + static_cast<int>(rand_below(rng, 51));  // [10, 60]
        auto g = std::make_shared<const Graph>(
            random_connected_graph(n, 3 * n, rng(), gi % 2 == 0));
        auto S = random_subset(rng, n, std::max(2, n / 3));
        auto T = random_subset(rng, n, std::max(2, n / 3));
        Vertex s = S.front(), t = T.front();

        for (int f = 1; f <= 3; ++f) {
            struct Variant {
                long long sigma;
                std::shared_ptr<const AllPairsDso> ap;
                std::shared_ptr<const SingleSourceDso> ss_s, ss_t, ss_0, ss_0_rev;
            };
            std::vector<Variant> variants;
            for (long long sigma : {1LL, 2LL}) {
                Variant v;
                v.sigma = sigma;
                v.ap = std::make_shared<RecomputeDso>(g, f);
                v.ss_s = std::make_shared<RecomputeSingleSourceDso>(g, s, f);
                v.ss_t = std::make_shared<RecomputeSingleSourceDso>(g, t, f);
                v.ss_0 = std::make_shared<RecomputeSingleSourceDso>(g, 0, f);
                v.ss_0_rev = RecomputeSingleSourceDso::on_reversed(*g, 0, f);
                if (sigma == 2) {
                    v.ap = std::make_shared<StretchedDso>(v.ap, 2.0);
                    v.ss_s = std::make_shared<StretchedSingleSourceDso>(v.ss_s, 2.0);
                    v.ss_t = std::make_shared<StretchedSingleSourceDso>(v.ss_t, 2.0);
                    v.ss_0 = std::make_shared<StretchedSingleSourceDso>(v.ss_0, 2.0);
                    v.ss_0_rev = std::make_shared<StretchedSingleSourceDso>(v.ss_0_rev, 2.0);
                }
                variants.push_back(std::move(v));
            }

            struct Built {
                DiameterOracleAllPairs thm1;
                DiameterOracleSingleSource thm2;
                StDiameterOracle thm3_full, thm3_comp;
                SingleSourceStOracle thm4;
                CombinedStOracle lemma, thm5;
            };
            std::vector<Built> built;
            for (const Variant& v : variants)
                built.push_back(Built{
                    DiameterOracleAllPairs::build(*g, v.ap),
                    DiameterOracleSingleSource::build(*g, 0, v.ss_0, v.ss_0_rev),
                    StDiameterOracle::build(*g, S, T, v.ap, f, StRegime::kFull, 1),
                    StDiameterOracle::build(*g, S, T, v.ap, f, StRegime::kCompressed, 1),
                    SingleSourceStOracle::build(*g, s, T, v.ss_s),
                    CombinedStOracle::build(*g, S, T, s, t, v.ss_s, v.ss_t, CombineMode::kLemma),
                    CombinedStOracle::build(*g, S, T, s, t, v.ss_s, v.ss_t, CombineMode::kThm5)});

            bool regime_applies = (1LL << (2 * f)) <= n;  // 2^f <= sqrt(n)
            for (int q = 0; q < 200; ++q) {
                FailureSet fs = random_failure(*g, f, rng);
                ++c.queries;
                Distance ex_full = exact_diameter(*g, fs);
                Distance ex_st = exact_st_diameter(*g, S, T, fs);
                Distance ex_sT = exact_st_diameter(*g, {s}, T, fs);
                for (size_t vi = 0; vi < variants.size(); ++vi) {
                    long long sg = variants[vi].sigma;
                    const Built& o = built[vi];
                    auto a1 = o.thm1.query(fs);
                    auto a2 = o.thm2.query(fs);
                    auto a3f = o.thm3_full.query(fs);
                    auto a3c = o.thm3_comp.query(fs);
                    auto a4 = o.thm4.query(fs);
                    auto al = o.lemma.query(fs);
                    auto a5 = o.thm5.query(fs);
                    if (!sandwich_ok(a1.value, ex_full, 1, 1, sg)) ++c.sandwich_violations;
                    if (!sandwich_ok(a2.value, ex_full, 2, 2, sg)) ++c.sandwich_violations;
                    if (!sandwich_ok(a3f.value, ex_st, 1, 3, sg)) ++c.sandwich_violations;
                    if (!sandwich_ok(a3c.value, ex_st, 1, 3, sg)) ++c.sandwich_violations;
                    if (!sandwich_ok(a4.value, ex_sT, 1, 2, sg)) ++c.sandwich_violations;
                    if (!sandwich_ok(al.value, ex_st, 3, 6, sg)) ++c.sandwich_violations;
                    if (!sandwich_ok(a5.value, ex_st, 2, 5, sg)) ++c.sandwich_violations;
                    if (a1.dso_calls > 4 * f * f) ++c.budget_violations;
                    if (a2.dso_calls > 4 * f) ++c.budget_violations;
                    if (a3f.dso_calls > 4 * f * f) ++c.budget_violations;
                    if (a3c.dso_calls > 4 * f * f) ++c.budget_violations;
                    if (a4.dso_calls > f + 1) ++c.budget_violations;

                    if (vi == 0) {  // regimes share structure; compare once
                        bool same = o.thm3_full.compute_s_prime(fs) ==
                                        o.thm3_comp.compute_s_prime(fs) &&
                                    o.thm3_full.compute_t_prime(fs) ==
                                        o.thm3_comp.compute_t_prime(fs) &&
                                    a3f.value == a3c.value;
                        if (regime_applies) {
                            ++c.regime_checked;
                            if (!same) ++c.regime_mismatches;
                        }
                        if (!same) ++c.regime_mismatches_all;
                    }
                }
            }
        }
    }
    return c;
}

bool leaf_selection_criterion(std::string& detail) {
    Timer timer;
    std::mt19937_64 rng(0x5eed0003);
    long long violations = 0, size_violations = 0;
    for (int round = 0; round < 100; ++round) {
        int n = 6 + static_cast<int>(rand_below(rng, 20));  // at most 25 edges
        Graph tree = random_tree_graph(n, rng());
        TreeCore core = build_sp_tree(tree, 0);
        std::vector<char> marks(static_cast<size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v) marks[static_cast<size_t>(v)] = rand_below(rng, 3) == 0;
        int f = 1 + round % 3;
        auto leaves = select_leaves(core, marks, f);
        if (static_cast<int>(leaves.size()) > (1 << f)) ++size_violations;
        auto leaf_alive = [&](const FailureSet& fs) {
            for (Vertex l : leaves) {
                bool alive = true;
                for (Vertex x = l; core.parent[static_cast<size_t>(x)] != -1;
                     x = core.parent[static_cast<size_t>(x)])
                    if (fs.contains(core.parent_edge[static_cast<size_t>(x)])) {
                        alive = false;
                        break;
                    }
                if (alive) return true;
            }
            return false;
        };
        std::vector<EdgeId> ids;
        std::function<void(EdgeId, int)> rec = [&](EdgeId from, int remaining) {
            FailureSet fs(tree, ids);
            auto ok = tree_reachable(core, fs);
            bool marked_alive = false;
            for (Vertex v = 0; v < n; ++v)
                if (marks[static_cast<size_t>(v)] && ok[static_cast<size_t>(v)])
                    marked_alive = true;
            if (marked_alive != leaf_alive(fs)) ++violations;
            if (remaining == 0) return;
            for (EdgeId e = from; e < tree.m(); ++e) {
                ids.push_back(e);
                rec(e + 1, remaining - 1);
                ids.pop_back();
            }
        };
        rec(0, f);
    }
    std::ostringstream d;
    d << "100 trees, exhaustive failure subsets, " << violations << " equivalence violations, "
      << size_violations << " size violations, " << timer.seconds() << "s";
    detail = d.str();
    return violations == 0 && size_violations == 0;
}

bool lower_bound_criterion(std::string& detail) {
    Timer timer;
    long long violations = 0;
    for (int N : {4, 9, 16})
        if (exact_diameter(build_h(N).g, FailureSet()) > 3) ++violations;
    {
        LbGraph h = build_h(4);
        LbGraph ones = build_g(h, LbTensor::ones(2));
        LbGraph zeros = build_g(h, LbTensor::zeros(2));
        for (int i = 1; i <= 2; ++i)
            for (int x = 1; x <= 2; ++x)
                for (int j = 1; j <= 2; ++j)
                    for (int y = 1; y <= 2; ++y) {
                        if (i == x || j == y) continue;
                        try {
                            if (verify_dichotomy(ones, LbTensor::ones(2), i, j, x, y) !=
                                Dichotomy::kAtMost3)
                                ++violations;
                            if (verify_dichotomy(zeros, LbTensor::zeros(2), i, j, x, y) !=
                                Dichotomy::kAtLeast5)
                                ++violations;
                        } catch (const error&) {
                            ++violations;
                        }
                    }
    }
    {
        std::mt19937_64 rng(0x5eed0004);
        LbGraph h = build_h(9);
        int done = 0;
        while (done < 50) {
            int i = 1 + static_cast<int>(rand_below(rng, 3));
            int x = 1 + static_cast<int>(rand_below(rng, 3));
            int j = 1 + static_cast<int>(rand_below(rng, 3));
            int y = 1 + static_cast<int>(rand_below(rng, 3));
            if (i == x || j == y) continue;
            LbTensor m = LbTensor::random(3, rng());
            bool value = rand_below(rng, 2) == 0;
            m.set(i, j, y, value);
            m.set(i, x, y, value);
            LbGraph g = build_g(h, m);
            try {
                Dichotomy cls = verify_dichotomy(g, m, i, j, x, y);
                if (cls != (value ? Dichotomy::kAtMost3 : Dichotomy::kAtLeast5)) ++violations;
            } catch (const error&) {
                ++violations;
            }
            ++done;
        }
    }
    std::ostringstream d;
    d << "full sweep at r=2, 50 random quadruples at r=3, base diameters at N in {4,9,16}, "
      << violations << " violations, " << timer.seconds() << "s";
    detail = d.str();
    return violations == 0;
}

struct CliCase {
    std::string name;
    std::string args;
    Distance expected;
};

bool cli_regression_criterion(const std::string& cli, std::string& detail) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ftdiam_acceptance";
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& content) {
        fs::path p = dir / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    };
    std::string graph = write("c4.graph",
                              "4 4 directed=0 weights=int\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n");
    std::string q03 = write("q03.txt", "0-3\n");
    std::string q12 = write("q12.txt", "1-2\n");
    std::string s0 = write("s0.txt", "0\n");
    std::string t2 = write("t2.txt", "2\n");

    std::vector<CliCase> cases = {
        {"thm1", "fdo --reduction thm1 --graph " + graph + " --f 1 --queries " + q03, 5},
        {"thm2", "fdo --reduction thm2 --source 0 --graph " + graph + " --f 1 --queries " + q03,
         10},
        {"thm3-full",
         "fdo-st --regime full --s-set " + s0 + " --t-set " + t2 + " --graph " + graph +
             " --f 1 --queries " + q12,
         5},
        {"thm3-compressed",
         "fdo-st --regime compressed --s-set " + s0 + " --t-set " + t2 + " --graph " + graph +
             " --f 1 --queries " + q12,
         5},
        {"thm4",
         "fdo-st-ss --mode sT --source 0 --t-set " + t2 + " --graph " + graph +
             " --f 1 --queries " + q12,
         4},
        {"thm5",
         "fdo-st-ss --mode thm5 --source 0 --sink 2 --s-set " + s0 + " --t-set " + t2 +
             " --graph " + graph + " --f 1 --queries " + q12,
         11},
    };
    long long violations = 0;
    std::string first_problem;
    for (const CliCase& c : cases) {
        std::string out_path = (dir / (c.name + ".out")).string();
        std::string cmd = cli + " " + c.args + " --verify --out " + out_path;
        int rc = std::system(cmd.c_str());
        if (rc != 0) {
            ++violations;
            if (first_problem.empty()) first_problem = c.name + " exit " + std::to_string(rc);
            continue;
        }
        std::ifstream in(out_path);
        std::string line;
        bool found = false;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            if (j["type"] == "query") {
                found = true;
                if (!j["estimate"].is_number() || j["estimate"].get<Distance>() != c.expected) {
                    ++violations;
                    if (first_problem.empty())
                        first_problem = c.name + " estimate " + j["estimate"].dump();
                }
                break;
            }
        }
        if (!found) {
            ++violations;
            if (first_problem.empty()) first_problem = c.name + " produced no record";
        }
    }
    std::ostringstream d;
    d << cases.size() << " CLI cases, " << violations << " mismatches";
    if (!first_problem.empty()) d << ", first: " << first_problem;
    detail = d.str();
    return violations == 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    {
        Timer timer;
        SweepCounters c = run_sandwich_sweep();
        std::ostringstream d1;
        d1 << c.queries << " failure sets x 7 oracles x 2 stretch levels, "
           << c.sandwich_violations << " violations, " << timer.seconds() << "s";
        report(1, "sandwich suites", c.sandwich_violations == 0, d1.str());

        std::ostringstream d2;
        d2 << c.regime_checked << " queries under the compressed-regime condition, "
           << c.regime_mismatches << " mismatches (" << c.regime_mismatches_all
           << " over all queries)";
        report(2, "regime equivalence", c.regime_mismatches == 0 && c.regime_mismatches_all == 0,
               d2.str());

        std::string d3;
        bool ok3 = leaf_selection_criterion(d3);
        report(3, "leaf-selection contract", ok3, d3);

        std::string d4;
        bool ok4 = lower_bound_criterion(d4);
        report(4, "lower-bound dichotomy", ok4, d4);

        std::ostringstream d5;
        d5 << "per-query call counters over suite 1, " << c.budget_violations << " violations";
        report(5, "query budgets", c.budget_violations == 0, d5.str());
    }

    if (cli.empty()) {
        report(6, "worked-example regression", false, "no CLI binary path given");
    } else {
        std::string d6;
        bool ok6 = cli_regression_criterion(cli, d6);
        report(6, "worked-example regression", ok6, d6);
    }

    return g_failures == 0 ? 0 : 1;
}
