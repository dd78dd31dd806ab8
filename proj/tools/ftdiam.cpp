// Benchmark and experiment harness for the fault-tolerant diameter oracles:
// loads a graph, builds the selected oracle over the selected DSO, replays or
// samples failure queries, and reports per-query records plus a summary as
// JSON lines.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftdiam/bench.hpp"
#include "ftdiam/lower_bound.hpp"

namespace {

using ftdiam::RunConfig;

int env_threads() {
    const char* env = std::getenv("FTDIAM_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& dso_sel, std::string& out_path) {
    cmd->add_option("--graph", cfg.graph_path, "Edge-list file")->required();
    cmd->add_option("--dso", dso_sel, "DSO variant: exact | stretched:<lambda>");
    cmd->add_option("--f", cfg.f, "Sensitivity (max failures per query)");
    cmd->add_option("--queries", cfg.queries, "Query file or random:<count>:<seed>");
    cmd->add_flag("--verify", cfg.verify, "Check every record against the brute-force oracle");
    cmd->add_flag("--timing", cfg.timing, "Emit wall-clock fields (breaks byte-determinism)");
    cmd->add_option("--out", out_path, "Output path (default stdout)");
}

int run(const RunConfig& cfg, const std::string& out_path) {
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ftdiam::error("cannot open output file: " + out_path);
        return ftdiam::run_benchmark(cfg, out);
    }
    return ftdiam::run_benchmark(cfg, std::cout);
}

int run_lowerbound(int sqrt_n, const std::string& tensor_sel, bool sweep,
                   const std::string& out_path) {
    using nlohmann::ordered_json;
    ftdiam::LbTensor m = [&] {
        if (tensor_sel == "ones") return ftdiam::LbTensor::ones(sqrt_n);
        if (tensor_sel == "zeros") return ftdiam::LbTensor::zeros(sqrt_n);
        const std::string prefix = "random:";
        if (tensor_sel.rfind(prefix, 0) == 0)
            return ftdiam::LbTensor::random(sqrt_n, std::stoull(tensor_sel.substr(prefix.size())));
        throw ftdiam::error("unknown tensor selector: " + tensor_sel);
    }();
    ftdiam::LbGraph h = ftdiam::build_h(sqrt_n * sqrt_n);
    ftdiam::LbGraph g = ftdiam::build_g(h, m);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw ftdiam::error("cannot open output file: " + out_path);
        out = &file;
    }
    ordered_json meta;
    meta["type"] = "graph";
    meta["sqrt_n"] = sqrt_n;
    meta["n"] = g.g.n();
    meta["m"] = g.g.m();
    *out << meta.dump() << "\n";
    int at_most_3 = 0, at_least_5 = 0, mixed = 0, violations = 0;
    if (sweep) {
        for (int i = 1; i <= sqrt_n; ++i)
            for (int x = 1; x <= sqrt_n; ++x)
                for (int j = 1; j <= sqrt_n; ++j)
                    for (int y = 1; y <= sqrt_n; ++y) {
                        if (i == x || j == y) continue;
                        ordered_json rec;
                        rec["type"] = "quadruple";
                        rec["i"] = i;
                        rec["j"] = j;
                        rec["x"] = x;
                        rec["y"] = y;
                        if (m.get(i, j, y) != m.get(i, x, y)) {
                            rec["class"] = "mixed";
                            ++mixed;
                        } else {
                            try {
                                auto cls = ftdiam::verify_dichotomy(g, m, i, j, x, y);
                                if (cls == ftdiam::Dichotomy::kAtMost3) {
                                    rec["class"] = "at_most_3";
                                    ++at_most_3;
                                } else {
                                    rec["class"] = "at_least_5";
                                    ++at_least_5;
                                }
                            } catch (const ftdiam::error& e) {
                                rec["class"] = "violation";
                                rec["detail"] = e.what();
                                ++violations;
                            }
                        }
                        *out << rec.dump() << "\n";
                    }
    }
    ordered_json summary;
    summary["type"] = "summary";
    summary["at_most_3"] = at_most_3;
    summary["at_least_5"] = at_least_5;
    summary["mixed"] = mixed;
    summary["violations"] = violations;
    *out << summary.dump() << "\n";
    return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fault-tolerant (ST-)diameter oracle benchmark"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.threads = env_threads();
    std::string dso_sel = "exact";
    std::string out_path;
    std::string reduction = "thm1";
    std::string regime = "auto";
    std::string mode = "thm5";
    long long source = -1, sink = -1;

    CLI::App* fdo = app.add_subcommand("fdo", "Whole-graph diameter oracle");
    add_common_flags(fdo, cfg, dso_sel, out_path);
    fdo->add_option("--reduction", reduction, "thm1 (all-pairs DSO) | thm2 (single-source DSO)");
    fdo->add_option("--source", source, "Source vertex for thm2 (default 0)");

    CLI::App* fdo_st = app.add_subcommand("fdo-st", "ST-diameter oracle over an all-pairs DSO");
    add_common_flags(fdo_st, cfg, dso_sel, out_path);
    fdo_st->add_option("--regime", regime, "full | compressed | auto");
    fdo_st->add_option("--s-set", cfg.s_set_path, "File of S vertex ids (default all)");
    fdo_st->add_option("--t-set", cfg.t_set_path, "File of T vertex ids (default all)");
    fdo_st->add_option("--seed", cfg.seed, "Pivot sampling seed");

    CLI::App* fdo_ss = app.add_subcommand("fdo-st-ss", "ST oracles over single-source DSOs");
    add_common_flags(fdo_ss, cfg, dso_sel, out_path);
    fdo_ss->add_option("--mode", mode, "sT | lemma | thm5");
    fdo_ss->add_option("--source", source, "Source vertex s");
    fdo_ss->add_option("--sink", sink, "Sink vertex t (lemma/thm5)");
    fdo_ss->add_option("--s-set", cfg.s_set_path, "File of S vertex ids (default all)");
    fdo_ss->add_option("--t-set", cfg.t_set_path, "File of T vertex ids (default all)");

    CLI::App* exact = app.add_subcommand("exact", "Brute-force reference oracle");
    add_common_flags(exact, cfg, dso_sel, out_path);
    exact->add_option("--s-set", cfg.s_set_path, "File of S vertex ids (default all)");
    exact->add_option("--t-set", cfg.t_set_path, "File of T vertex ids (default all)");

    CLI::App* bench = app.add_subcommand("bench", "Any oracle via --oracle selector");
    std::string oracle_sel = "thm1";
    add_common_flags(bench, cfg, dso_sel, out_path);
    bench->add_option("--oracle", oracle_sel, "thm1|thm2|fdo-st|sT|lemma|thm5|exact");
    bench->add_option("--regime", regime, "full | compressed | auto (fdo-st)");
    bench->add_option("--seed", cfg.seed, "Pivot sampling seed (fdo-st)");
    bench->add_option("--source", source, "Source vertex");
    bench->add_option("--sink", sink, "Sink vertex (lemma/thm5)");
    bench->add_option("--s-set", cfg.s_set_path, "File of S vertex ids (default all)");
    bench->add_option("--t-set", cfg.t_set_path, "File of T vertex ids (default all)");

    CLI::App* lb = app.add_subcommand("lowerbound", "Dichotomy construction sweep");
    int sqrt_n = 2;
    std::string tensor = "ones";
    bool sweep = false;
    lb->add_option("--sqrt-n", sqrt_n, "Index range r; the graph has 6r^2 vertices")->required();
    lb->add_option("--tensor", tensor, "ones | zeros | random:<seed>");
    lb->add_flag("--sweep", sweep, "Classify every valid index quadruple");
    lb->add_option("--out", out_path, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (lb->parsed()) return run_lowerbound(sqrt_n, tensor, sweep, out_path);
        cfg.dso = ftdiam::parse_dso_selector(dso_sel);
        cfg.source = static_cast<ftdiam::Vertex>(source);
        cfg.sink = static_cast<ftdiam::Vertex>(sink);
        if (fdo->parsed()) {
            if (reduction == "thm1")
                cfg.oracle = ftdiam::OracleKind::kThm1;
            else if (reduction == "thm2")
                cfg.oracle = ftdiam::OracleKind::kThm2;
            else
                throw ftdiam::error("unknown reduction: " + reduction);
        } else if (fdo_st->parsed()) {
            cfg.oracle = ftdiam::OracleKind::kFdoSt;
            if (regime == "full")
                cfg.regime = ftdiam::StRegime::kFull;
            else if (regime == "compressed")
                cfg.regime = ftdiam::StRegime::kCompressed;
            else if (regime == "auto")
                cfg.regime = ftdiam::StRegime::kAuto;
            else
                throw ftdiam::error("unknown regime: " + regime);
        } else if (fdo_ss->parsed()) {
            cfg.oracle = ftdiam::parse_oracle_selector(mode);
            if (cfg.oracle != ftdiam::OracleKind::kSt &&
                cfg.oracle != ftdiam::OracleKind::kLemma &&
                cfg.oracle != ftdiam::OracleKind::kThm5)
                throw ftdiam::error("unknown mode: " + mode);
        } else if (exact->parsed()) {
            cfg.oracle = ftdiam::OracleKind::kExact;
        } else if (bench->parsed()) {
            cfg.oracle = ftdiam::parse_oracle_selector(oracle_sel);
            if (regime == "full")
                cfg.regime = ftdiam::StRegime::kFull;
            else if (regime == "compressed")
                cfg.regime = ftdiam::StRegime::kCompressed;
            else if (regime == "auto")
                cfg.regime = ftdiam::StRegime::kAuto;
            else
                throw ftdiam::error("unknown regime: " + regime);
        }
        return run(cfg, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
