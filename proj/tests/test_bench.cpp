#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ftdiam/bench.hpp"

using namespace ftdiam;
using json = nlohmann::json;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

const char* kC4 =
    "4 4 directed=0 weights=int\n"
    "0 1 1\n1 2 1\n2 3 1\n3 0 1\n";

std::vector<json> parse_lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("selector parsing") {
    CHECK(parse_oracle_selector("thm1") == OracleKind::kThm1);
    CHECK(parse_oracle_selector("fdo-st") == OracleKind::kFdoSt);
    CHECK_THROWS_AS(parse_oracle_selector("bogus"), error);
    DsoConfig d = parse_dso_selector("stretched:1.5");
    CHECK(d.stretched);
    CHECK(d.lambda_num == 15);
    CHECK(d.lambda_den == 10);
    CHECK_THROWS_AS(parse_dso_selector("stretched:0.5"), error);
    CHECK_FALSE(parse_dso_selector("exact").stretched);
}

TEST_CASE("benchmark record for the worked 4-cycle query") {
    TempFile graph("ftdiam_c4.graph", kC4);
    TempFile queries("ftdiam_c4.queries", "0-3\n");
    RunConfig cfg;
    cfg.graph_path = graph.path.string();
    cfg.queries = queries.path.string();
    cfg.oracle = OracleKind::kThm1;
    cfg.f = 1;
    cfg.verify = true;
    std::ostringstream out;
    int rc = run_benchmark(cfg, out);
    CHECK(rc == 0);
    auto lines = parse_lines(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0]["type"] == "query");
    CHECK(lines[0]["estimate"] == 5);
    CHECK(lines[0]["exact"] == 3);
    CHECK(lines[0]["stretch"].get<double>() == doctest::Approx(5.0 / 3.0));
    CHECK(lines[1]["type"] == "summary");
    CHECK(lines[1]["violations"] == 0);
}

TEST_CASE("output is byte-identical across runs") {
    TempFile graph("ftdiam_det.graph", kC4);
    RunConfig cfg;
    cfg.graph_path = graph.path.string();
    cfg.queries = "random:20:42";
    cfg.oracle = OracleKind::kThm2;
    cfg.dso = parse_dso_selector("stretched:2");
    cfg.f = 2;
    cfg.verify = true;
    std::ostringstream a, b;
    CHECK(run_benchmark(cfg, a) == 0);
    CHECK(run_benchmark(cfg, b) == 0);
    CHECK(a.str() == b.str());
    CHECK(!a.str().empty());
}

TEST_CASE("random:0 yields a summary only") {
    TempFile graph("ftdiam_empty.graph", kC4);
    RunConfig cfg;
    cfg.graph_path = graph.path.string();
    cfg.queries = "random:0:7";
    cfg.oracle = OracleKind::kThm1;
    std::ostringstream out;
    CHECK(run_benchmark(cfg, out) == 0);
    auto lines = parse_lines(out.str());
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["type"] == "summary");
    CHECK(lines[0]["queries"] == 0);
}

TEST_CASE("bad query lines are rejected with their line number") {
    TempFile graph("ftdiam_bad.graph", kC4);
    TempFile queries("ftdiam_bad.queries", "0-1\n0-2\n");
    RunConfig cfg;
    cfg.graph_path = graph.path.string();
    cfg.queries = queries.path.string();
    std::ostringstream out;
    try {
        run_benchmark(cfg, out);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("0-2") != std::string::npos);
    }
}

TEST_CASE("stretched verification respects the theoretical bound") {
    TempFile graph("ftdiam_str.graph", kC4);
    RunConfig cfg;
    cfg.graph_path = graph.path.string();
    cfg.queries = "random:50:11";
    cfg.oracle = OracleKind::kThm1;
    cfg.dso = parse_dso_selector("stretched:2");
    cfg.f = 2;
    cfg.verify = true;
    std::ostringstream out;
    CHECK(run_benchmark(cfg, out) == 0);  // exit 0 iff all sandwich checks pass
    for (const json& line : parse_lines(out.str())) {
        if (line["type"] != "query" || !line.contains("stretch")) continue;
        CHECK(line["stretch"].get<double>() <= 3.0);  // 1 + sigma, sigma = 2
    }
}

TEST_CASE("vertex set files drive the st oracle") {
    TempFile graph("ftdiam_sets.graph", kC4);
    TempFile s_set("ftdiam_s.set", "0\n");
    TempFile t_set("ftdiam_t.set", "# just vertex two\n2\n");
    TempFile queries("ftdiam_sets.queries", "1-2\nnone\n");
    RunConfig cfg;
    cfg.graph_path = graph.path.string();
    cfg.queries = queries.path.string();
    cfg.oracle = OracleKind::kFdoSt;
    cfg.s_set_path = s_set.path.string();
    cfg.t_set_path = t_set.path.string();
    cfg.f = 1;
    cfg.verify = true;
    std::ostringstream out;
    CHECK(run_benchmark(cfg, out) == 0);
    auto lines = parse_lines(out.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[0]["estimate"] == 5);
    CHECK(lines[1]["estimate"] == 2);  // no failures: exact st-diameter
}

TEST_CASE("queries above the declared sensitivity are rejected") {
    TempFile graph("ftdiam_f.graph", kC4);
    TempFile queries("ftdiam_f.queries", "0-1,1-2\n");
    RunConfig cfg;
    cfg.graph_path = graph.path.string();
    cfg.queries = queries.path.string();
    cfg.oracle = OracleKind::kThm1;
    cfg.f = 1;
    std::ostringstream out;
    CHECK_THROWS_AS(run_benchmark(cfg, out), error);
}

TEST_CASE("worker pool keeps record order and content") {
    TempFile graph("ftdiam_pool.graph", kC4);
    RunConfig cfg;
    cfg.graph_path = graph.path.string();
    cfg.queries = "random:30:3";
    cfg.oracle = OracleKind::kThm1;
    cfg.f = 2;
    cfg.verify = true;
    std::ostringstream seq, par;
    cfg.threads = 1;
    CHECK(run_benchmark(cfg, seq) == 0);
    cfg.threads = 4;
    CHECK(run_benchmark(cfg, par) == 0);
    CHECK(seq.str() == par.str());
}
