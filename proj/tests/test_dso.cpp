#include <doctest.h>

#include "ftdiam/dso.hpp"
#include "ftdiam/exact_oracle.hpp"
#include "ftdiam/metrics.hpp"
#include "gen.hpp"

using namespace ftdiam;
using namespace ftdiam::testgen;

TEST_CASE("recompute dso answers exactly") {
    auto g = std::make_shared<const Graph>(c4());
    RecomputeDso dso(g, 2);
    CHECK(dso.query(0, 3, FailureSet::from_pairs(*g, {{3, 0}})) == 3);
    CHECK(dso.query(2, 2, FailureSet::from_pairs(*g, {{0, 1}})) == 0);
    CHECK(is_inf(dso.query(0, 2, FailureSet::from_pairs(*g, {{0, 1}, {2, 3}}))));
    CHECK_THROWS_AS(dso.query(0, 1, FailureSet(*g, {0, 1, 2})), error);  // |F| > f
}

TEST_CASE("recompute dso matches all-pairs distances with no failures") {
    auto g = std::make_shared<const Graph>(random_connected_graph(25, 60, 7, true));
    RecomputeDso dso(g, 1);
    auto mat = all_pairs_distances(*g);
    FailureSet empty;
    for (Vertex u = 0; u < g->n(); u += 2)
        for (Vertex v = 0; v < g->n(); v += 3)
            CHECK(dso.query(u, v, empty) == mat[static_cast<size_t>(u)][static_cast<size_t>(v)]);
}

TEST_CASE("stretched wrapper stays within its inflation band") {
    auto g = std::make_shared<const Graph>(c4());
    auto inner = std::make_shared<RecomputeDso>(g, 2);
    StretchedDso identity(inner, 1.0);
    StretchedDso doubled(inner, 2.0);
    FailureSet f = FailureSet::from_pairs(*g, {{3, 0}});
    CHECK(identity.query(0, 3, f) == 3);
    Distance v = doubled.query(0, 3, f);
    CHECK(v >= 3);
    CHECK(v <= 6);
    // deterministic
    CHECK(doubled.query(0, 3, f) == v);
    // infinity passes through uninflated
    FailureSet split = FailureSet::from_pairs(*g, {{0, 1}, {2, 3}});
    CHECK(is_inf(doubled.query(0, 2, split)));
    CHECK(doubled.stretch() == doctest::Approx(2.0));
}

TEST_CASE("sandwich property of the wrappers on random graphs") {
    for (std::uint64_t seed : {31u, 32u, 33u}) {
        auto g = std::make_shared<const Graph>(
            random_connected_graph(30, 75, seed, seed % 2 == 0));
        auto inner = std::make_shared<RecomputeDso>(g, 3);
        StretchedDso wrapped(inner, 2.0);
        std::mt19937_64 rng(seed * 13);
        for (int q = 0; q < 40; ++q) {
            FailureSet f = random_failure(*g, 1 + static_cast<int>(q % 3), rng);
            Vertex u = static_cast<Vertex>(rand_below(rng, static_cast<std::uint64_t>(g->n())));
            Vertex v = static_cast<Vertex>(rand_below(rng, static_cast<std::uint64_t>(g->n())));
            Distance exact = dijkstra_distances(*g, u, &f)[static_cast<size_t>(v)];
            Distance est = wrapped.query(u, v, f);
            if (is_inf(exact)) {
                CHECK(is_inf(est));
            } else {
                CHECK(est >= exact);
                CHECK(est <= 2 * exact);
            }
        }
    }
}

TEST_CASE("reversed single-source dso answers distances into the source") {
    Graph dg(3, true);
    dg.add_edge(0, 1, 2);
    dg.add_edge(1, 2, 3);
    auto dso_in = RecomputeSingleSourceDso::on_reversed(dg, 2, 1);
    FailureSet empty;
    CHECK(dso_in->query(0, empty) == 5);  // d(0 -> 2) in the original graph
    CHECK(dso_in->source() == 2);
    auto g = std::make_shared<const Graph>(dg);
    RecomputeSingleSourceDso dso_out(g, 0, 1);
    CHECK(dso_out.query(2, empty) == 5);
}
