#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "switchover/fixtures.hpp"
#include "switchover/percolation.hpp"
#include "switchover/sir.hpp"

using namespace switchover;

TEST_CASE("sir_init marks seeds infected") {
    Graph g = path_graph(4);
    SirState state = sir_init(g, {1, 3});
    CHECK(state.status[0] == SirStatus::susceptible);
    CHECK(state.status[1] == SirStatus::infected);
    CHECK(state.status[2] == SirStatus::susceptible);
    CHECK(state.status[3] == SirStatus::infected);
    CHECK(state.cumulative_infected == 2);
    CHECK(state.step == 0);
}

TEST_CASE("sir_step at beta=1 advances a wavefront and recovers the old one") {
    Graph g = path_graph(3);
    Rng rng(RngStream{1, 0});
    SirState state = sir_init(g, {0});
    sir_step(g, state, 1.0, rng);
    CHECK(state.status[0] == SirStatus::resistant);
    CHECK(state.status[1] == SirStatus::infected);
    CHECK(state.status[2] == SirStatus::susceptible);
    CHECK(state.cumulative_infected == 2);
    sir_step(g, state, 1.0, rng);
    CHECK(state.status[1] == SirStatus::resistant);
    CHECK(state.status[2] == SirStatus::infected);
    sir_step(g, state, 1.0, rng);
    CHECK(state.status[2] == SirStatus::resistant);
    CHECK(state.step == 3);
}

TEST_CASE("sir_step at beta=0 only recovers") {
    Graph g = complete_graph(4);
    Rng rng(RngStream{1, 1});
    SirState state = sir_init(g, {0, 1});
    sir_step(g, state, 0.0, rng);
    CHECK(state.cumulative_infected == 2);
    CHECK(state.status[0] == SirStatus::resistant);
    CHECK(state.status[2] == SirStatus::susceptible);
}

TEST_CASE("sir_total endpoints: seed count at beta=0, component size at beta=1") {
    Graph g = clique_core_pendants_graph(4, 7);
    Rng rng(RngStream{2, 0});
    CHECK(sir_total(g, 0.0, {0, 5}, rng) == 2);
    CHECK(sir_total(g, 1.0, {6}, rng) == 7);
    Graph disconnected(5, {{0, 1}, {2, 3}});
    CHECK(sir_total(disconnected, 1.0, {0}, rng) == 2);
    CHECK(sir_total(disconnected, 1.0, {4}, rng) == 1);
}

TEST_CASE("P3 from an endpoint at beta=0.5 averages 1.75") {
    Graph g = path_graph(3);
    const long long trials = 100000;
    long long sum = 0;
    for (long long t = 0; t < trials; ++t) {
        Rng rng(substream(RngStream{13, 0}, t));
        sum += sir_total(g, 0.5, {0}, rng);
    }
    double mean = static_cast<double>(sum) / trials;
    double sigma = std::sqrt(0.6875 / trials);  // var of {1:.5, 2:.25, 3:.25}
    CHECK(std::abs(mean - 1.75) < 3 * sigma);
}

TEST_CASE("final-size distribution matches the percolation oracle in TV") {
    // the one-step infectious period makes |ever infected| ~ |G^beta(S)|
    std::vector<std::pair<Graph, VertexSet>> cases = {
        {path_graph(3), {0}},
        {path_graph(4), {1}},
        {complete_graph(3), {0}},
        {star_graph(3), {1}},
        {triangle_pendant_graph(), {3}},
    };
    const long long trials = 100000;
    int case_id = 0;
    for (const auto& [g, seeds] : cases) {
        CAPTURE(case_id);
        for (double beta : {0.3, 0.7}) {
            std::map<int, double> exact = exact_distribution(g, beta, seeds);
            std::map<int, long long> counts;
            for (long long t = 0; t < trials; ++t) {
                Rng rng(substream(RngStream{17, static_cast<std::uint64_t>(case_id)}, t));
                ++counts[sir_total(g, beta, seeds, rng)];
            }
            double tv = 0.0;
            for (const auto& [size, p] : exact) {
                double freq = static_cast<double>(counts[size]) / trials;
                tv += std::abs(p - freq);
            }
            for (const auto& [size, cnt] : counts) {
                if (!exact.count(size)) tv += static_cast<double>(cnt) / trials;
            }
            CHECK(tv / 2 < 0.01);
        }
        ++case_id;
    }
}

TEST_CASE("invariants: bounds and termination on random runs") {
    for (const auto& [name, g] : fixture_graphs()) {
        CAPTURE(name);
        for (int t = 0; t < 50; ++t) {
            Rng seed_rng(substream(RngStream{19, 7}, t));
            VertexId seed = static_cast<VertexId>(seed_rng.below(static_cast<std::uint64_t>(g.n())));
            Rng rng(substream(RngStream{19, 8}, t));
            SirState state = sir_init(g, {seed});
            while (state.cumulative_infected > 0) {
                bool any_infected = false;
                for (auto st : state.status)
                    if (st == SirStatus::infected) any_infected = true;
                if (!any_infected) break;
                sir_step(g, state, 0.5, rng);
                CHECK(state.step <= g.n());  // wavefront advances every step
            }
            CHECK(state.cumulative_infected >= 1);
            CHECK(state.cumulative_infected <= g.n());
        }
    }
}
