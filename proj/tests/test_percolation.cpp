#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "switchover/fixtures.hpp"
#include "switchover/percolation.hpp"

using namespace switchover;

namespace {

// independent combination walker for cross-checking the uniform-seed oracle
template <typename Visit>
void each_subset(int m, int k, Visit&& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

TEST_CASE("beta=0 isolates every vertex, beta=1 reproduces G's components") {
    Graph g = triangle_pendant_graph();
    Rng rng(RngStream{1, 0});
    PercolationOutcome zero = sample_percolation(g, 0.0, rng);
    CHECK(zero.components.size() == 4);
    PercolationOutcome one = sample_percolation(g, 1.0, rng);
    CHECK(one.components.size() == 1);
    CHECK(one.components[0].size == 4);
}

TEST_CASE("component bookkeeping sums to n and r") {
    Graph g = clique_core_pendants_graph(5, 8);
    VertexSet central{0, 1, 2, 3, 4};
    for (double beta : {0.1, 0.5, 0.9}) {
        for (int t = 0; t < 50; ++t) {
            Rng rng(substream(RngStream{3, 9}, t));
            PercolationOutcome out = sample_percolation(g, beta, rng, central);
            int total = 0, central_total = 0;
            for (const auto& comp : out.components) {
                total += comp.size;
                central_total += comp.central_count;
            }
            CHECK(total == 8);
            CHECK(central_total == 5);
            // first component has the largest central count
            for (const auto& comp : out.components)
                CHECK(out.components[0].central_count >= comp.central_count);
        }
    }
}

TEST_CASE("P3 at beta=0.5: all-connected frequency near 1/4") {
    Graph g = path_graph(3);
    const long long trials = 100000;
    long long hits = 0;
    for (long long t = 0; t < trials; ++t) {
        Rng rng(substream(RngStream{11, 0}, t));
        PercolationOutcome out = sample_percolation(g, 0.5, rng);
        if (out.components.size() == 1) ++hits;
    }
    double freq = static_cast<double>(hits) / trials;
    double sigma = std::sqrt(0.25 * 0.75 / trials);
    CHECK(std::abs(freq - 0.25) < 3 * sigma);
}

TEST_CASE("infected_size basics") {
    Graph g = path_graph(3);
    Rng rng(RngStream{2, 0});
    PercolationOutcome zero = sample_percolation(g, 0.0, rng);
    CHECK(infected_size(zero, {0, 2}) == 2);
    PercolationOutcome one = sample_percolation(g, 1.0, rng);
    CHECK(infected_size(one, {1}) == 3);
    // only edge {0,1} retained: seed 2 stays isolated
    Graph g2(3, {{0, 1}});
    PercolationOutcome partial = sample_percolation(g2, 1.0, rng);
    CHECK(infected_size(partial, {2}) == 1);
    CHECK(infected_size(partial, {}) == 0);
}

TEST_CASE("additivity over seeds in distinct components") {
    Graph g(5, {{0, 1}, {2, 3}});
    Rng rng(RngStream{5, 0});
    PercolationOutcome out = sample_percolation(g, 1.0, rng);
    CHECK(infected_size(out, {0, 2}) == infected_size(out, {0}) + infected_size(out, {2}));
}

TEST_CASE("exact_expectation: path oracle 1 + beta + beta^2") {
    Graph g = path_graph(3);
    CHECK(exact_expectation(g, 0.5, {0}) == doctest::Approx(1.75));
    CHECK(exact_expectation(g, 0.0, {0, 2}) == doctest::Approx(2.0));
    CHECK(exact_expectation(g, 1.0, {0}) == doctest::Approx(3.0));
    for (double beta : {0.1, 0.3, 0.9}) {
        CHECK(exact_expectation(g, beta, {0}) == doctest::Approx(1 + beta + beta * beta));
    }
}

TEST_CASE("exact_expectation rejects graphs over the edge cap") {
    Graph big = complete_graph(8);  // 28 edges
    CHECK_THROWS_AS(exact_expectation(big, 0.5, {0}), std::runtime_error);
}

TEST_CASE("uniform-seed oracle equals the average over all k-subsets") {
    for (const auto& [name, g] : fixture_graphs()) {
        if (g.n() > 6 || g.m_edges() > 12) continue;
        CAPTURE(name);
        VertexSet all = g.all_vertices();
        for (int k = 1; k <= g.n(); ++k) {
            double avg = 0.0;
            long long count = 0;
            each_subset(g.n(), k, [&](const std::vector<int>& idx) {
                VertexSet s(idx.begin(), idx.end());
                avg += exact_expectation(g, 0.3, s);
                ++count;
            });
            avg /= static_cast<double>(count);
            CHECK(exact_expectation_uniform(g, 0.3, all, k) == doctest::Approx(avg).epsilon(1e-10));
        }
    }
}

TEST_CASE("estimate_expectation exact endpoints") {
    Graph g = triangle_pendant_graph();
    SeedDistribution uni = uniform_seeds(g.all_vertices(), 2);
    EstimateWithCI zero = estimate_expectation(g, 0.0, uni, 500, RngStream{4, 0});
    CHECK(zero.mean == doctest::Approx(2.0));
    CHECK(zero.std_error == doctest::Approx(0.0));
    EstimateWithCI one = estimate_expectation(g, 1.0, uni, 500, RngStream{4, 1});
    CHECK(one.mean == doctest::Approx(4.0));
}

TEST_CASE("estimate_expectation agrees with the enumeration oracle") {
    for (const auto& [name, g] : fixture_graphs()) {
        if (g.n() > 6 || g.m_edges() > 12) continue;
        CAPTURE(name);
        SeedDistribution uni = uniform_seeds(g.all_vertices(), 1);
        for (double beta : {0.1, 0.5, 0.9}) {
            double exact = exact_expectation_uniform(g, beta, g.all_vertices(), 1);
            EstimateWithCI est = estimate_expectation(g, beta, uni, 20000, RngStream{8, 0});
            double se = std::max(est.std_error, 1e-9);
            CHECK(std::abs(est.mean - exact) < 4 * se + 1e-9);
        }
    }
}

TEST_CASE("estimate_expectation is bit-identical across thread counts") {
    Graph g = clique_core_pendants_graph(5, 8);
    SeedDistribution uni = uniform_seeds(g.all_vertices(), 2);
    EstimateWithCI a = estimate_expectation(g, 0.4, uni, 5000, RngStream{99, 0}, 1);
    EstimateWithCI b = estimate_expectation(g, 0.4, uni, 5000, RngStream{99, 0}, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("coupled monotonicity in beta under shared edge uniforms") {
    // identical streams at increasing beta retain nested edge sets
    for (const auto& [name, g] : fixture_graphs()) {
        if (g.n() > 6) continue;
        CAPTURE(name);
        for (int t = 0; t < 20; ++t) {
            int prev = -1;
            for (double beta : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
                Rng rng(substream(RngStream{21, 5}, t));
                PercolationOutcome out = sample_percolation(g, beta, rng);
                int size = infected_size(out, {0});
                CHECK(size >= prev);
                prev = size;
            }
        }
    }
}

TEST_CASE("seed_miss_probability") {
    CHECK(seed_miss_probability(0, 10, 3) == doctest::Approx(1.0));
    CHECK(seed_miss_probability(10, 10, 3) == doctest::Approx(0.0));
    CHECK(seed_miss_probability(2, 4, 1) == doctest::Approx(0.5));
    // hypergeometric identity: C(pool-h, k)/C(pool, k)
    CHECK(seed_miss_probability(3, 8, 2) == doctest::Approx(10.0 / 28.0));
    CHECK_THROWS_AS(seed_miss_probability(-1, 4, 1), std::domain_error);
    CHECK_THROWS_AS(seed_miss_probability(1, 4, 0), std::domain_error);
}

TEST_CASE("k_partition on degenerate outcomes") {
    Graph g = clique_core_pendants_graph(4, 6);
    Scenario scenario(g, {0, 1, 2, 3});
    Rng rng(RngStream{31, 0});
    const double s = 1.0 / 6.0;

    PercolationOutcome one = sample_percolation(g, 1.0, rng, scenario.central());
    KPartition full = k_partition(one, scenario, s);
    CHECK(full.v1 == 6);
    CHECK(full.v2 == 0);
    CHECK(full.v3 == 0);
    CHECK(full.v4 == 0);
    CHECK(full.c_minus_v1 == 0);

    PercolationOutcome zero = sample_percolation(g, 0.0, rng, scenario.central());
    KPartition iso = k_partition(zero, scenario, s);
    CHECK(iso.v1 == 1);                      // one central singleton
    CHECK(iso.v2 == 2);                      // the periphery singletons
    CHECK(iso.v3 == 3);                      // remaining central singletons: 1 <= 1/(c-s)
    CHECK(iso.v4 == 0);
    CHECK(iso.c_minus_v1 == 3);
}

TEST_CASE("k_partition: core giant plus isolated pendants") {
    // retain exactly the core edges
    Graph g = clique_core_pendants_graph(4, 6);
    Scenario scenario(g, {0, 1, 2, 3});
    PercolationOutcome out;
    out.component_id = {0, 0, 0, 0, 1, 2};
    out.components = {{4, 4}, {1, 0}, {1, 0}};
    KPartition part = k_partition(out, scenario, 1.0 / 6.0);
    CHECK(part.v1 == 4);
    CHECK(part.v2 == 2);
    CHECK(part.c_minus_v1 == 0);
}
