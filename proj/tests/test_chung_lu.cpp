#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "switchover/chung_lu.hpp"
#include "switchover/fixtures.hpp"

using namespace switchover;

TEST_CASE("expected_degree endpoints and monotonicity") {
    CHECK(expected_degree(1, 1000, 2.5) == doctest::Approx(std::pow(1000.0, 2.0 / 3.0)));
    CHECK(expected_degree(1000, 1000, 2.5) == doctest::Approx(1.0));
    double prev = expected_degree(1, 1000, 2.5);
    for (long long i = 2; i <= 1000; i += 17) {
        double cur = expected_degree(i, 1000, 2.5);
        CHECK(cur <= prev);
        prev = cur;
    }
    CHECK_THROWS_AS(expected_degree(0, 10, 2.5), std::domain_error);
    CHECK_THROWS_AS(expected_degree(11, 10, 2.5), std::domain_error);
    CHECK_THROWS_AS(expected_degree(1, 10, 3.0), std::domain_error);
}

TEST_CASE("weight ratios follow the power law exactly") {
    ChungLuParams p = chung_lu_params(5000, 2.3);
    for (long long i : {2LL, 7LL, 100LL, 4999LL}) {
        CHECK(p.weight(i) / p.weight(1) ==
              doctest::Approx(std::pow(1.0 / static_cast<double>(i), 1.0 / 1.3)).epsilon(1e-12));
    }
}

TEST_CASE("weight_sum is close to its closed-form approximation") {
    ChungLuParams p = chung_lu_params(10000, 2.5);
    double exact = p.weight_sum();
    double approx = p.weight_sum_approx();
    CHECK(std::abs(exact - approx) / exact < 0.10);
}

TEST_CASE("analytic_degree matches a direct clamped-probability sum") {
    ChungLuParams p = chung_lu_params(500, 2.5);
    double D = p.weight_sum();
    for (long long i : {1LL, 2LL, 10LL, 250LL, 500LL}) {
        CAPTURE(i);
        double direct = 0.0;
        for (long long j = 1; j <= p.n; ++j) {
            if (j == i) continue;
            direct += std::min(p.weight(i) * p.weight(j) / D, 1.0);
        }
        CHECK(analytic_degree(p, i) == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("analytic_periphery_degree averages the periphery ranks") {
    ChungLuParams p = chung_lu_params(200, 2.5);
    double direct = 0.0;
    long long r = 20;  // c = 0.1
    for (long long i = r + 1; i <= p.n; ++i) direct += analytic_degree(p, i);
    direct /= static_cast<double>(p.n - r);
    CHECK(analytic_periphery_degree(p, 0.1) == doctest::Approx(direct).epsilon(1e-9));
    CHECK_THROWS_AS(analytic_periphery_degree(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(analytic_periphery_degree(p, 0.001), std::domain_error);
}

TEST_CASE("samplers hit the expected edge count and top degree") {
    ChungLuParams p = chung_lu_params(300, 2.5);
    double D = p.weight_sum();
    double expect_m = 0.0;
    for (long long i = 1; i < p.n; ++i) {
        for (long long j = i + 1; j <= p.n; ++j) {
            expect_m += std::min(p.weight(i) * p.weight(j) / D, 1.0);
        }
    }
    double expect_d1 = analytic_degree(p, 1);

    const int reps = 30;
    for (bool skipping : {false, true}) {
        CAPTURE(skipping);
        double m_sum = 0.0, d1_sum = 0.0;
        for (int t = 0; t < reps; ++t) {
            RngStream seed{static_cast<std::uint64_t>(100 + t), skipping ? 1ULL : 0ULL};
            Graph g = skipping ? sample_chung_lu_skipping(p, seed) : sample_chung_lu_naive(p, seed);
            CHECK(g.n() == 300);
            m_sum += g.m_edges();
            d1_sum += g.degree(0);
        }
        // Bernoulli sums: variance at most the mean
        double m_sigma = std::sqrt(expect_m / reps);
        CHECK(std::abs(m_sum / reps - expect_m) < 4 * m_sigma);
        double d1_sigma = std::sqrt(expect_d1 / reps);
        CHECK(std::abs(d1_sum / reps - expect_d1) < 4 * d1_sigma);
    }
}

TEST_CASE("clamped pairs are always connected") {
    // n=10, tau=2.1: d_1 d_2 / D > 1, so edge {0,1} is deterministic
    ChungLuParams p = chung_lu_params(10, 2.1);
    REQUIRE(p.weight(1) * p.weight(2) / p.weight_sum() > 1.0);
    for (int t = 0; t < 20; ++t) {
        Graph g = sample_chung_lu(p, RngStream{static_cast<std::uint64_t>(t), 3});
        CHECK(g.has_edge(0, 1));
    }
}

TEST_CASE("sampling is reproducible from the stream") {
    ChungLuParams p = chung_lu_params(400, 2.6);
    Graph a = sample_chung_lu(p, RngStream{77, 0});
    Graph b = sample_chung_lu(p, RngStream{77, 0});
    CHECK(a.edges() == b.edges());
    Graph c = sample_chung_lu(p, RngStream{78, 0});
    CHECK(a.edges() != c.edges());
}

TEST_CASE("cl_scenario picks the heaviest ranks as the central region") {
    ChungLuParams p = chung_lu_params(100, 2.5);
    Scenario s = cl_scenario(p, 0.1, RngStream{5, 0});
    CHECK(s.n() == 100);
    CHECK(s.r() == 10);
    CHECK(s.central() == VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK_THROWS_AS(cl_scenario(p, 0.005, RngStream{5, 0}), std::domain_error);
}

TEST_CASE("chung_lu_manifest round-trips the sample metadata") {
    ChungLuParams p = chung_lu_params(50, 2.5);
    Graph g = sample_chung_lu(p, RngStream{9, 4});
    nlohmann::json j = nlohmann::json::parse(chung_lu_manifest(p, g, RngStream{9, 4}));
    CHECK(j["schema"] == 1);
    CHECK(j["n"] == 50);
    CHECK(j["tau"] == doctest::Approx(2.5));
    CHECK(j["seed"] == 9);
    CHECK(j["D"] == doctest::Approx(p.weight_sum()));
    CHECK(j["mean_degree"] == doctest::Approx(2.0 * g.m_edges() / 50.0));
}

TEST_CASE("xs_probe enumerates exactly on a small central clique") {
    Graph g = clique_core_pendants_graph(5, 8);
    VertexSet central{0, 1, 2, 3, 4};
    XsProbeReport rep = xs_probe(g, central, 2.0, 10, RngStream{1, 0});
    CHECK(rep.exact);
    CHECK(rep.min_ratio == doctest::Approx(3.0));  // K5: min(4/1, 6/2)
    CHECK(rep.sets_probed == 15);                  // 5 singletons + 10 pairs
    CHECK(rep.meets_target);
    XsProbeReport strict = xs_probe(g, central, 4.0, 10, RngStream{1, 0});
    CHECK_FALSE(strict.meets_target);
}

TEST_CASE("xs_probe sampled mode upper-bounds the exact minimum") {
    ChungLuParams p = chung_lu_params(120, 2.5);
    Graph g = sample_chung_lu(p, RngStream{13, 0});
    VertexSet small_c{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    XsProbeReport exact = xs_probe(g, small_c, 1.0, 1, RngStream{13, 1});
    REQUIRE(exact.exact);
    VertexSet big_c;
    for (int v = 0; v < 30; ++v) big_c.push_back(v);
    XsProbeReport sampled = xs_probe(g, big_c, 1.0, 500, RngStream{13, 2});
    CHECK_FALSE(sampled.exact);
    CHECK(sampled.sets_probed == 500);
    // sampled minimum over a superset region can still only report probed sets
    CHECK(sampled.min_ratio >= 0.0);
    CHECK(sampled.arg_min.size() <= 15);
}

TEST_CASE("validate_corollary_params internal consistency") {
    const long long n = 20000;
    const double tau = 2.5, beta = 0.5, s = 0.02, c = 0.04, eps = 0.1, theta = 0.1;
    CorollaryCLReport rep = validate_corollary_params(n, tau, beta, s, c, eps, theta);
    ChungLuParams p = chung_lu_params(n, tau);
    CHECK(rep.a == doctest::Approx(xs_target(p, c)));
    CHECK(rep.b == doctest::Approx(analytic_periphery_degree(p, c)));
    double log_n = std::log(static_cast<double>(n));
    CHECK(rep.range_lo == doctest::Approx(std::sqrt(log_n / n)));
    CHECK(rep.range_hi == doctest::Approx(std::pow(beta / log_n, 1.5 / 0.5)));
    CHECK(rep.range_ok == (rep.range_lo <= theta * s && s <= theta * rep.range_hi));
    double expect_q = s * (c - s) * (1 - c) * std::pow(1 - beta, rep.b) / (2 * c);
    CHECK(rep.q == doctest::Approx(expect_q));
    CHECK(rep.q_check_ok ==
          (rep.q > (1 + eps) * std::exp(1.0) * std::pow(1 - beta, rep.a)));

    // b_override is honoured
    CorollaryCLReport forced = validate_corollary_params(n, tau, beta, s, c, eps, theta, 2.0);
    CHECK(forced.b == doctest::Approx(2.0));

    CHECK_THROWS_AS(validate_corollary_params(n, tau, beta, 0.05, 0.04, eps, theta),
                    std::domain_error);
    CHECK_THROWS_AS(validate_corollary_params(n, 3.0, beta, s, c, eps, theta), std::domain_error);
    CHECK_THROWS_AS(validate_corollary_params(n, tau, 1.0, s, c, eps, theta), std::domain_error);
    CHECK_THROWS_AS(validate_corollary_params(n, tau, beta, s, c, eps, 0.0), std::domain_error);
}
