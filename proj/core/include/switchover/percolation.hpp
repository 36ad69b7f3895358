#pragma once

#include <cstdint>
#include <map>

#include "switchover/graph.hpp"
#include "switchover/rng.hpp"
#include "switchover/scenario.hpp"
#include "switchover/seeds.hpp"

namespace switchover {

struct ComponentInfo {
    int size = 0;           // h_j
    int central_count = 0;  // c_j
};

// One sampled percolation G^beta: retained-edge mask, per-vertex component
// labels, and per-component (size, central count). components[0] is the
// component with the largest central count (ties: smallest component id).
struct PercolationOutcome {
    std::vector<std::uint64_t> retained;   // bitmask over edge indices
    std::vector<int> component_id;         // per vertex, indexes components
    std::vector<ComponentInfo> components;

    bool edge_retained(int e) const { return (retained[e >> 6] >> (e & 63)) & 1ULL; }
};

// Keep each edge independently with probability beta; components by
// disjoint-set union. central may be empty (central counts all zero).
PercolationOutcome sample_percolation(const Graph& g, double beta, Rng& rng,
                                      const VertexSet& central = {});

// Sum of component sizes over components meeting S.
int infected_size(const PercolationOutcome& outcome, const VertexSet& S);

// Exact E|G^beta(S)| by enumeration over all 2^m edge subsets; m <= 24.
double exact_expectation(const Graph& g, double beta, const VertexSet& S);

// Exact E|G^beta(S)| for S ~ Uni(L,k), averaging the per-component seed-miss
// probabilities over the same 2^m enumeration; m <= 24.
double exact_expectation_uniform(const Graph& g, double beta, const VertexSet& L, int k);

// Exact distribution of |G^beta(S)| for fixed S, as size -> probability.
std::map<int, double> exact_distribution(const Graph& g, double beta, const VertexSet& S);

struct EstimateWithCI {
    double mean = 0.0;
    double std_error = 0.0;
    long long trials = 0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

EstimateWithCI make_estimate(long long trials, long long sum, long long sum_sq);

// Monte Carlo estimate of E|G^beta(S)| over both the percolation and the
// seed draw. Trial t uses substream(rng, t), so the result is independent of
// execution order and thread count.
EstimateWithCI estimate_expectation(const Graph& g, double beta, const SeedDistribution& seeds,
                                    long long trials, RngStream rng, int threads = 1);

// Probability that a uniform k-subset of a pool avoids a fixed h-subset:
// prod_{i=0}^{k-1} (1 - h/(pool-i)), or 0 when h > pool-k.
double seed_miss_probability(int h, int pool, int k);

struct KPartition {
    long long v1 = 0, v2 = 0, v3 = 0, v4 = 0;  // |V_1|..|V_4|
    long long c_minus_v1 = 0;                  // |C \ V_1|
    std::vector<int> component_class;          // 1..4 per component index
};

// Component classification behind the large-beta comparison: K1 the
// center-heaviest component, K2 isolated non-central vertices, K3 remaining
// components with h_j <= c_j/(c-s), K4 the rest.
KPartition k_partition(const PercolationOutcome& outcome, const Scenario& scenario, double s);

} // namespace switchover
