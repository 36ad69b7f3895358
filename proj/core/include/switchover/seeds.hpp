#pragma once

#include "switchover/graph.hpp"
#include "switchover/rng.hpp"
#include "switchover/scenario.hpp"

namespace switchover {

// Uni(L,k): the uniform distribution over k-subsets of L.
struct SeedDistribution {
    VertexSet support;
    int k = 1;
};

SeedDistribution uniform_seeds(const VertexSet& L, int k);

// Draw one k-subset, every k-subset equally likely (partial Fisher-Yates).
VertexSet sample_seed(const SeedDistribution& dist, Rng& rng);

// E e(S, V\S) for S ~ Uni(L,k):
//   k * (deg_mean(L) - (k-1)/(m-1) * e(L,L)/m),  with the factor 0 when m=1.
double expected_cut(const Graph& g, const VertexSet& L, int k);

// ((r-k)/(r-1)) * deg_mean(C) - ((n-k)/(n-1)) * deg_mean(V).
// Positive: central seeding wins as beta -> 0.
double small_beta_margin(const Scenario& scenario, int k);

// |Y|/n - |Y cap C|/r. Positive: uniform seeding wins as beta -> 1,
// contingent on the star property.
double large_beta_margin(const Scenario& scenario, const MinDegreeProfile& profile);
double large_beta_margin(const Scenario& scenario);

struct ExtremeBetaReport {
    double small_beta_margin = 0.0;
    double large_beta_margin = 0.0;
    StarProperty star_property = StarProperty::unknown;
    bool weak_switchover_predicted = false;
};

// Combined check for weak switchover from the two extreme-beta conditions.
ExtremeBetaReport extreme_beta_report(const Scenario& scenario, int k, int exact_limit = 20);

struct ExtremeCompareReport {
    long long cut1 = 0;          // e(S1, V\S1)
    long long cut2 = 0;          // e(S2, V\S2)
    int winner_small_beta = 0;   // 1, 2, or 0 for tie (larger cut infects more)
    int y_hits1 = 0;             // |S1 cap Y|
    int y_hits2 = 0;             // |S2 cap Y|
    int winner_large_beta = 0;   // 1, 2, or 0 (more Y seeds -> fewer missable
                                 // min-degree nodes -> larger epidemic)
    StarProperty star_property = StarProperty::unknown;
};

// Deterministic seed-set comparison at the two beta extremes.
ExtremeCompareReport deterministic_extreme_compare(const Graph& g, const VertexSet& S1,
                                                   const VertexSet& S2, int exact_limit = 20);

} // namespace switchover
