#pragma once

#include <string>

#include "switchover/graph.hpp"
#include "switchover/rng.hpp"
#include "switchover/scenario.hpp"

namespace switchover {

// Power-law random graph with expected weights d_i = (n/i)^{1/(tau-1)},
// i = 1..n; edge {i,j} present independently with probability
// min{d_i d_j / D, 1}, D = sum d_k.
struct ChungLuParams {
    long long n = 0;
    double tau = 2.5;

    double weight(long long i) const;       // d_i, 1-based rank
    double weight_sum() const;              // D
    double weight_sum_approx() const;       // (tau-1)/(tau-2) (n - n^{1/(tau-1)})
};

ChungLuParams chung_lu_params(long long n, double tau);

// d_i for a 1-based rank.
double expected_degree(long long i, long long n, double tau);

// Expected degree of rank i in a sampled graph: sum_j min{d_i d_j/D, 1}.
double analytic_degree(const ChungLuParams& params, long long i);

// Expected average degree of the periphery (ranks > cn), degrees counted in
// the full graph.
double analytic_periphery_degree(const ChungLuParams& params, double c);

// Above this size the row sampler switches from the naive O(n^2) scan to
// geometric index skipping.
constexpr long long kNaiveSamplerLimit = 20000;

Graph sample_chung_lu(const ChungLuParams& params, RngStream rng);
Graph sample_chung_lu_naive(const ChungLuParams& params, RngStream rng);
Graph sample_chung_lu_skipping(const ChungLuParams& params, RngStream rng);

// Central region = floor(cn) largest-weight ranks (0-based vertices 0..r-1).
Scenario cl_scenario(const ChungLuParams& params, Graph graph, double c);
Scenario cl_scenario(const ChungLuParams& params, double c, RngStream rng);

// Manifest JSON for an exported sample: n, tau, seed, D, mean degree.
std::string chung_lu_manifest(const ChungLuParams& params, const Graph& g, RngStream rng);

struct XsProbeReport {
    double min_ratio = 0.0;   // min over probed S of X_S/|S|
    VertexSet arg_min;        // S attaining the minimum (central-subgraph ids)
    double a_target = 0.0;    // (n/4D) c^{-(3-tau)/(tau-1)}
    bool meets_target = false;
    bool exact = false;       // true when |C| <= 20 (full enumeration)
    long long sets_probed = 0;
};

// Probe the expansion of G[C]: X_S = edges between S and C\S for S within C,
// |S| <= |C|/2. Exhaustive for |C| <= 20, otherwise random S with
// log-uniform sizes.
XsProbeReport xs_probe(const Graph& g, const VertexSet& central, double a_target,
                       long long samples, RngStream rng);

double xs_target(const ChungLuParams& params, double c);

struct CorollaryCLReport {
    double b = 0.0;         // average periphery degree used
    double a = 0.0;         // expansion target (n/4D) c^{-(3-tau)/(tau-1)}
    double q = 0.0;         // s(c-s)(1-c)(1-beta)^b / (2c)
    double rho_value = 0.0;
    bool range_ok = false;
    bool q_check_ok = false;
    bool condition_check_ok = false;
    double range_lo = 0.0;  // sqrt(log n / n)
    double range_hi = 0.0;  // (beta/log n)^{(tau-1)/(3-tau)}
};

// Validate the Chung-Lu corollary parameters at finite n. "x << y" is
// operationalized as x <= theta*y. b defaults to the analytic periphery
// degree; pass a measured value to override.
CorollaryCLReport validate_corollary_params(long long n, double tau, double beta, double s,
                                            double c, double epsilon, double theta,
                                            double b_override = -1.0);

} // namespace switchover
