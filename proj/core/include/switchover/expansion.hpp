#pragma once

#include "switchover/graph.hpp"
#include "switchover/rng.hpp"

namespace switchover {

enum class ExpansionMethod { exact, probe };

struct ExpansionReport {
    double q = 0.0;
    double a_star = 0.0;    // min over qn < |X| <= n/2 of e(X, V\X)/|X|
    VertexSet witness;      // arg-min set (exact) or best candidate (probe)
    ExpansionMethod method = ExpansionMethod::exact;
};

// Exact minimum cut ratio over all qn < |X| <= n/2 (2^{n-1} bipartitions,
// n <= 24). G has edge-expansion (a,q) iff a <= a_star.
ExpansionReport exact_edge_expansion(const Graph& g, double q);

// Upper bound on a_star from random and greedy cut candidates; never a
// certificate.
ExpansionReport probe_edge_expansion(const Graph& g, double q, int samples, RngStream rng);

// a_star can only decrease when q decreases (more sets to minimize over).
bool expansion_monotonicity_check(const ExpansionReport& report1, const ExpansionReport& report2);

// Exhaustively check, over all 2^m spanning subgraphs, that whenever the
// largest component has at most n-t vertices there is a set X,
// t <= |X| <= n/2, with no retained crossing edge. Returns true iff the
// claim holds for every subset (it must; a false return flags a bug).
bool verify_large_component_claim(const Graph& g, int t);

struct TailTestResult {
    double empirical_freq = 0.0;  // fraction of trials with |H| <= (1-q)n
    double bound = 0.0;           // rho^n
    long long trials = 0;
    long long hits = 0;
    double p_value = 1.0;
    bool pass = false;  // one-sided binomial test at level 1e-3 does not reject
};

// Monte Carlo check of the giant-component tail bound
// P(|H| <= (1-q)n) <= rho^n for a graph with edge expansion (a,q).
TailTestResult giant_component_tail_test(const Graph& g, double beta, double q, double a,
                                         long long trials, RngStream rng);

// P(X >= hits) for X ~ Binomial(trials, p); exact tail, used by the test
// above and exposed for diagnostics.
double binomial_upper_tail(long long trials, double p, long long hits);

} // namespace switchover
