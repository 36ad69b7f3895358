#pragma once

#include <optional>

#include "switchover/graph.hpp"

namespace switchover {

// First-order expansion of E|G^beta(S)| for S ~ Uni(L,k), with the
// two-sided remainder envelope and the coarser symmetric one.
struct SmallBetaExpansion {
    double first_order = 0.0;    // k + beta * E e(S, V\S)
    double remainder_lo = 0.0;   // -(1/2)(deg2 - deg) beta^2 n
    double remainder_hi = 0.0;   // (deg2 - deg) beta^2 n
    double symmetric_bound = 0.0;  // deg2 * beta^2 * n, the coarser |R| bound
};

SmallBetaExpansion small_beta_expansion(const Graph& g, const VertexSet& L, int k, double beta);

struct SmallBetaChoice {
    double beta = 0.0;
    double guaranteed_gap = 0.0;  // (1/2) c1 beta s n, per-n factor applied by caller
};

// beta <= (1/4) c1 s / deg2(V), clamped to 1. guaranteed_gap is the
// per-vertex gap (1/2) c1 beta s; multiply by n for the absolute bound.
SmallBetaChoice choose_small_beta(double c1, double second_moment, double s);

// rho = (e (1-beta)^a / q)^q; a useful bound only when q > e(1-beta)^a.
double rho(double beta, double a, double q);

struct LargeBetaBound {
    double rho_value = 0.0;
    double term_gain = 0.0;  // s(1-c)(1-beta)^b n
    double term_q = 0.0;     // (c/(c-s)) q n
    double term_rho = 0.0;   // (1 + c/(c-s)) n rho^r
    double term_exp = 0.0;   // n exp(-2ck/3)
    double rhs = 0.0;        // gain - q - rho - exp
};

// Right-hand side of the large-beta comparison:
// E|G^beta(S_V)| - E|G^beta(S_C)| >= rhs when G[C] has edge expansion (a,q).
LargeBetaBound large_beta_rhs(long long n, double c, double s, double b, double beta, double a,
                              double q, long long r, long long k);

struct ChernoffBound {
    double tight = 0.0;  // [(z/q)^q (1/(1-q))^(1-q)]^n
    double loose = 0.0;  // ((e z / q)^q)^n
};

ChernoffBound chernoff_tail_bound(double z, double q, long long n);

struct FeasibleBeta {
    double beta = 0.0;
    double q = 0.0;
};

// Search a descending beta grid (512 log-spaced values of 1-beta in
// [1e-6, 1)) for the first beta where q = (1+eps) e (1-beta)^a satisfies
// q < 1/3 and s(1-c)(1-beta)^b > (c/(c-s)) q.
std::optional<FeasibleBeta> feasible_large_beta(double c, double s, double b, double a,
                                                double epsilon);

// Average-degree floor 2a(N-1)/(N+1) implied by edge expansion (a,q).
double expansion_degree_floor(double a, long long N);

struct StrongConditionReport {
    bool c_ok = false;          // c <= 1 - eps
    bool s_ok = false;          // eps <= s <= (1-c)c/2
    bool expansion_ok = false;  // expansion witness a >= b_max + eps
    double second_moment = 0.0;
    double c1 = 0.0;  // (1/2) eps^2
    bool all_ok = false;
};

StrongConditionReport check_strong_conditions(double c, double s, double b_max, double epsilon,
                                              double second_moment, double expansion_witness_a);

} // namespace switchover
