#include "switchover/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "switchover/seeds.hpp"

namespace switchover {

SmallBetaExpansion small_beta_expansion(const Graph& g, const VertexSet& L, int k, double beta) {
    if (beta < 0.0 || beta > 1.0) throw std::domain_error("small_beta_expansion: beta out of [0,1]");
    SmallBetaExpansion ex;
    ex.first_order = k + expected_cut(g, L, k) * beta;
    DegreeStats stats = degree_stats(g, g.all_vertices());
    double spread = stats.second_moment - stats.mean;
    ex.remainder_lo = -0.5 * spread * beta * beta * g.n();
    ex.remainder_hi = spread * beta * beta * g.n();
    ex.symmetric_bound = stats.second_moment * beta * beta * g.n();
    return ex;
}

SmallBetaChoice choose_small_beta(double c1, double second_moment, double s) {
    if (c1 <= 0.0 || second_moment <= 0.0 || s <= 0.0 || s >= 1.0)
        throw std::domain_error("choose_small_beta: positive c1, second_moment and 0<s<1 required");
    SmallBetaChoice choice;
    choice.beta = std::min(0.25 * c1 * s / second_moment, 1.0);
    choice.guaranteed_gap = 0.5 * c1 * choice.beta * s;
    return choice;
}

double rho(double beta, double a, double q) {
    if (beta <= 0.0 || beta >= 1.0) throw std::domain_error("rho: need 0 < beta < 1");
    if (a <= 0.0) throw std::domain_error("rho: need a > 0");
    if (q <= 0.0 || q >= 0.5) throw std::domain_error("rho: need 0 < q < 1/2");
    // exp(q * (1 + a log(1-beta) - log q)) avoids underflow in the base
    return std::exp(q * (1.0 + a * std::log1p(-beta) - std::log(q)));
}

LargeBetaBound large_beta_rhs(long long n, double c, double s, double b, double beta, double a,
                              double q, long long r, long long k) {
    if (!(0.0 < s && s < c && c < 1.0))
        throw std::domain_error("large_beta_rhs: need 0 < s < c < 1");
    if (q >= 1.0 / 3.0) throw std::domain_error("large_beta_rhs: lemma requires q < 1/3");
    LargeBetaBound bound;
    bound.rho_value = rho(beta, a, q);
    double nn = static_cast<double>(n);
    bound.term_gain = s * (1.0 - c) * std::pow(1.0 - beta, b) * nn;
    bound.term_q = c / (c - s) * q * nn;
    bound.term_rho = (1.0 + c / (c - s)) * nn * std::pow(bound.rho_value, static_cast<double>(r));
    bound.term_exp = nn * std::exp(-2.0 * c * static_cast<double>(k) / 3.0);
    bound.rhs = bound.term_gain - bound.term_q - bound.term_rho - bound.term_exp;
    return bound;
}

ChernoffBound chernoff_tail_bound(double z, double q, long long n) {
    if (z < 0.0) throw std::domain_error("chernoff_tail_bound: need z >= 0");
    if (q <= 0.0 || q >= 1.0) throw std::domain_error("chernoff_tail_bound: need 0 < q < 1");
    ChernoffBound bound;
    if (z == 0.0) return bound;  // (0)^q = 0 for q > 0
    double log_tight = q * (std::log(z) - std::log(q)) - (1.0 - q) * std::log1p(-q);
    double log_loose = q * (1.0 + std::log(z) - std::log(q));
    bound.tight = std::exp(static_cast<double>(n) * log_tight);
    bound.loose = std::exp(static_cast<double>(n) * log_loose);
    return bound;
}

std::optional<FeasibleBeta> feasible_large_beta(double c, double s, double b, double a,
                                                double epsilon) {
    if (!(0.0 < s && s < c && c < 1.0))
        throw std::domain_error("feasible_large_beta: need 0 < s < c < 1");
    if (!(0.0 <= b && b < a)) throw std::domain_error("feasible_large_beta: need 0 <= b < a");
    if (epsilon <= 0.0) throw std::domain_error("feasible_large_beta: need epsilon > 0");
    constexpr int kGridPoints = 512;
    const double log_lo = std::log(1e-6), log_hi = std::log(1.0);
    for (int i = 0; i < kGridPoints; ++i) {
        // gamma = 1 - beta, ascending from 1e-6, so beta descends from 1
        double t = static_cast<double>(i) / (kGridPoints - 1);
        double gamma = std::exp(log_lo + t * (log_hi - log_lo));
        double beta = 1.0 - gamma;
        if (beta <= 0.0 || beta >= 1.0) continue;
        double q = (1.0 + epsilon) * std::exp(1.0 + a * std::log(gamma));
        if (q >= 1.0 / 3.0) continue;
        double gain = s * (1.0 - c) * std::pow(gamma, b);
        if (gain > c / (c - s) * q) return FeasibleBeta{beta, q};
    }
    return std::nullopt;
}

double expansion_degree_floor(double a, long long N) {
    if (a < 1.0 || N < 2) throw std::domain_error("expansion_degree_floor: need a >= 1, N >= 2");
    return 2.0 * a * static_cast<double>(N - 1) / static_cast<double>(N + 1);
}

StrongConditionReport check_strong_conditions(double c, double s, double b_max, double epsilon,
                                              double second_moment, double expansion_witness_a) {
    StrongConditionReport rep;
    rep.c_ok = c <= 1.0 - epsilon;
    rep.s_ok = epsilon <= s && s <= (1.0 - c) * c / 2.0;
    rep.expansion_ok = expansion_witness_a >= b_max + epsilon;
    rep.second_moment = second_moment;
    rep.c1 = 0.5 * epsilon * epsilon;
    rep.all_ok = rep.c_ok && rep.s_ok && rep.expansion_ok;
    return rep;
}

} // namespace switchover
