#include "switchover/seeds.hpp"

#include <stdexcept>

namespace switchover {

SeedDistribution uniform_seeds(const VertexSet& L, int k) {
    if (k < 1 || k > static_cast<int>(L.size()))
        throw std::domain_error("uniform_seeds: k out of range");
    return SeedDistribution{L, k};
}

VertexSet sample_seed(const SeedDistribution& dist, Rng& rng) {
    const int m = static_cast<int>(dist.support.size());
    std::vector<VertexId> pool = dist.support;
    for (int i = 0; i < dist.k; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(dist.k);
    return make_vertex_set(std::move(pool));
}

double expected_cut(const Graph& g, const VertexSet& L, int k) {
    const int m = static_cast<int>(L.size());
    if (k < 1 || k > m) throw std::domain_error("expected_cut: k out of range");
    double mean_deg = degree_stats(g, L).mean;
    double internal = 0.0;
    if (m > 1) {
        double ell = static_cast<double>(pair_count(g, L, L));
        internal = (static_cast<double>(k - 1) / (m - 1)) * ell / m;
    }
    return k * (mean_deg - internal);
}

double small_beta_margin(const Scenario& scenario, int k) {
    const int n = scenario.n();
    const int r = scenario.r();
    if (k < 1 || k >= r) throw std::domain_error("small_beta_margin: need 1 <= k < r");
    double deg_c = degree_stats(scenario.graph(), scenario.central()).mean;
    double deg_v = degree_stats(scenario.graph(), scenario.graph().all_vertices()).mean;
    double lhs = (static_cast<double>(r - k) / (r - 1)) * deg_c;
    double rhs = (static_cast<double>(n - k) / (n - 1)) * deg_v;
    return lhs - rhs;
}

double large_beta_margin(const Scenario& scenario, const MinDegreeProfile& profile) {
    double y_frac = static_cast<double>(profile.Y.size()) / scenario.n();
    double yc = static_cast<double>(set_intersection(profile.Y, scenario.central()).size());
    return y_frac - yc / scenario.r();
}

double large_beta_margin(const Scenario& scenario) {
    return large_beta_margin(scenario, min_degree_profile(scenario.graph()));
}

ExtremeBetaReport extreme_beta_report(const Scenario& scenario, int k, int exact_limit) {
    ExtremeBetaReport rep;
    MinDegreeProfile profile = min_degree_profile(scenario.graph(), exact_limit);
    rep.small_beta_margin = small_beta_margin(scenario, k);
    rep.large_beta_margin = large_beta_margin(scenario, profile);
    rep.star_property = profile.star_property;
    rep.weak_switchover_predicted = rep.small_beta_margin > 0 && rep.large_beta_margin > 0 &&
                                    rep.star_property == StarProperty::holds;
    return rep;
}

ExtremeCompareReport deterministic_extreme_compare(const Graph& g, const VertexSet& S1,
                                                   const VertexSet& S2, int exact_limit) {
    if (S1.size() != S2.size())
        throw std::invalid_argument("deterministic_extreme_compare: |S1| != |S2|");
    ExtremeCompareReport rep;
    VertexSet all = g.all_vertices();
    rep.cut1 = pair_count(g, S1, set_difference(all, S1));
    rep.cut2 = pair_count(g, S2, set_difference(all, S2));
    if (rep.cut1 != rep.cut2) rep.winner_small_beta = rep.cut1 > rep.cut2 ? 1 : 2;
    MinDegreeProfile profile = min_degree_profile(g, exact_limit);
    rep.star_property = profile.star_property;
    rep.y_hits1 = static_cast<int>(set_intersection(S1, profile.Y).size());
    rep.y_hits2 = static_cast<int>(set_intersection(S2, profile.Y).size());
    if (rep.y_hits1 != rep.y_hits2) rep.winner_large_beta = rep.y_hits1 > rep.y_hits2 ? 1 : 2;
    return rep;
}

} // namespace switchover
