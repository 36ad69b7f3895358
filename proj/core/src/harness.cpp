#include "switchover/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "switchover/bounds.hpp"
#include "switchover/chung_lu.hpp"
#include "switchover/expansion.hpp"
#include "switchover/fixtures.hpp"
#include "switchover/seeds.hpp"
#include "switchover/sir.hpp"

namespace switchover {

std::vector<double> SweepConfig::default_beta_grid() {
    return {0.0, 0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.35, 0.5, 0.65, 0.8, 0.9, 0.95, 0.99, 1.0};
}

namespace {

void validate_config(const Scenario& scenario, const SweepConfig& config, long long& k) {
    if (config.beta_grid.empty()) throw std::invalid_argument("run_sweep: empty beta grid");
    for (std::size_t i = 0; i < config.beta_grid.size(); ++i) {
        double b = config.beta_grid[i];
        if (b < 0.0 || b > 1.0) throw std::invalid_argument("run_sweep: beta out of [0,1]");
        if (i > 0 && b <= config.beta_grid[i - 1])
            throw std::invalid_argument("run_sweep: beta grid must be strictly increasing");
    }
    if (config.trials < 100) throw std::invalid_argument("run_sweep: trials >= 100 required");
    k = static_cast<long long>(config.s * scenario.n());
    if (k < 1 || k > scenario.r())
        throw std::invalid_argument("run_sweep: k = floor(s*n) out of [1, r]");
}

} // namespace

std::vector<SweepRecord> run_sweep(const Scenario& scenario, const SweepConfig& config) {
    long long k = 0;
    validate_config(scenario, config, k);
    const Graph& g = scenario.graph();
    SeedDistribution dist_c = uniform_seeds(scenario.central(), static_cast<int>(k));
    SeedDistribution dist_v = uniform_seeds(g.all_vertices(), static_cast<int>(k));
    RngStream base{config.master_seed, 0};
    const int threads = std::max(1, config.threads);
    std::vector<SweepRecord> records;
    for (std::size_t bi = 0; bi < config.beta_grid.size(); ++bi) {
        const double beta = config.beta_grid[bi];
        RngStream beta_stream = substream(base, static_cast<std::uint64_t>(bi));
        const long long trials = config.trials;
        // integer accumulators: sums are exact, so any trial order (and any
        // thread count) produces identical results
        std::vector<std::array<long long, 6>> partial(threads, {0, 0, 0, 0, 0, 0});
        auto worker = [&](int tid) {
            auto& acc = partial[tid];
            for (long long t = tid; t < trials; t += threads) {
                Rng r(substream(beta_stream, static_cast<std::uint64_t>(t)));
                PercolationOutcome outcome = sample_percolation(g, beta, r);
                VertexSet sc = sample_seed(dist_c, r);
                VertexSet sv = sample_seed(dist_v, r);
                long long xc = infected_size(outcome, sc);
                long long xv = infected_size(outcome, sv);
                long long d = xv - xc;
                acc[0] += xc;
                acc[1] += xc * xc;
                acc[2] += xv;
                acc[3] += xv * xv;
                acc[4] += d;
                acc[5] += d * d;
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
            for (auto& th : pool) th.join();
        }
        std::array<long long, 6> total{0, 0, 0, 0, 0, 0};
        for (const auto& acc : partial)
            for (int i = 0; i < 6; ++i) total[i] += acc[i];
        SweepRecord rec;
        rec.beta = beta;
        rec.est_c = make_estimate(trials, total[0], total[1]);
        rec.est_v = make_estimate(trials, total[2], total[3]);
        rec.diff = make_estimate(trials, total[4], total[5]);
        rec.k = k;
        rec.n = scenario.n();
        rec.seed = config.master_seed;
        records.push_back(rec);
    }
    return records;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::string out = "beta,mean_C,se_C,mean_V,se_V,diff_mean,diff_se,trials,k,n,seed\n";
    char buf[512];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%lld,%lld,%lld,%llu\n",
                      r.beta, r.est_c.mean, r.est_c.std_error, r.est_v.mean, r.est_v.std_error,
                      r.diff.mean, r.diff.std_error, r.est_c.trials, r.k, r.n,
                      static_cast<unsigned long long>(r.seed));
        out += buf;
    }
    return out;
}

void write_sweep_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write CSV: " + path);
    out << sweep_csv(records);
}

SwitchoverVerdict detect_switchover(const std::vector<SweepRecord>& records, long long n,
                                    double delta_min) {
    if (records.size() < 2) throw std::invalid_argument("detect_switchover: need >= 2 records");
    SwitchoverVerdict verdict;
    const SweepRecord* best_neg = nullptr;  // central wins: diff CI < 0
    const SweepRecord* best_pos = nullptr;  // uniform wins: diff CI > 0
    for (const auto& r : records) {
        if (r.diff.ci_hi < 0.0 && (!best_neg || r.diff.mean < best_neg->diff.mean)) best_neg = &r;
        if (r.diff.ci_lo > 0.0 && (!best_pos || r.diff.mean > best_pos->diff.mean)) best_pos = &r;
    }
    if (best_neg && best_pos) {
        verdict.beta_1 = best_neg->beta;
        verdict.beta_2 = best_pos->beta;
        verdict.delta_hat =
            std::min(std::abs(best_neg->diff.mean), std::abs(best_pos->diff.mean)) / n;
        bool strong = std::abs(best_neg->diff.mean) >= delta_min * n &&
                      std::abs(best_pos->diff.mean) >= delta_min * n;
        verdict.status = strong ? SwitchoverStatus::strong : SwitchoverStatus::weak;
    } else if (best_neg || best_pos) {
        verdict.status = SwitchoverStatus::none;
    } else {
        verdict.status = SwitchoverStatus::inconclusive;
    }
    return verdict;
}

namespace {

Graph random_regular_connected(int n, int d, RngStream rng) {
    if (n * d % 2 != 0 || d >= n) throw std::invalid_argument("random regular: infeasible n, d");
    Rng r(rng);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        // pairing model, rejecting loops, multi-edges and disconnection
        std::vector<int> stubs;
        stubs.reserve(n * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i) {
            int j = static_cast<int>(r.below(static_cast<std::uint64_t>(i + 1)));
            std::swap(stubs[i], stubs[j]);
        }
        std::vector<std::pair<VertexId, VertexId>> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph g(n, std::move(edges));
        if (g.connected()) return g;
    }
    throw std::runtime_error("random regular: rejection sampling failed");
}

} // namespace

Scenario canonical_scenario(const std::string& id, const CanonicalParams& params) {
    if (id == "clique-core-pendants") {
        Graph g = clique_core_pendants_graph(params.r, params.n);
        VertexSet central(params.r);
        for (int i = 0; i < params.r; ++i) central[i] = i;
        return Scenario(std::move(g), std::move(central));
    }
    if (id == "dregular-core-pendants") {
        int d = params.degree > 0 ? params.degree : 3;
        if (params.n - params.r > params.r)
            throw std::invalid_argument("dregular-core-pendants: need n - r <= r");
        Graph core = random_regular_connected(params.r, d, RngStream{params.seed, 77});
        std::vector<std::pair<VertexId, VertexId>> edges = core.edges();
        for (int i = 0; i < params.n - params.r; ++i) edges.emplace_back(i, params.r + i);
        Graph g(params.n, std::move(edges));
        VertexSet central(params.r);
        for (int i = 0; i < params.r; ++i) central[i] = i;
        return Scenario(std::move(g), std::move(central));
    }
    if (id == "double-star") {
        int leaves = (params.n - 2) / 2;
        if (leaves < 1 || params.n != 2 + 2 * leaves)
            throw std::invalid_argument("double-star: n must be even and >= 4");
        return Scenario(double_star_graph(leaves), VertexSet{0, 1});
    }
    if (id == "path" || id == "cycle") {
        if (params.n < 3) throw std::invalid_argument(id + ": n >= 3 required");
        Graph g = id == "path" ? path_graph(params.n) : cycle_graph(params.n);
        int r = params.r > 0 ? params.r : params.n / 2;
        if (r < 1 || r >= params.n) throw std::invalid_argument(id + ": bad central size");
        VertexSet central(r);
        for (int i = 0; i < r; ++i) central[i] = i;
        return Scenario(std::move(g), std::move(central));
    }
    throw std::invalid_argument("canonical_scenario: unknown id " + id);
}

std::string phase_diagram_csv(const PhaseDiagramConfig& config) {
    if (config.beta_grid.empty() || config.s_grid.empty())
        throw std::invalid_argument("phase_diagram: empty grid");
    std::string out =
        "beta,s,c,b,a,q,rho,range_lo,range_hi,range_ok,q_check_ok,condition_check_ok,"
        "ocklk_lo_ok,ocklk_hi_ok\n";
    ChungLuParams params = chung_lu_params(config.n, config.tau);
    double log_n = std::log(static_cast<double>(config.n));
    char buf[512];
    for (double s : config.s_grid) {
        double c = 2.0 * s;  // corollary regime: s = Theta(c)
        if (c >= 1.0) throw std::invalid_argument("phase_diagram: s too large, c = 2s >= 1");
        double b = analytic_periphery_degree(params, c);
        for (double beta : config.beta_grid) {
            CorollaryCLReport rep =
                validate_corollary_params(config.n, config.tau, beta, s, c, config.epsilon,
                                          config.theta, b);
            // cited prior-claim window, displayed for comparison only
            double ocklk_lo = std::pow(beta, -1.0 / std::abs(config.tau - 3.0)) / config.n;
            double ocklk_hi = std::pow(beta, (config.tau - 1.0) / (3.0 - config.tau));
            bool ocklk_lo_ok = ocklk_lo <= config.theta * s;
            bool ocklk_hi_ok = s <= config.theta * ocklk_hi;
            std::snprintf(buf, sizeof(buf),
                          "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%d,%d,%d,%d\n",
                          beta, s, c, rep.b, rep.a, rep.q, rep.rho_value, rep.range_lo,
                          rep.range_hi, rep.range_ok ? 1 : 0, rep.q_check_ok ? 1 : 0,
                          rep.condition_check_ok ? 1 : 0, ocklk_lo_ok ? 1 : 0, ocklk_hi_ok ? 1 : 0);
            out += buf;
        }
    }
    (void)log_n;
    return out;
}

// ---------------------------------------------------------------------------
// verification suite

namespace {

// all k-subsets of {0..m-1} via index vector
template <typename Visit>
void for_each_combination(int m, int k, Visit&& visit) {
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

double tv_distance(const std::map<int, double>& exact, const std::map<int, long long>& counts,
                   long long trials) {
    double tv = 0.0;
    std::map<int, double> empirical;
    for (const auto& [size, count] : counts)
        empirical[size] = static_cast<double>(count) / trials;
    for (const auto& [size, p] : exact) {
        auto it = empirical.find(size);
        double q = it == empirical.end() ? 0.0 : it->second;
        tv += std::abs(p - q);
        if (it != empirical.end()) empirical.erase(it);
    }
    for (const auto& [size, q] : empirical) tv += q;
    return tv / 2.0;
}

VertexSet prefix_set(int count) {
    VertexSet s(count);
    for (int i = 0; i < count; ++i) s[i] = i;
    return s;
}

void check_sir_equivalence(std::uint64_t seed, std::vector<VerifyCheck>& checks) {
    for (const auto& [name, g] : fixture_graphs()) {
        if (g.m_edges() > 5) continue;
        for (double beta : {0.3, 0.7}) {
            VertexSet s{0};
            auto exact = exact_distribution(g, beta, s);
            std::map<int, long long> counts;
            const long long runs = 100000;
            RngStream stream{seed, splitmix64(std::hash<std::string>{}(name))};
            for (long long t = 0; t < runs; ++t) {
                Rng r(substream(stream, static_cast<std::uint64_t>(t)));
                ++counts[sir_total(g, beta, s, r)];
            }
            double tv = tv_distance(exact, counts, runs);
            VerifyCheck check;
            check.name = "sir-percolation-tv/" + name + "/beta=" + std::to_string(beta);
            check.pass = tv < 0.01;
            check.detail = "tv=" + std::to_string(tv);
            checks.push_back(check);
        }
    }
}

void check_seed_cut_identity(std::vector<VerifyCheck>& checks) {
    for (const auto& [name, g] : fixture_graphs()) {
        if (g.n() > 8) continue;
        VertexSet all = g.all_vertices();
        double worst = 0.0;
        for (const VertexSet& L : {all, prefix_set(std::max(2, g.n() / 2))}) {
            const int m = static_cast<int>(L.size());
            for (int k = 1; k <= m; ++k) {
                double brute = 0.0;
                long long count = 0;
                for_each_combination(m, k, [&](const std::vector<int>& idx) {
                    VertexSet s;
                    for (int i : idx) s.push_back(L[i]);
                    s = make_vertex_set(std::move(s));
                    brute += static_cast<double>(pair_count(g, s, set_difference(all, s)));
                    ++count;
                });
                brute /= static_cast<double>(count);
                double formula = expected_cut(g, L, k);
                double rel = std::abs(formula - brute) / std::max(1.0, std::abs(brute));
                worst = std::max(worst, rel);
            }
        }
        VerifyCheck check;
        check.name = "seed-cut-identity/" + name;
        check.pass = worst <= 1e-12;
        check.detail = "max_rel_err=" + std::to_string(worst);
        checks.push_back(check);
    }
}

void check_small_beta_envelope(std::vector<VerifyCheck>& checks) {
    for (const auto& [name, g] : fixture_graphs()) {
        if (g.m_edges() > 16 || g.n() > 8) continue;
        VertexSet all = g.all_vertices();
        bool pass = true;
        std::string detail;
        for (const VertexSet& L : {all, prefix_set(std::max(2, g.n() / 2))}) {
            const int m = static_cast<int>(L.size());
            for (int k = 1; k <= m; ++k) {
                for (double beta : {0.01, 0.02, 0.05, 0.1}) {
                    double exact = exact_expectation_uniform(g, beta, L, k);
                    SmallBetaExpansion ex = small_beta_expansion(g, L, k, beta);
                    if (exact < ex.first_order + ex.remainder_lo - 1e-9 ||
                        exact > ex.first_order + ex.remainder_hi + 1e-9) {
                        pass = false;
                        detail = "violation at k=" + std::to_string(k) +
                                 " beta=" + std::to_string(beta);
                    }
                }
            }
        }
        VerifyCheck check;
        check.name = "small-beta-envelope/" + name;
        check.pass = pass;
        check.detail = pass ? "within envelope" : detail;
        checks.push_back(check);
    }
}

void check_corollary_gap(std::vector<VerifyCheck>& checks) {
    Graph g = clique_core_pendants_graph(5, 8);
    Scenario scenario(g, prefix_set(5));
    const int k = 2;
    const double s = static_cast<double>(k) / scenario.n();
    double c1 = small_beta_margin(scenario, k);
    DegreeStats stats = degree_stats(g, g.all_vertices());
    SmallBetaChoice choice = choose_small_beta(c1, stats.second_moment, s);
    double exact_c = exact_expectation_uniform(g, choice.beta, scenario.central(), k);
    double exact_v = exact_expectation_uniform(g, choice.beta, g.all_vertices(), k);
    double gap = exact_c - exact_v;
    double bound = 0.5 * c1 * choice.beta * s * scenario.n();
    VerifyCheck check;
    check.name = "small-beta-corollary-gap/clique-core-5-8";
    check.pass = gap >= bound;
    check.detail = "gap=" + std::to_string(gap) + " bound=" + std::to_string(bound);
    checks.push_back(check);
}

void check_large_component_claim(std::vector<VerifyCheck>& checks) {
    for (const auto& [name, g] : fixture_graphs()) {
        if (g.n() > 8 || g.m_edges() > 16) continue;
        bool pass = true;
        for (int t = 1; t <= g.n() / 3; ++t) {
            if (!verify_large_component_claim(g, t)) pass = false;
        }
        if (g.n() / 3 < 1) continue;
        VerifyCheck check;
        check.name = "large-component-claim/" + name;
        check.pass = pass;
        check.detail = pass ? "all t verified" : "counterexample found";
        checks.push_back(check);
    }
}

void check_degree_floor(std::vector<VerifyCheck>& checks) {
    for (const auto& [name, g] : fixture_graphs()) {
        if (g.n() % 2 == 0 || g.n() > 13) continue;
        const int m = g.n() / 2;
        VertexSet all = g.all_vertices();
        double a = -1.0;
        for_each_combination(g.n(), m, [&](const std::vector<int>& idx) {
            VertexSet x(idx.begin(), idx.end());
            double ratio =
                static_cast<double>(pair_count(g, x, set_difference(all, x))) / m;
            if (a < 0.0 || ratio < a) a = ratio;
        });
        double floor_value = 2.0 * a * m / (m + 1);
        double mean_deg = degree_stats(g, all).mean;
        VerifyCheck check;
        check.name = "degree-floor/" + name;
        check.pass = mean_deg >= floor_value - 1e-12;
        check.detail = "mean=" + std::to_string(mean_deg) + " floor=" + std::to_string(floor_value);
        checks.push_back(check);
    }
}

void check_expand_tail(std::uint64_t seed, std::vector<VerifyCheck>& checks) {
    Graph g = complete_graph(20);
    TailTestResult result = giant_component_tail_test(g, 0.5, 0.2, 10.0, 20000, RngStream{seed, 901});
    VerifyCheck check;
    check.name = "expand-tail/K20";
    check.pass = result.pass;
    check.detail = "freq=" + std::to_string(result.empirical_freq) +
                   " bound=" + std::to_string(result.bound);
    checks.push_back(check);
}

} // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["all_pass"] = all_pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return j.dump(2);
}

VerifyReport run_verification(std::uint64_t master_seed, const std::string& filter) {
    std::vector<VerifyCheck> all;
    check_sir_equivalence(master_seed, all);
    check_seed_cut_identity(all);
    check_small_beta_envelope(all);
    check_corollary_gap(all);
    check_large_component_claim(all);
    check_degree_floor(all);
    check_expand_tail(master_seed, all);
    VerifyReport report;
    for (auto& c : all) {
        if (filter.empty() || c.name.find(filter) != std::string::npos)
            report.checks.push_back(std::move(c));
    }
    return report;
}

} // namespace switchover
