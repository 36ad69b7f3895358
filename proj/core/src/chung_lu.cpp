#include "switchover/chung_lu.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "switchover/bounds.hpp"

namespace switchover {

double expected_degree(long long i, long long n, double tau) {
    if (i < 1 || i > n) throw std::domain_error("expected_degree: rank out of range");
    if (tau <= 2.0 || tau >= 3.0) throw std::domain_error("expected_degree: need 2 < tau < 3");
    return std::pow(static_cast<double>(n) / i, 1.0 / (tau - 1.0));
}

double ChungLuParams::weight(long long i) const { return expected_degree(i, n, tau); }

double ChungLuParams::weight_sum() const {
    double d = 0.0;
    for (long long i = 1; i <= n; ++i) d += weight(i);
    return d;
}

double ChungLuParams::weight_sum_approx() const {
    double nn = static_cast<double>(n);
    return (tau - 1.0) / (tau - 2.0) * (nn - std::pow(nn, 1.0 / (tau - 1.0)));
}

ChungLuParams chung_lu_params(long long n, double tau) {
    if (n < 2) throw std::domain_error("chung_lu_params: need n >= 2");
    if (tau <= 2.0 || tau >= 3.0) throw std::domain_error("chung_lu_params: need 2 < tau < 3");
    return ChungLuParams{n, tau};
}

namespace {

struct ClTables {
    std::vector<double> d;       // d[i], 1-based
    std::vector<double> prefix;  // prefix[i] = d_1 + ... + d_i
    double D = 0.0;

    explicit ClTables(const ChungLuParams& p) {
        d.assign(p.n + 1, 0.0);
        prefix.assign(p.n + 1, 0.0);
        for (long long i = 1; i <= p.n; ++i) {
            d[i] = p.weight(i);
            prefix[i] = prefix[i - 1] + d[i];
        }
        D = prefix[p.n];
    }

    // largest rank j with d_i d_j / D >= 1, i.e. d_j >= D/d_i
    long long clamp_rank(long long n, double tau, double di) const {
        double threshold = D / di;
        if (d[1] < threshold) return 0;
        // d_j = (n/j)^{1/(tau-1)} >= threshold  <=>  j <= n * threshold^{-(tau-1)}
        long long j = static_cast<long long>(n * std::pow(threshold, -(tau - 1.0)));
        j = std::clamp<long long>(j, 0, n);
        while (j < n && d[j + 1] >= threshold) ++j;
        while (j > 0 && d[j] < threshold) --j;
        return j;
    }

    double degree(const ChungLuParams& p, long long i) const {
        long long jc = clamp_rank(p.n, p.tau, d[i]);
        double deg = static_cast<double>(jc) + d[i] / D * (D - prefix[jc]);
        // remove the i-i self term
        if (i <= jc)
            deg -= 1.0;
        else
            deg -= d[i] * d[i] / D;
        return deg;
    }
};

} // namespace

double analytic_degree(const ChungLuParams& params, long long i) {
    ClTables tables(params);
    return tables.degree(params, i);
}

double analytic_periphery_degree(const ChungLuParams& params, double c) {
    if (c <= 0.0 || c >= 1.0) throw std::domain_error("analytic_periphery_degree: need 0 < c < 1");
    ClTables tables(params);
    long long r = static_cast<long long>(c * params.n);
    if (r < 1 || r >= params.n)
        throw std::domain_error("analytic_periphery_degree: central region empty or full");
    double sum = 0.0;
    for (long long i = r + 1; i <= params.n; ++i) sum += tables.degree(params, i);
    return sum / static_cast<double>(params.n - r);
}

Graph sample_chung_lu_naive(const ChungLuParams& params, RngStream rng) {
    ClTables tables(params);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (long long i = 1; i < params.n; ++i) {
        Rng row(substream(rng, static_cast<std::uint64_t>(i)));
        double di = tables.d[i];
        for (long long j = i + 1; j <= params.n; ++j) {
            double p = di * tables.d[j] / tables.D;
            if (p >= 1.0 || row.uniform() < p) {
                edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1));
            }
        }
    }
    return Graph(static_cast<int>(params.n), std::move(edges));
}

Graph sample_chung_lu_skipping(const ChungLuParams& params, RngStream rng) {
    ClTables tables(params);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (long long i = 1; i < params.n; ++i) {
        Rng row(substream(rng, static_cast<std::uint64_t>(i)));
        double di = tables.d[i];
        long long j = i + 1;
        // p_ij is non-increasing in j: skip ahead geometrically under the
        // bound at the current position, then thin to the exact probability
        while (j <= params.n) {
            double p_bound = std::min(di * tables.d[j] / tables.D, 1.0);
            if (p_bound >= 1.0) {
                edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1));
                ++j;
                continue;
            }
            double u = row.uniform();
            long long skip = static_cast<long long>(std::floor(std::log1p(-u) / std::log1p(-p_bound)));
            j += skip;
            if (j > params.n) break;
            double p = di * tables.d[j] / tables.D;
            if (row.uniform() < p / p_bound) {
                edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1));
            }
            ++j;
        }
    }
    return Graph(static_cast<int>(params.n), std::move(edges));
}

Graph sample_chung_lu(const ChungLuParams& params, RngStream rng) {
    return params.n <= kNaiveSamplerLimit ? sample_chung_lu_naive(params, rng)
                                          : sample_chung_lu_skipping(params, rng);
}

Scenario cl_scenario(const ChungLuParams& params, Graph graph, double c) {
    if (c <= 0.0 || c >= 1.0) throw std::domain_error("cl_scenario: need 0 < c < 1");
    long long r = static_cast<long long>(c * params.n);
    if (r < 1) throw std::domain_error("cl_scenario: empty central region");
    VertexSet central(static_cast<std::size_t>(r));
    for (long long i = 0; i < r; ++i) central[i] = static_cast<VertexId>(i);
    return Scenario(std::move(graph), std::move(central));
}

Scenario cl_scenario(const ChungLuParams& params, double c, RngStream rng) {
    return cl_scenario(params, sample_chung_lu(params, rng), c);
}

std::string chung_lu_manifest(const ChungLuParams& params, const Graph& g, RngStream rng) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = params.n;
    j["tau"] = params.tau;
    j["seed"] = rng.master_seed;
    j["stream"] = rng.stream_id;
    j["D"] = params.weight_sum();
    j["mean_degree"] = 2.0 * g.m_edges() / static_cast<double>(g.n());
    return j.dump(2);
}

double xs_target(const ChungLuParams& params, double c) {
    double D = params.weight_sum();
    return params.n / (4.0 * D) * std::pow(c, -(3.0 - params.tau) / (params.tau - 1.0));
}

XsProbeReport xs_probe(const Graph& g, const VertexSet& central, double a_target,
                       long long samples, RngStream rng) {
    if (samples < 1) throw std::domain_error("xs_probe: samples >= 1 required");
    const int rc = static_cast<int>(central.size());
    if (rc < 2) throw std::domain_error("xs_probe: central region too small");
    // induced subgraph on C, relabeled 0..r-1
    std::vector<int> index(g.n(), -1);
    for (int i = 0; i < rc; ++i) index[central[i]] = i;
    std::vector<std::pair<VertexId, VertexId>> inner;
    for (auto [u, v] : g.edges()) {
        if (index[u] >= 0 && index[v] >= 0) inner.emplace_back(index[u], index[v]);
    }
    Graph gc(rc, std::move(inner));

    XsProbeReport report;
    report.a_target = a_target;
    const int max_size = rc / 2;
    bool found = false;
    auto consider = [&](const VertexSet& s, long long cut) {
        double ratio = static_cast<double>(cut) / s.size();
        if (!found || ratio < report.min_ratio) {
            found = true;
            report.min_ratio = ratio;
            report.arg_min = s;
        }
        ++report.sets_probed;
    };
    if (rc <= 20) {
        report.exact = true;
        const std::uint32_t total = 1U << rc;
        for (std::uint32_t mask = 1; mask < total; ++mask) {
            int size = __builtin_popcount(mask);
            if (size > max_size) continue;
            long long cut = 0;
            for (auto [u, v] : gc.edges()) {
                if ((((mask >> u) ^ (mask >> v)) & 1U) != 0) ++cut;
            }
            VertexSet s;
            for (int v = 0; v < rc; ++v) {
                if ((mask >> v) & 1U) s.push_back(v);
            }
            consider(s, cut);
        }
    } else {
        Rng r(rng);
        std::vector<char> in_s(rc);
        std::vector<VertexId> pool(rc);
        const double log_max = std::log(static_cast<double>(max_size));
        for (long long it = 0; it < samples; ++it) {
            int size = static_cast<int>(std::exp(r.uniform() * log_max));
            size = std::clamp(size, 1, max_size);
            for (int v = 0; v < rc; ++v) pool[v] = v;
            for (int j = 0; j < size; ++j) {
                int pick = j + static_cast<int>(r.below(static_cast<std::uint64_t>(rc - j)));
                std::swap(pool[j], pool[pick]);
            }
            VertexSet s = make_vertex_set({pool.begin(), pool.begin() + size});
            std::fill(in_s.begin(), in_s.end(), 0);
            for (VertexId v : s) in_s[v] = 1;
            long long cut = 0;
            for (auto [u, v] : gc.edges()) {
                if (in_s[u] != in_s[v]) ++cut;
            }
            consider(s, cut);
        }
    }
    report.meets_target = report.min_ratio >= a_target;
    return report;
}

CorollaryCLReport validate_corollary_params(long long n, double tau, double beta, double s,
                                            double c, double epsilon, double theta,
                                            double b_override) {
    if (!(0.0 < s && s < c && c < 1.0))
        throw std::domain_error("validate_corollary_params: need 0 < s < c < 1");
    if (tau <= 2.0 || tau >= 3.0)
        throw std::domain_error("validate_corollary_params: need 2 < tau < 3");
    if (beta <= 0.0 || beta >= 1.0)
        throw std::domain_error("validate_corollary_params: need 0 < beta < 1");
    if (theta <= 0.0 || theta > 1.0)
        throw std::domain_error("validate_corollary_params: need 0 < theta <= 1");
    ChungLuParams params = chung_lu_params(n, tau);
    CorollaryCLReport rep;
    rep.b = b_override >= 0.0 ? b_override : analytic_periphery_degree(params, c);
    rep.a = xs_target(params, c);
    double log_n = std::log(static_cast<double>(n));
    rep.range_lo = std::sqrt(log_n / n);
    rep.range_hi = std::pow(beta / log_n, (tau - 1.0) / (3.0 - tau));
    rep.range_ok = rep.range_lo <= theta * s && s <= theta * rep.range_hi;
    double gamma_b = std::pow(1.0 - beta, rep.b);
    rep.q = s * (c - s) * (1.0 - c) * gamma_b / (2.0 * c);
    double gamma_a = std::exp(1.0 + rep.a * std::log1p(-beta));  // e (1-beta)^a
    rep.q_check_ok = rep.q > (1.0 + epsilon) * gamma_a;
    long long r = static_cast<long long>(c * n);
    long long k = static_cast<long long>(s * n);
    if (rep.q > 0.0 && rep.q < 0.5) {
        rep.rho_value = rho(beta, rep.a, rep.q);
        double rho_r = std::exp(static_cast<double>(r) * std::log(rep.rho_value));
        double tail = (1.0 + c / (c - s)) * rho_r + std::exp(-2.0 * c * k / 3.0);
        rep.condition_check_ok = 0.5 * s * (1.0 - c) * gamma_b > tail;
    }
    return rep;
}

} // namespace switchover
