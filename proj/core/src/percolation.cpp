#include "switchover/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace switchover {

namespace {

struct Dsu {
    std::vector<int> parent;
    std::vector<int> size;

    explicit Dsu(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    void reset() {
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) parent[i] = i;
        std::fill(size.begin(), size.end(), 1);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

// Roots in increasing vertex order -> component ids; components[0] is the
// one with the largest central count, ties broken by smallest id.
void finalize_components(const Graph& g, const VertexSet& central, Dsu& dsu,
                         PercolationOutcome& out) {
    const int n = g.n();
    out.component_id.assign(n, -1);
    out.components.clear();
    std::vector<int> root_to_comp(n, -1);
    for (int v = 0; v < n; ++v) {
        int root = dsu.find(v);
        if (root_to_comp[root] < 0) {
            root_to_comp[root] = static_cast<int>(out.components.size());
            out.components.push_back({dsu.size[root], 0});
        }
        out.component_id[v] = root_to_comp[root];
    }
    for (VertexId v : central) ++out.components[out.component_id[v]].central_count;
    int best = 0;
    for (int j = 1; j < static_cast<int>(out.components.size()); ++j) {
        if (out.components[j].central_count > out.components[best].central_count) best = j;
    }
    if (best != 0) {
        std::swap(out.components[0], out.components[best]);
        for (int v = 0; v < n; ++v) {
            if (out.component_id[v] == 0)
                out.component_id[v] = best;
            else if (out.component_id[v] == best)
                out.component_id[v] = 0;
        }
    }
}

} // namespace

PercolationOutcome sample_percolation(const Graph& g, double beta, Rng& rng,
                                      const VertexSet& central) {
    if (beta < 0.0 || beta > 1.0) throw std::domain_error("sample_percolation: beta out of [0,1]");
    const int m = g.m_edges();
    PercolationOutcome out;
    out.retained.assign((m + 63) / 64, 0);
    Dsu dsu(g.n());
    const auto& edges = g.edges();
    for (int e = 0; e < m; ++e) {
        if (rng.bernoulli(beta)) {
            out.retained[e >> 6] |= 1ULL << (e & 63);
            dsu.unite(edges[e].first, edges[e].second);
        }
    }
    finalize_components(g, central, dsu, out);
    return out;
}

int infected_size(const PercolationOutcome& outcome, const VertexSet& S) {
    std::vector<char> hit(outcome.components.size(), 0);
    int total = 0;
    for (VertexId v : S) {
        int comp = outcome.component_id[v];
        if (!hit[comp]) {
            hit[comp] = 1;
            total += outcome.components[comp].size;
        }
    }
    return total;
}

namespace {

constexpr int kEnumerationEdgeCap = 24;

// Enumerate all 2^m edge subsets and accumulate per-subset contributions.
// visit(dsu, weight) is called once per subset.
template <typename Visit>
void enumerate_subsets(const Graph& g, double beta, Visit&& visit) {
    const int m = g.m_edges();
    if (m > kEnumerationEdgeCap)
        throw std::runtime_error("enumeration oracle: graph exceeds 24-edge cap");
    std::vector<double> w_on(m + 1), w_off(m + 1);
    w_on[0] = w_off[0] = 1.0;
    for (int i = 1; i <= m; ++i) {
        w_on[i] = w_on[i - 1] * beta;
        w_off[i] = w_off[i - 1] * (1.0 - beta);
    }
    const auto& edges = g.edges();
    Dsu dsu(g.n());
    const std::uint64_t total = 1ULL << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        dsu.reset();
        for (int e = 0; e < m; ++e) {
            if ((mask >> e) & 1ULL) dsu.unite(edges[e].first, edges[e].second);
        }
        int kept = __builtin_popcountll(mask);
        visit(dsu, w_on[kept] * w_off[m - kept]);
    }
}

} // namespace

double exact_expectation(const Graph& g, double beta, const VertexSet& S) {
    double total = 0.0;
    enumerate_subsets(g, beta, [&](Dsu& dsu, double weight) {
        // union of components meeting S
        int infected = 0;
        for (int v = 0; v < g.n(); ++v) {
            int root = dsu.find(v);
            bool seeded = false;
            for (VertexId s : S) {
                if (dsu.find(s) == root) {
                    seeded = true;
                    break;
                }
            }
            if (seeded) ++infected;
        }
        total += weight * infected;
    });
    return total;
}

double exact_expectation_uniform(const Graph& g, double beta, const VertexSet& L, int k) {
    const int m_support = static_cast<int>(L.size());
    if (k < 1 || k > m_support) throw std::domain_error("exact_expectation_uniform: k out of range");
    std::vector<double> miss(m_support + 1);
    for (int h = 0; h <= m_support; ++h) miss[h] = seed_miss_probability(h, m_support, k);
    std::vector<char> in_l(g.n(), 0);
    for (VertexId v : L) in_l[v] = 1;
    double total = 0.0;
    std::vector<int> l_count(g.n());
    enumerate_subsets(g, beta, [&](Dsu& dsu, double weight) {
        std::fill(l_count.begin(), l_count.end(), 0);
        for (int v = 0; v < g.n(); ++v) {
            if (in_l[v]) ++l_count[dsu.find(v)];
        }
        double expect = 0.0;
        for (int v = 0; v < g.n(); ++v) {
            int root = dsu.find(v);
            if (root == v) expect += dsu.size[root] * (1.0 - miss[l_count[root]]);
        }
        total += weight * expect;
    });
    return total;
}

std::map<int, double> exact_distribution(const Graph& g, double beta, const VertexSet& S) {
    std::map<int, double> dist;
    enumerate_subsets(g, beta, [&](Dsu& dsu, double weight) {
        int infected = 0;
        for (int v = 0; v < g.n(); ++v) {
            int root = dsu.find(v);
            for (VertexId s : S) {
                if (dsu.find(s) == root) {
                    ++infected;
                    break;
                }
            }
        }
        dist[infected] += weight;
    });
    return dist;
}

EstimateWithCI make_estimate(long long trials, long long sum, long long sum_sq) {
    EstimateWithCI est;
    est.trials = trials;
    est.mean = static_cast<double>(sum) / trials;
    if (trials > 1) {
        double var = (static_cast<double>(sum_sq) - static_cast<double>(sum) * est.mean) /
                     (trials - 1);
        var = std::max(var, 0.0);
        est.std_error = std::sqrt(var / trials);
    }
    est.ci_lo = est.mean - 1.96 * est.std_error;
    est.ci_hi = est.mean + 1.96 * est.std_error;
    return est;
}

EstimateWithCI estimate_expectation(const Graph& g, double beta, const SeedDistribution& seeds,
                                    long long trials, RngStream rng, int threads) {
    if (trials < 1) throw std::domain_error("estimate_expectation: trials >= 1 required");
    threads = std::max(1, threads);
    std::vector<long long> sums(threads, 0), sums_sq(threads, 0);
    auto worker = [&](int tid) {
        long long sum = 0, sum_sq = 0;
        for (long long t = tid; t < trials; t += threads) {
            Rng r(substream(rng, static_cast<std::uint64_t>(t)));
            PercolationOutcome outcome = sample_percolation(g, beta, r);
            VertexSet s = sample_seed(seeds, r);
            long long x = infected_size(outcome, s);
            sum += x;
            sum_sq += x * x;
        }
        sums[tid] = sum;
        sums_sq[tid] = sum_sq;
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }
    long long sum = 0, sum_sq = 0;
    for (int tid = 0; tid < threads; ++tid) {
        sum += sums[tid];
        sum_sq += sums_sq[tid];
    }
    return make_estimate(trials, sum, sum_sq);
}

double seed_miss_probability(int h, int pool, int k) {
    if (h < 0 || h > pool || k < 1 || k > pool)
        throw std::domain_error("seed_miss_probability: parameter out of domain");
    if (h > pool - k) return 0.0;
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= 1.0 - static_cast<double>(h) / (pool - i);
    return p;
}

KPartition k_partition(const PercolationOutcome& outcome, const Scenario& scenario, double s) {
    const double c = scenario.c();
    if (s <= 0.0 || s >= c) throw std::domain_error("k_partition: need 0 < s < c");
    KPartition part;
    part.component_class.assign(outcome.components.size(), 4);
    for (int j = 0; j < static_cast<int>(outcome.components.size()); ++j) {
        const auto& comp = outcome.components[j];
        int cls;
        if (j == 0) {
            cls = 1;
        } else if (comp.size == 1 && comp.central_count == 0) {
            cls = 2;
        } else if (comp.size <= comp.central_count / (c - s)) {
            cls = 3;
        } else {
            cls = 4;
        }
        part.component_class[j] = cls;
        switch (cls) {
            case 1: part.v1 += comp.size; break;
            case 2: part.v2 += comp.size; break;
            case 3: part.v3 += comp.size; break;
            default: part.v4 += comp.size; break;
        }
        if (j != 0) part.c_minus_v1 += comp.central_count;
    }
    return part;
}

} // namespace switchover
