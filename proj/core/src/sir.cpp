#include "switchover/sir.hpp"

#include <stdexcept>

namespace switchover {

SirState sir_init(const Graph& g, const VertexSet& seeds) {
    if (seeds.empty()) throw std::invalid_argument("sir_init: empty seed set");
    SirState state;
    state.status.assign(g.n(), SirStatus::susceptible);
    for (VertexId v : seeds) state.status[v] = SirStatus::infected;
    state.cumulative_infected = static_cast<int>(seeds.size());
    return state;
}

void sir_step(const Graph& g, SirState& state, double beta, Rng& rng) {
    std::vector<VertexId> newly_infected;
    // One Bernoulli(beta) draw per (infected u, susceptible v) adjacent pair;
    // infections for the whole step are drawn first, then applied.
    for (VertexId v = 0; v < g.n(); ++v) {
        if (state.status[v] != SirStatus::susceptible) continue;
        bool infected = false;
        for (VertexId u : g.adj(v)) {
            if (state.status[u] == SirStatus::infected && rng.bernoulli(beta)) infected = true;
        }
        if (infected) newly_infected.push_back(v);
    }
    for (VertexId v = 0; v < g.n(); ++v) {
        if (state.status[v] == SirStatus::infected) state.status[v] = SirStatus::resistant;
    }
    for (VertexId v : newly_infected) state.status[v] = SirStatus::infected;
    state.cumulative_infected += static_cast<int>(newly_infected.size());
    ++state.step;
}

int sir_total(const Graph& g, double beta, const VertexSet& seeds, Rng& rng) {
    SirState state = sir_init(g, seeds);
    bool any_infected = true;
    while (any_infected) {
        sir_step(g, state, beta, rng);
        any_infected = false;
        for (SirStatus s : state.status) {
            if (s == SirStatus::infected) {
                any_infected = true;
                break;
            }
        }
    }
    return state.cumulative_infected;
}

} // namespace switchover
