#pragma once

#include "switchover/graph.hpp"
#include "switchover/rng.hpp"

namespace switchover {

enum class SirStatus : unsigned char { susceptible, infected, resistant };

// Discrete-time SIR with a one-step infectious period. Used as an
// independent oracle for the percolation equivalence.
struct SirState {
    std::vector<SirStatus> status;
    int step = 0;
    int cumulative_infected = 0;
};

SirState sir_init(const Graph& g, const VertexSet& seeds);

// Simultaneous update: every susceptible vertex with an infected neighbor is
// infected independently per infected neighbor; all currently infected
// vertices recover.
void sir_step(const Graph& g, SirState& state, double beta, Rng& rng);

// Run to extinction, return the total number of ever-infected vertices.
int sir_total(const Graph& g, double beta, const VertexSet& seeds, Rng& rng);

} // namespace switchover
