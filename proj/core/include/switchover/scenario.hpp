#pragma once

#include <memory>
#include <string>

#include "switchover/graph.hpp"

namespace switchover {

// A graph with a designated central region; the unit every experiment
// consumes. Immutable and shareable across threads.
class Scenario {
public:
    Scenario(Graph graph, VertexSet central);

    const Graph& graph() const { return *graph_; }
    const VertexSet& central() const { return central_; }
    int n() const { return graph_->n(); }
    int r() const { return static_cast<int>(central_.size()); }
    double c() const { return static_cast<double>(r()) / n(); }

    // Induced subgraph on the central region, vertices relabeled 0..r-1 in
    // central-set order.
    Graph central_subgraph() const;

private:
    std::shared_ptr<const Graph> graph_;
    VertexSet central_;
};

// Scenario JSON file: {"graph_path": string, "central": [int,...]};
// graph_path is resolved relative to the scenario file's directory.
Scenario load_scenario_file(const std::string& path);
void save_scenario_file(const Scenario& s, const std::string& scenario_path,
                        const std::string& graph_path);

} // namespace switchover
