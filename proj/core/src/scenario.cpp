#include "switchover/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace switchover {

Scenario::Scenario(Graph graph, VertexSet central)
    : graph_(std::make_shared<const Graph>(std::move(graph))), central_(std::move(central)) {
    int n = graph_->n();
    if (central_.empty()) throw std::invalid_argument("Scenario: empty central region");
    if (static_cast<int>(central_.size()) >= n)
        throw std::invalid_argument("Scenario: central region must be a proper subset");
    for (VertexId v : central_) {
        if (v < 0 || v >= n) throw std::invalid_argument("Scenario: central vertex out of range");
    }
}

Graph Scenario::central_subgraph() const {
    std::vector<int> index(graph_->n(), -1);
    for (int i = 0; i < r(); ++i) index[central_[i]] = i;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : graph_->edges()) {
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    }
    return Graph(r(), std::move(edges));
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    std::filesystem::path graph_path = j.at("graph_path").get<std::string>();
    if (graph_path.is_relative()) {
        graph_path = std::filesystem::path(path).parent_path() / graph_path;
    }
    Graph g = load_graph_file(graph_path.string());
    VertexSet central = make_vertex_set(j.at("central").get<std::vector<VertexId>>());
    return Scenario(std::move(g), std::move(central));
}

void save_scenario_file(const Scenario& s, const std::string& scenario_path,
                        const std::string& graph_path) {
    {
        std::ofstream gout(graph_path);
        if (!gout) throw std::runtime_error("cannot write graph file: " + graph_path);
        gout << to_edge_list(s.graph());
    }
    nlohmann::json j;
    j["graph_path"] = std::filesystem::path(graph_path).filename().string();
    j["central"] = s.central();
    std::ofstream out(scenario_path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + scenario_path);
    out << j.dump(2) << "\n";
}

} // namespace switchover
