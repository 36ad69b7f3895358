#include "switchover/fixtures.hpp"

#include <stdexcept>

namespace switchover {

Graph triangle_pendant_graph() {
    return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

Graph clique_core_pendants_graph(int r, int n) {
    if (n - r > r) throw std::invalid_argument("clique_core_pendants: need n - r <= r");
    if (r < 2 || n <= r) throw std::invalid_argument("clique_core_pendants: need 2 <= r < n");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < n - r; ++i) edges.emplace_back(i, r + i);
    return Graph(n, std::move(edges));
}

Graph double_star_graph(int leaves_per_hub) {
    std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < leaves_per_hub; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < leaves_per_hub; ++i) edges.emplace_back(1, next++);
    return Graph(next, std::move(edges));
}

std::vector<std::pair<std::string, Graph>> fixture_graphs() {
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("P3", path_graph(3));
    out.emplace_back("P4", path_graph(4));
    out.emplace_back("P5", path_graph(5));
    out.emplace_back("C4", cycle_graph(4));
    out.emplace_back("C5", cycle_graph(5));
    out.emplace_back("triangle", complete_graph(3));
    out.emplace_back("triangle-pendant", triangle_pendant_graph());
    out.emplace_back("K4", complete_graph(4));
    out.emplace_back("K5", complete_graph(5));
    out.emplace_back("star4", star_graph(4));
    out.emplace_back("double-star", double_star_graph(2));
    out.emplace_back("clique-core-5-8", clique_core_pendants_graph(5, 8));
    return out;
}

} // namespace switchover
