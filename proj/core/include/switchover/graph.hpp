#pragma once

#include <string>
#include <utility>
#include <vector>

namespace switchover {

using VertexId = int;

// Sorted list of distinct vertex ids; set semantics throughout.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> ids);
bool set_contains(const VertexSet& s, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// Immutable undirected simple graph. Neighbor lists are strictly sorted,
// edges are stored once as (u,v) with u < v.
class Graph {
public:
    Graph(int n, std::vector<std::pair<VertexId, VertexId>> edge_list);

    int n() const { return n_; }
    int m_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    const std::vector<VertexId>& adj(VertexId v) const { return adjacency_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(VertexId u, VertexId v) const;

    VertexSet all_vertices() const;

    bool connected() const;

private:
    int n_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

// Parse the edge-list text format: optional "# n=<int>" header, '#' comment
// lines, one "u v" pair per line. Throws std::runtime_error naming the line
// on malformed input, self-loops, or out-of-range ids. Duplicate edges are
// collapsed.
Graph load_graph(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string to_edge_list(const Graph& g);

struct DegreeStats {
    double mean = 0.0;
    double second_moment = 0.0;
    int set_size = 0;
};

// Average degree and second moment over K (degrees taken in the full graph).
DegreeStats degree_stats(const Graph& g, const VertexSet& K);

// Number of ordered pairs (u,v), u in K, v in L, u~v. Internal edges of
// K cap L count twice in pair_count(K,K); for disjoint K,L this is the plain
// edge count between them.
long long pair_count(const Graph& g, const VertexSet& K, const VertexSet& L);

// {v not in K : some u in K with u~v}
VertexSet neighborhood(const Graph& g, const VertexSet& K);

enum class StarProperty { holds, fails, unknown };

struct MinDegreeProfile {
    int d = 0;
    VertexSet Y;                    // vertices of minimum degree
    StarProperty star_property = StarProperty::unknown;
    bool disconnected_warning = false;
};

// Minimum degree d and its vertex set Y. The star property (connected,
// not d-regular, and every edge-cut of size <= d is the star of a degree-d
// vertex) is decided by exhaustive bipartition enumeration when
// n <= exact_limit, otherwise reported unknown. Disconnected input fails
// the property and sets a warning flag.
MinDegreeProfile min_degree_profile(const Graph& g, int exact_limit = 20);

// --- small constructors shared by fixtures and canonical scenarios ---

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center is vertex 0

} // namespace switchover
