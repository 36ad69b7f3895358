#include "switchover/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace switchover {

VertexSet make_vertex_set(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph::Graph(int n, std::vector<std::pair<VertexId, VertexId>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: vertex id out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adjacency_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

VertexSet Graph::all_vertices() const {
    VertexSet v(n_);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adjacency_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

Graph load_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    VertexId max_id = -1;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            auto pos = line.find("n=");
            if (pos != std::string::npos) {
                try {
                    declared_n = std::stoi(line.substr(pos + 2));
                } catch (const std::exception&) {
                    throw std::runtime_error("load_graph: bad header at line " + std::to_string(line_no));
                }
            }
            continue;
        }
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) {
            throw std::runtime_error("load_graph: malformed line " + std::to_string(line_no));
        }
        std::string rest;
        if (ls >> rest) {
            throw std::runtime_error("load_graph: trailing tokens at line " + std::to_string(line_no));
        }
        if (u < 0 || v < 0) {
            throw std::runtime_error("load_graph: negative id at line " + std::to_string(line_no));
        }
        if (u == v) {
            throw std::runtime_error("load_graph: self-loop at line " + std::to_string(line_no));
        }
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
            throw std::runtime_error("load_graph: vertex id >= n at line " + std::to_string(line_no));
        }
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        max_id = std::max<VertexId>(max_id, static_cast<VertexId>(std::max(u, v)));
    }
    int n = declared_n >= 0 ? declared_n : max_id + 1;
    return Graph(n, std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n=" << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

DegreeStats degree_stats(const Graph& g, const VertexSet& K) {
    if (K.empty()) throw std::domain_error("degree_stats: empty vertex set");
    double sum = 0.0, sum2 = 0.0;
    for (VertexId v : K) {
        if (v < 0 || v >= g.n()) throw std::domain_error("degree_stats: vertex out of range");
        double d = g.degree(v);
        sum += d;
        sum2 += d * d;
    }
    DegreeStats s;
    s.set_size = static_cast<int>(K.size());
    s.mean = sum / s.set_size;
    s.second_moment = sum2 / s.set_size;
    return s;
}

long long pair_count(const Graph& g, const VertexSet& K, const VertexSet& L) {
    long long count = 0;
    for (VertexId u : K) {
        if (u < 0 || u >= g.n()) throw std::domain_error("pair_count: vertex out of range");
        for (VertexId v : g.adj(u)) {
            if (set_contains(L, v)) ++count;
        }
    }
    return count;
}

VertexSet neighborhood(const Graph& g, const VertexSet& K) {
    std::vector<VertexId> out;
    for (VertexId u : K) {
        for (VertexId v : g.adj(u)) {
            if (!set_contains(K, v)) out.push_back(v);
        }
    }
    return make_vertex_set(std::move(out));
}

MinDegreeProfile min_degree_profile(const Graph& g, int exact_limit) {
    MinDegreeProfile p;
    int n = g.n();
    if (n == 0) return p;
    p.d = g.degree(0);
    for (VertexId v = 1; v < n; ++v) p.d = std::min(p.d, g.degree(v));
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) == p.d) p.Y.push_back(v);
    }
    if (!g.connected()) {
        p.star_property = StarProperty::fails;
        p.disconnected_warning = true;
        return p;
    }
    bool regular = static_cast<int>(p.Y.size()) == n;
    if (regular) {
        p.star_property = StarProperty::fails;
        return p;
    }
    if (n > exact_limit) {
        p.star_property = StarProperty::unknown;
        return p;
    }
    // Enumerate bipartitions (X, V\X) with 0 in X; a cut of size <= d must
    // have X or its complement equal to a single degree-d vertex.
    p.star_property = StarProperty::holds;
    const std::uint64_t total = 1ULL << (n - 1);
    for (std::uint64_t mask = 0; mask + 1 < total; ++mask) {
        std::uint64_t x = (mask << 1) | 1ULL;  // vertex 0 always on the X side
        int cut = 0;
        for (auto [u, v] : g.edges()) {
            bool ux = (x >> u) & 1ULL;
            bool vx = (x >> v) & 1ULL;
            if (ux != vx) ++cut;
        }
        if (cut > p.d) continue;
        int size_x = __builtin_popcountll(x);
        bool ok = false;
        if (size_x == 1 || size_x == n - 1) {
            std::uint64_t single = (size_x == 1) ? x : (~x & ((1ULL << n) - 1));
            VertexId v = static_cast<VertexId>(__builtin_ctzll(single));
            ok = g.degree(v) == p.d && cut == p.d;
        }
        if (!ok) {
            p.star_property = StarProperty::fails;
            return p;
        }
    }
    return p;
}

Graph path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph star_graph(int leaves) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

} // namespace switchover
