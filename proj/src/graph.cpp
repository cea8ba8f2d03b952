#include "ramsey/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

Graph::Graph(int p) : p_(p) {
    if (p < 0 || p > kMaxVertices)
        throw std::invalid_argument("Graph: vertex count " + std::to_string(p) +
                                    " outside 0.." + std::to_string(kMaxVertices));
    adj_.resize(p);
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= p_ || v >= p_)
        throw std::invalid_argument("Graph::add_edge: bad endpoints");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= p_ || v >= p_)
        throw std::invalid_argument("Graph::remove_edge: bad endpoints");
    if (!adj_[u].test(v)) return;
    adj_[u].reset(v);
    adj_[v].reset(u);
    --edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < p_; ++u)
        for (int v = adj_[u].next_after(u); v >= 0; v = adj_[u].next_after(v))
            out.emplace_back(u, v);
    return out;
}

Graph complete(int p) {
    Graph g(p);
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int m) {
    if (m < 1) throw std::invalid_argument("path: need m >= 1, got " + std::to_string(m));
    Graph g(m);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int p = g.vertex_count();
    std::vector<std::vector<int>> comps;
    VertexSet seen;
    for (int s = 0; s < p; ++s) {
        if (seen.test(s)) continue;
        // BFS; increasing start vertex makes the order deterministic.
        std::vector<int> comp{s};
        seen.set(s);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const VertexSet& nb = g.neighbors(comp[i]);
            for (int v = nb.first(); v >= 0; v = nb.next_after(v)) {
                if (!seen.test(v)) {
                    seen.set(v);
                    comp.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

Graph read_graph(std::istream& in) {
    std::string line;
    int p = -1;
    Graph g;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw FormatError("graph file, line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        if (p < 0) {
            if (!(ls >> p) || p < 0 || p > kMaxVertices) fail("expected vertex count");
            std::string rest;
            if (ls >> rest) fail("trailing tokens after vertex count");
            g = Graph(p);
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) fail("expected edge 'u v'");
        std::string rest;
        if (ls >> rest) fail("trailing tokens after edge");
        if (!(0 <= u && u < v && v < p)) fail("edge must satisfy 0 <= u < v < p");
        if (g.has_edge(u, v)) fail("duplicate edge");
        g.add_edge(u, v);
    }
    if (p < 0) throw FormatError("graph file: missing vertex count");
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write graph file: " + path);
    write_graph(out, g);
}

} // namespace ramsey
