#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey/bitset.hpp"

namespace ramsey {

// Undirected simple graph on vertices 0..p-1 with bitset adjacency.
// Treated as immutable once built; all queries are const and safe to run
// concurrently on a shared instance.
class Graph {
public:
    Graph() = default;
    explicit Graph(int p);

    int vertex_count() const { return p_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // Edge list sorted lexicographically with u < v.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int p_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

// Standard generators.
Graph complete(int p);          // K_p, p >= 0
Graph cycle(int n);             // C_n, n >= 3 (throws std::invalid_argument)
Graph path(int m);              // P_m on m vertices, m >= 1

// Connected components as vertex sets, ordered by smallest contained vertex;
// members sorted ascending.
std::vector<std::vector<int>> components(const Graph& g);

// p <= 1 counts as connected.
bool is_connected(const Graph& g);

// Edge-list file format: first non-comment line is the vertex count, then one
// "u v" line per edge with 0 <= u < v < p. '#'-prefixed lines are comments.
// Duplicate edges are rejected. write_graph emits the canonical form that
// read_graph round-trips bit-exactly.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

} // namespace ramsey
