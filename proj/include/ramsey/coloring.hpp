#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Total assignment of every unordered vertex pair of K_p to one of r color
// classes. Stored as a flat upper-triangular array in "column" order: the
// entry for {u,v} with u < v sits at index v*(v-1)/2 + u, i.e. edges grouped
// by their larger endpoint. This is also the coloring file's line layout and
// the search module's edge enumeration order.
class Coloring {
public:
    Coloring() = default;
    Coloring(int p, int r, int fill_class = 0);

    int vertex_count() const { return p_; }
    int class_count() const { return r_; }
    std::size_t pair_count() const { return cells_.size(); }

    static std::size_t pair_index(int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
    }

    int class_of(int u, int v) const { return cells_[pair_index(u, v)]; }
    void set_class(int u, int v, int c);

    // Graph induced by one color class (throws std::invalid_argument when
    // i >= r).
    Graph class_graph(int i) const;

    // Per-class edge counts, length r.
    std::vector<int> class_sizes() const;

    // Sub-coloring on vertices 0..q-1; a prefix of the flat array.
    Coloring prefix(int q) const;

    const std::vector<std::uint8_t>& cells() const { return cells_; }
    std::uint8_t* data() { return cells_.data(); }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    int p_ = 0;
    int r_ = 1;
    std::vector<std::uint8_t> cells_;
};

// Display palette: 0 -> green, 1 -> red, 2 -> blue, then c3, c4, ...
struct ClassLabel {
    int index;
    std::string name;
};
ClassLabel class_label(int index);

// Recolors every pair whose class lies in merge_set to a single class, which
// takes the smallest index in merge_set; the remaining classes compact,
// preserving relative order. remap[old] gives each old class's new index.
struct MergeResult {
    Coloring coloring;
    std::vector<int> remap;
};
MergeResult merge_classes(const Coloring& c, const std::vector<int>& merge_set);

// Canonical byte string: equal for two colorings iff one is a vertex
// relabeling of the other (class indices are not permuted). Exact
// lexicographic minimum of the flat array over all p! relabelings, found by
// branch-and-bound; p above `limit` throws std::invalid_argument.
std::string canonical_key(const Coloring& c, int limit = 12);

// Coloring file format ("RCOL 1 <p> <r>" header; one line per vertex v >= 1
// holding the classes of {0,v}..{v-1,v}). '#' comments only before the
// header. write_coloring emits the canonical bytes read_coloring round-trips
// exactly.
Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& c);
Coloring load_coloring(const std::string& path);
void save_coloring(const std::string& path, const Coloring& c);

// Undirected DOT text, one edge per pair with color=<palette name>, edges in
// lexicographic (u,v) order. Deterministic bytes.
void write_dot(std::ostream& out, const Coloring& c);

} // namespace ramsey
