#pragma once

#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// One forbidden pattern. Cliques and exact-length cycles get dedicated
// detectors; paths and general patterns go through the subgraph matcher. The
// pattern graph is materialized for every kind so targets can be compared
// and matched uniformly.
struct Target {
    enum class Kind { Clique, Cycle, Path, General };

    Kind kind;
    int size;      // vertex count of the pattern
    Graph pattern;

    static Target clique(int k);   // k >= 2
    static Target cycle(int n);    // n >= 3
    static Target path(int m);     // m >= 2
    static Target general(Graph g); // connected, >= 1 vertex

    // "K3", "C22", "P4"; general patterns print as "F<p>".
    std::string name() const;
};

// Same forbidden pattern as labeled graphs (not up to isomorphism); C3 and
// K3 compare equal because their materialized edge sets coincide.
bool same_target(const Target& a, const Target& b);

// Ordered, non-empty list of targets, one per color class.
struct TargetSpec {
    std::vector<Target> targets;

    explicit TargetSpec(std::vector<Target> t);

    int size() const { return static_cast<int>(targets.size()); }
    const Target& operator[](int i) const { return targets[i]; }

    // Comma-separated names, e.g. "C22,K3,K3".
    std::string name() const;
};

// Grammar: comma-separated tokens K<int> | C<int> | P<int> | F:<path>.
// F:<path> loads an edge-list graph file, which must parse connected.
// Errors carry the offending position in the input string.
TargetSpec parse_target_spec(const std::string& text);

} // namespace ramsey
