#pragma once

// Deliberately simple enumerators kept independent of the library's
// detectors and search; tests compare the two implementations.

#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/targets.hpp"

namespace ramsey::testing {

// Enumerates all k-subsets and checks every pair.
bool naive_has_clique(const Graph& g, int k);

// Walks all simple closed walks of length exactly n (visited-set only, no
// pruning beyond adjacency).
bool naive_has_cycle(const Graph& g, int n);

// Tries every injective map pattern -> host and checks all pattern edges.
bool naive_has_subgraph(const Graph& g, const Graph& pattern);

bool naive_contains_target(const Graph& g, const Target& t);

// Exhaustive r-ary assignment over the C(p,2) edges with early cutoff when a
// class completes its target; no symmetry or isomorph pruning.
struct NaiveForced {
    bool forced;
    std::optional<Coloring> witness;
};
NaiveForced naive_is_forced(int p, const TargetSpec& spec);

// result.class_of(u, v) = c.class_of(perm[u], perm[v]).
Coloring relabel(const Coloring& c, const std::vector<int>& perm);
Graph relabel(const Graph& g, const std::vector<int>& perm);

} // namespace ramsey::testing
