#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/targets.hpp"

namespace ramsey {

// Explicit monochromatic copy of a target inside a host graph. For cliques,
// vertices are ascending and edges list all pairs; for cycles, vertices are
// in traversal order and edges[i] joins vertices[i] and vertices[(i+1)%n];
// for paths and general patterns, vertices[i] is the image of pattern vertex
// i and edges mirror the pattern's edge list.
struct Witness {
    int class_index = -1; // set by verify_coloring, -1 for bare-graph queries
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
};

std::string format_witness(const Witness& w);

inline constexpr std::uint64_t kDefaultDetectBudget = 100'000'000;

// Branch-and-bound k-clique search, vertices in degree order. Deterministic:
// the first witness under the fixed order.
std::optional<Witness> contains_clique(const Graph& g, int k);

// Exact-length-n cycle. Per-component, skipping components with fewer than n
// vertices; anchored DFS with a reachability prune. Throws
// BudgetExhaustedError after max_expansions node expansions.
std::optional<Witness> contains_cycle_exact(const Graph& g, int n,
                                            std::uint64_t max_expansions = kDefaultDetectBudget);

// Non-induced copy of a connected pattern (injective, adjacency-preserving).
// Throws std::invalid_argument for disconnected patterns.
std::optional<Witness> contains_subgraph(const Graph& g, const Graph& pattern);

// Dispatch by target kind.
std::optional<Witness> contains_target(const Graph& g, const Target& t);

// Re-check a witness against the host and target from scratch; shares no
// state with the detectors.
bool witness_valid(const Graph& g, const Target& t, const Witness& w);

// Presence-only checks for a copy of the target that uses edge {u,v}. The
// search core calls these after each edge assignment, where the class graph
// was target-free before {u,v} was added.
bool completes_clique(const Graph& g, int k, int u, int v);
bool completes_cycle(const Graph& g, int n, int u, int v);
bool completes_pattern(const Graph& g, const Graph& pattern, int u, int v);
bool completes_target(const Graph& g, const Target& t, int u, int v);

// Scans classes in index order; empty result means the coloring avoids every
// target (the paper's "critical" direction). Requires one target per class.
std::optional<Witness> verify_coloring(const Coloring& c, const TargetSpec& spec);

} // namespace ramsey
