#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "ramsey/coloring.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/targets.hpp"

namespace ramsey {

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    std::chrono::milliseconds max_wall{0}; // 0 = unlimited
};

struct SearchOptions {
    SearchBudget budget;
    int threads = 1;
    // Canonical-key isomorph rejection runs at completed-vertex frontiers
    // q <= this limit (and never beyond the canonical_key cap of 12).
    int iso_frontier_limit = 8;
    // Stop inserting new keys once a frontier's seen-set reaches this size;
    // lookups continue, so pruning only ever skips confirmed duplicates.
    std::size_t iso_cache_max = 4'000'000;
};

struct SearchStats {
    std::uint64_t nodes = 0;             // edge assignments explored
    std::uint64_t target_prunes = 0;     // branches cut by a completed target
    std::uint64_t isomorph_prunes = 0;   // branches cut as frontier duplicates
    std::uint64_t ruled_out = 0;         // colorings eliminated, saturating
    double wall_seconds = 0.0;

    void accumulate(const SearchStats& o);
};

// Decision for a single vertex count p.
struct ForcedResult {
    enum class Kind { Forced, Avoidable, BudgetExhausted };
    Kind kind;
    std::optional<Coloring> witness; // Avoidable only
    SearchStats stats;
};

// Does every r-coloring of K_p contain some class-i copy of target i?
// Deterministic for a fixed budget at threads = 1; multi-threaded runs agree
// on the kind.
ForcedResult is_forced(int p, const TargetSpec& spec, const SearchOptions& opt = {});

struct SearchOutcome {
    enum class Kind { Exact, LowerBoundOnly, Exhausted };
    Kind kind;
    int value = 0;                   // Exact: R; LowerBoundOnly: b with R >= b
    std::optional<Coloring> witness; // avoiding coloring on value-1 vertices
    int best_lower = 0;              // Exhausted only
    int best_upper_tried = 0;        // Exhausted only: p where the budget died
    SearchStats stats;
};

// Runs is_forced for increasing p from a computed lower start: the blow-up
// bound where the targets split as (connected..., cliques...) with both
// factors resolvable, otherwise the largest target size. If the start is
// already Forced it walks downward until an avoiding witness pins the value.
SearchOutcome search_ramsey(const TargetSpec& spec, int p_max, const SearchOptions& opt = {});

// The lower start described above (exposed for tests).
int suggested_start(const TargetSpec& spec, const KappaTable& table);

// Deterministic text report; excludes wall-clock time so identical runs
// produce identical bytes.
std::string format_outcome(const SearchOutcome& outcome, const TargetSpec& spec);

} // namespace ramsey
