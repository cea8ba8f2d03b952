#pragma once

// Random (inner, outer, targets) triples for the blow-up property suites.

#include <random>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/targets.hpp"

namespace ramsey::testing {

struct CorpusTriple {
    Coloring inner;
    Coloring outer;
    TargetSpec spec; // inner targets first, then outer clique targets
};

// Triples whose ingredients each verify as avoiding: p_inner <= 6 with
// connected targets from {P3, P4, C3, C4, C5, K3}; p_outer <= 5 with clique
// targets from {K3, K4}. Deterministic for a fixed seed.
std::vector<CorpusTriple> theorem1_corpus(std::size_t count, unsigned seed);

// Triples whose outer ingredient fails its clique targets; used to exercise
// the transversal property of outer-class clique witnesses in blow-ups.
std::vector<CorpusTriple> negative_outer_controls(std::size_t count, unsigned seed);

Coloring random_coloring(int p, int r, std::mt19937& rng);
Graph random_graph(int p, double edge_prob, std::mt19937& rng);

} // namespace ramsey::testing
