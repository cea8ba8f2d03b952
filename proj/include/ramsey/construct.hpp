#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/targets.hpp"

namespace ramsey {

// gamma = R(G_1..G_n) over the connected targets, kappa = R(K_{n_1}..K_{n_r})
// over the clique targets. Degenerate single-vertex values are rejected.
struct RamseyParams {
    int gamma;
    int kappa;
};

// (gamma-1)(kappa-1)+1, the blow-up lower bound.
int ramsey_lower_bound(const RamseyParams& params);

// Product coloring: each vertex of `outer` becomes a block holding a copy of
// `inner`. Vertex (b, j) maps to b*p_inner + j. Between-block edges take the
// outer edge's class (indices 0..r_outer-1 unchanged); within-block edges
// take the inner class shifted by r_outer.
Coloring blow_up(const Coloring& outer, const Coloring& inner);

// 2-class coloring of K_5: class 0 = {i, i+1 mod 5}, class 1 = {i, i+2 mod 5}.
// Both class graphs are 5-cycles, so neither contains a triangle.
Coloring pentagon_coloring();

// An ingredient coloring failed its own avoidance check.
struct IngredientError : std::runtime_error {
    IngredientError(std::string which_in, Witness w, const std::string& target_name);
    std::string which; // "inner" or "outer"
    Witness witness;
};

// Blow-up with both ingredients verified against their targets first, then
// classes re-indexed so the connected (inner) targets come first, matching
// t's order: t = (inner targets..., clique targets...). The returned
// coloring is re-verified against t before returning.
Coloring lower_bound_witness(const Coloring& inner, const Coloring& outer, const TargetSpec& t);

// Curated table of premise values kappa = R(K_{n_1},...,K_{n_r}), keyed by
// the sorted size multiset. Every entry carries a literature citation key.
// File lines: "<sorted sizes comma-separated> <kappa> <citation>"; '#'
// comments allowed; malformed lines are hard errors.
class KappaTable {
public:
    struct Entry {
        int kappa;
        std::string citation;
    };

    static KappaTable builtin();

    void merge(std::istream& in, const std::string& origin = "<stream>");
    void merge_file(const std::string& path);

    std::optional<Entry> lookup(std::vector<int> sizes) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::vector<int>, Entry> entries_;
};

// R(K_k) = k for a single clique; otherwise a table lookup. Absent when not
// tabulated. Sizes must be >= 2.
std::optional<int> known_kappa(const std::vector<int>& clique_sizes, const KappaTable& table);
std::optional<int> known_kappa(const std::vector<int>& clique_sizes);

// Exact-value engine for R(C_n, K_{n_1}, ..., K_{n_r}). Resolves kappa, then
// applies the long-cycle rule (n >= 4*kappa+2) or the small-kappa rule
// (kappa in 3..7, n >= kappa, excluding the n=3 single-triangle case).
struct Prediction {
    enum class Status { Value, UnknownKappa, OutOfRange };
    enum class Rule { Cor3, Cor4 };

    Status status;
    int value = 0; // (n-1)(kappa-1)+1 when status == Value
    Rule rule = Rule::Cor3;
    std::optional<int> kappa;
    std::string note;
};

Prediction predicted_value(int n, const std::vector<int>& clique_sizes, const KappaTable& table);
Prediction predicted_value(int n, const std::vector<int>& clique_sizes);

} // namespace ramsey
