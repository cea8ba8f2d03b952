#include "ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ramsey/detect.hpp"

namespace ramsey {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

// r^e, saturating.
std::uint64_t sat_pow(std::uint64_t r, int e) {
    std::uint64_t v = 1;
    while (e-- > 0) {
        if (v > std::numeric_limits<std::uint64_t>::max() / r)
            return std::numeric_limits<std::uint64_t>::max();
        v *= r;
    }
    return v;
}

using Clock = std::chrono::steady_clock;

// Shared cross-worker accounting. Workers batch node counts to keep the
// atomics off the hot path.
struct SharedControl {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::uint64_t max_nodes;
    Clock::time_point deadline{};
    bool has_deadline = false;

    explicit SharedControl(const SearchBudget& b) : max_nodes(b.max_nodes) {
        if (b.max_wall.count() > 0) {
            deadline = Clock::now() + b.max_wall;
            has_deadline = true;
        }
    }
};

// Depth-first edge-assignment search over one subtree. Edges follow the
// flat-array order (grouped by larger endpoint), so the coloring restricted
// to the first q vertices is a prefix of the array and vertex frontiers
// complete at triangular edge counts.
class ForcedSearch {
public:
    // rc codes for subtree exploration
    static constexpr int kNoAvoider = 0;
    static constexpr int kAvoider = 1;
    static constexpr int kAborted = 2;

    ForcedSearch(int p, const TargetSpec& spec, const SearchOptions& opt, SharedControl& ctl)
        : p_(p), r_(spec.size()), spec_(spec), opt_(opt), ctl_(ctl), partial_(p, std::max(1, spec.size())) {
        edges_.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
        for (int v = 1; v < p; ++v)
            for (int u = 0; u < v; ++u) edges_.emplace_back(u, v);
        class_graphs_.assign(r_, Graph(p));
        // frontier_q_[m] = q when assigning edge m completes all edges among
        // vertices 0..q-1, else 0.
        frontier_q_.assign(edges_.size(), 0);
        for (int q = 3; q <= p; ++q) {
            std::size_t cnt = static_cast<std::size_t>(q) * (q - 1) / 2;
            if (cnt >= 1 && cnt <= edges_.size()) frontier_q_[cnt - 1] = q;
        }
        same_target_.assign(r_, std::vector<bool>(r_, false));
        for (int a = 0; a < r_; ++a)
            for (int b = 0; b < r_; ++b) same_target_[a][b] = same_target(spec_[a], spec_[b]);
        int limit = std::min(opt_.iso_frontier_limit, 12);
        // Frontier q = p is a complete coloring; dedup there is wasted work.
        iso_limit_ = std::max(0, std::min(limit, p - 1));
        seen_.resize(iso_limit_ + 1);
    }

    // Any class of the empty graph already containing its target (only
    // possible for single-vertex patterns) forces every coloring.
    bool forced_at_root() const {
        Graph empty(p_);
        for (int i = 0; i < r_; ++i)
            if (contains_target(empty, spec_[i])) return true;
        return false;
    }

    // Explore the subtree of `partial`, which already has `start` edges
    // assigned and is clean (no class contains its target).
    int run(const Coloring& partial, std::size_t start) {
        partial_ = partial;
        for (int c = 0; c < r_; ++c) class_graphs_[c] = Graph(p_);
        for (std::size_t m = 0; m < start; ++m) {
            auto [u, v] = edges_[m];
            class_graphs_[partial_.class_of(u, v)].add_edge(u, v);
        }
        return dfs(start);
    }

    // Enumerate the clean, symmetry-filtered, frontier-deduped partial
    // colorings with `upto` edges assigned. Used to carve the tree into
    // parallel tasks; the enumeration applies the same pruning as dfs so
    // tasks cover exactly the surviving subtrees.
    std::vector<Coloring> enumerate_roots(std::size_t upto) {
        roots_.clear();
        roots_limit_ = upto;
        partial_ = Coloring(p_, std::max(1, r_));
        for (int c = 0; c < r_; ++c) class_graphs_[c] = Graph(p_);
        collecting_ = true;
        dfs(0);
        collecting_ = false;
        return std::move(roots_);
    }

    const std::optional<Coloring>& witness() const { return witness_; }
    const SearchStats& stats() const { return stats_; }

private:
    void flush_nodes() {
        base_nodes_ = ctl_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
        local_nodes_ = 0;
    }

    // base_nodes_ + local_nodes_ never exceeds the true global count, so the
    // node budget cannot fire early; workers may overshoot by their
    // unflushed batches, which budget semantics allow.
    bool budget_spent() {
        if (ctl_.stop.load(std::memory_order_relaxed)) return true;
        ++local_nodes_;
        if (base_nodes_ + local_nodes_ >= ctl_.max_nodes) {
            flush_nodes();
            if (ctl_.nodes.load(std::memory_order_relaxed) >= ctl_.max_nodes) {
                ctl_.stop.store(true, std::memory_order_relaxed);
                budget_hit_ = true;
                return true;
            }
        } else if (local_nodes_ >= 1024) {
            flush_nodes();
            if (ctl_.has_deadline && Clock::now() >= ctl_.deadline) {
                ctl_.stop.store(true, std::memory_order_relaxed);
                budget_hit_ = true;
                return true;
            }
        }
        return false;
    }

    int dfs(std::size_t m) {
        if (collecting_ && m == roots_limit_) {
            roots_.push_back(partial_);
            return kNoAvoider;
        }
        if (m == edges_.size()) {
            witness_ = partial_;
            return kAvoider;
        }
        const auto [u, v] = edges_[m];
        for (int c = 0; c < r_; ++c) {
            // Class-swap symmetry: among classes with identical targets,
            // only the lowest unused index may open a new class.
            bool skip = false;
            for (int c2 = 0; c2 < c && !skip; ++c2)
                skip = same_target_[c][c2] && class_graphs_[c2].edge_count() == 0;
            if (skip) continue;
            if (budget_spent()) return kAborted;
            ++stats_.nodes;
            Graph& gc = class_graphs_[c];
            gc.add_edge(u, v);
            partial_.set_class(u, v, c);
            int rc = kNoAvoider;
            if (completes_target(gc, spec_[c], u, v)) {
                ++stats_.target_prunes;
                stats_.ruled_out =
                    sat_add(stats_.ruled_out, sat_pow(r_, static_cast<int>(edges_.size() - m - 1)));
            } else if (duplicate_frontier(m)) {
                ++stats_.isomorph_prunes;
            } else {
                rc = dfs(m + 1);
            }
            gc.remove_edge(u, v);
            if (rc != kNoAvoider) return rc;
        }
        return kNoAvoider;
    }

    bool duplicate_frontier(std::size_t m) {
        const int q = frontier_q_[m];
        if (q < 3 || q > iso_limit_) return false;
        std::string key = canonical_key(partial_.prefix(q));
        auto& set = seen_[q];
        if (set.size() >= opt_.iso_cache_max) return set.count(key) > 0;
        return !set.insert(std::move(key)).second;
    }

    int p_, r_;
    const TargetSpec& spec_;
    const SearchOptions& opt_;
    SharedControl& ctl_;
    Coloring partial_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Graph> class_graphs_;
    std::vector<int> frontier_q_;
    std::vector<std::vector<bool>> same_target_;
    std::vector<std::unordered_set<std::string>> seen_;
    int iso_limit_ = 0;
    std::uint64_t local_nodes_ = 0;
    std::uint64_t base_nodes_ = 0;

    bool collecting_ = false;
    std::size_t roots_limit_ = 0;
    std::vector<Coloring> roots_;

    std::optional<Coloring> witness_;
    SearchStats stats_;
    bool budget_hit_ = false;

public:
    bool budget_hit() const { return budget_hit_; }
};

} // namespace

void SearchStats::accumulate(const SearchStats& o) {
    nodes += o.nodes;
    target_prunes += o.target_prunes;
    isomorph_prunes += o.isomorph_prunes;
    ruled_out = sat_add(ruled_out, o.ruled_out);
    wall_seconds += o.wall_seconds;
}

ForcedResult is_forced(int p, const TargetSpec& spec, const SearchOptions& opt) {
    if (p < 1) throw std::invalid_argument("is_forced: need p >= 1");
    if (opt.budget.max_nodes == 0) throw std::invalid_argument("is_forced: budget must be positive");
    const auto t0 = Clock::now();
    auto finish = [&](ForcedResult res) {
        res.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return res;
    };

    SharedControl ctl(opt.budget);
    ForcedSearch probe(p, spec, opt, ctl);
    if (probe.forced_at_root()) return finish({ForcedResult::Kind::Forced, std::nullopt, {}});

    const std::size_t total_edges = static_cast<std::size_t>(p) * (p - 1) / 2;
    const int threads = std::max(1, opt.threads);

    if (threads == 1 || total_edges < 6) {
        ForcedSearch s(p, spec, opt, ctl);
        int rc = s.run(Coloring(p, std::max(1, spec.size())), 0);
        ForcedResult res;
        res.stats = s.stats();
        if (rc == ForcedSearch::kAvoider) {
            res.kind = ForcedResult::Kind::Avoidable;
            res.witness = s.witness();
        } else if (rc == ForcedSearch::kAborted) {
            res.kind = ForcedResult::Kind::BudgetExhausted;
        } else {
            res.kind = ForcedResult::Kind::Forced;
        }
        return finish(res);
    }

    // Parallel: enumerate clean prefixes at a small frontier, then let
    // workers exhaust the surviving subtrees.
    std::size_t split_edges = 3; // all edges among the first 3 vertices
    for (int q = 4; q <= p; ++q) {
        std::size_t cnt = static_cast<std::size_t>(q) * (q - 1) / 2;
        if (cnt >= total_edges) break;
        if (sat_pow(spec.size(), split_edges) >= static_cast<std::uint64_t>(threads) * 8) break;
        split_edges = cnt;
    }

    ForcedSearch enumerator(p, spec, opt, ctl);
    std::vector<Coloring> roots = enumerator.enumerate_roots(split_edges);
    SearchStats agg = enumerator.stats();
    if (enumerator.budget_hit() || ctl.stop.load()) {
        ForcedResult res{ForcedResult::Kind::BudgetExhausted, std::nullopt, agg};
        return finish(res);
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> found{false};
    std::atomic<bool> aborted{false};
    std::vector<std::optional<Coloring>> witnesses(threads);
    std::vector<SearchStats> tstats(threads);
    auto worker = [&](int tid) {
        ForcedSearch s(p, spec, opt, ctl);
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= roots.size()) break;
            if (ctl.stop.load(std::memory_order_relaxed)) break;
            int rc = s.run(roots[i], split_edges);
            if (rc == ForcedSearch::kAvoider) {
                witnesses[tid] = s.witness();
                found.store(true);
                ctl.stop.store(true);
                break;
            }
            if (rc == ForcedSearch::kAborted) {
                if (s.budget_hit()) aborted.store(true);
                break;
            }
        }
        if (s.budget_hit()) aborted.store(true);
        tstats[tid] = s.stats();
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
    for (auto& th : pool) th.join();
    for (const auto& st : tstats) agg.accumulate(st);
    agg.wall_seconds = 0;

    ForcedResult res;
    res.stats = agg;
    if (found.load()) {
        res.kind = ForcedResult::Kind::Avoidable;
        for (auto& w : witnesses)
            if (w) {
                res.witness = std::move(w);
                break;
            }
    } else if (aborted.load() || ctl.nodes.load() >= ctl.max_nodes) {
        res.kind = ForcedResult::Kind::BudgetExhausted;
    } else {
        res.kind = ForcedResult::Kind::Forced;
    }
    return finish(res);
}

int suggested_start(const TargetSpec& spec, const KappaTable& table) {
    int start = 1;
    for (const Target& t : spec.targets) start = std::max(start, t.size);
    // Blow-up bound over suffix splits (connected prefix, all-clique
    // suffix). gamma resolves for a single prefix target (R(G) = |V(G)|)
    // or an all-clique prefix in the table.
    const int m = spec.size();
    for (int split = 1; split < m; ++split) {
        bool suffix_cliques = true;
        std::vector<int> suffix_sizes;
        for (int i = split; i < m; ++i) {
            if (spec[i].kind != Target::Kind::Clique) {
                suffix_cliques = false;
                break;
            }
            suffix_sizes.push_back(spec[i].size);
        }
        if (!suffix_cliques) continue;
        std::optional<int> gamma;
        if (split == 1) {
            gamma = spec[0].size;
        } else {
            std::vector<int> prefix_sizes;
            bool prefix_cliques = true;
            for (int i = 0; i < split; ++i) {
                if (spec[i].kind != Target::Kind::Clique) {
                    prefix_cliques = false;
                    break;
                }
                prefix_sizes.push_back(spec[i].size);
            }
            if (prefix_cliques) gamma = known_kappa(prefix_sizes, table);
        }
        auto kappa = known_kappa(suffix_sizes, table);
        if (gamma && kappa && *gamma >= 2 && *kappa >= 2)
            start = std::max(start, ramsey_lower_bound({*gamma, *kappa}));
    }
    return start;
}

SearchOutcome search_ramsey(const TargetSpec& spec, int p_max, const SearchOptions& opt) {
    if (p_max < 1) throw std::invalid_argument("search_ramsey: need p_max >= 1");
    SearchOutcome out;
    SearchOptions remaining = opt;
    auto charge = [&](const SearchStats& st) {
        out.stats.accumulate(st);
        if (remaining.budget.max_nodes != std::numeric_limits<std::uint64_t>::max())
            remaining.budget.max_nodes =
                remaining.budget.max_nodes > st.nodes ? remaining.budget.max_nodes - st.nodes : 0;
        if (remaining.budget.max_wall.count() > 0) {
            auto spent = std::chrono::milliseconds(static_cast<long long>(st.wall_seconds * 1e3));
            remaining.budget.max_wall =
                remaining.budget.max_wall > spent ? remaining.budget.max_wall - spent
                                                  : std::chrono::milliseconds(1);
        }
    };
    auto exhausted = [&](int best_lower, int tried) {
        out.kind = SearchOutcome::Kind::Exhausted;
        out.best_lower = best_lower;
        out.best_upper_tried = tried;
        return out;
    };
    auto drained = [&] { return remaining.budget.max_nodes == 0; };

    // Coloring everything with the largest target's class avoids all targets
    // below its size, so this lower bound needs no table.
    int mono_lb = 1;
    for (const Target& t : spec.targets) mono_lb = std::max(mono_lb, t.size);

    const int start = std::min(std::max(1, suggested_start(spec, KappaTable::builtin())), p_max);
    int best_avoidable = 0;

    ForcedResult first = is_forced(start, spec, remaining);
    charge(first.stats);
    if (first.kind == ForcedResult::Kind::BudgetExhausted) return exhausted(start, start);

    if (first.kind == ForcedResult::Kind::Forced) {
        // The computed start can only be Forced when it already equals R (a
        // proven bound) or a premise table overshot; walk down to pin the
        // witness either way.
        int forced_p = start;
        while (forced_p > 1) {
            if (drained()) return exhausted(mono_lb, forced_p - 1);
            ForcedResult below = is_forced(forced_p - 1, spec, remaining);
            charge(below.stats);
            if (below.kind == ForcedResult::Kind::BudgetExhausted)
                return exhausted(mono_lb, forced_p - 1);
            if (below.kind == ForcedResult::Kind::Avoidable) {
                out.kind = SearchOutcome::Kind::Exact;
                out.value = forced_p;
                out.witness = below.witness;
                return out;
            }
            --forced_p;
        }
        out.kind = SearchOutcome::Kind::Exact;
        out.value = 1;
        out.witness = Coloring(0, spec.size());
        return out;
    }

    best_avoidable = start;
    out.witness = first.witness;
    for (int p = start + 1; p <= p_max; ++p) {
        if (drained()) return exhausted(best_avoidable + 1, p);
        ForcedResult res = is_forced(p, spec, remaining);
        charge(res.stats);
        if (res.kind == ForcedResult::Kind::BudgetExhausted)
            return exhausted(best_avoidable + 1, p);
        if (res.kind == ForcedResult::Kind::Forced) {
            out.kind = SearchOutcome::Kind::Exact;
            out.value = p;
            return out;
        }
        best_avoidable = p;
        out.witness = res.witness;
    }
    out.kind = SearchOutcome::Kind::LowerBoundOnly;
    out.value = best_avoidable + 1;
    return out;
}

std::string format_outcome(const SearchOutcome& outcome, const TargetSpec& spec) {
    std::ostringstream os;
    switch (outcome.kind) {
    case SearchOutcome::Kind::Exact:
        os << "Exact R = " << outcome.value << '\n';
        break;
    case SearchOutcome::Kind::LowerBoundOnly:
        os << "Lower bound only: R >= " << outcome.value << '\n';
        break;
    case SearchOutcome::Kind::Exhausted:
        os << "Budget exhausted: R >= " << outcome.best_lower << ", last p tried = "
           << outcome.best_upper_tried << '\n';
        break;
    }
    os << "targets: " << spec.name() << '\n';
    if (outcome.witness && outcome.witness->vertex_count() > 0) {
        os << "witness (p = " << outcome.witness->vertex_count() << "):\n";
        write_coloring(os, *outcome.witness);
    }
    os << "nodes expanded: " << outcome.stats.nodes << '\n';
    os << "branches cut (target): " << outcome.stats.target_prunes << '\n';
    os << "branches cut (isomorph): " << outcome.stats.isomorph_prunes << '\n';
    os << "colorings ruled out: " << outcome.stats.ruled_out << '\n';
    return os.str();
}

} // namespace ramsey
