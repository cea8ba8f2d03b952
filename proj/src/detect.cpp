#include "ramsey/detect.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

std::string format_witness(const Witness& w) {
    std::ostringstream out;
    if (w.class_index >= 0)
        out << "class " << w.class_index << " (" << class_label(w.class_index).name << ")\n";
    out << "vertices:";
    for (int v : w.vertices) out << ' ' << v;
    out << "\nedges:";
    for (auto [u, v] : w.edges) out << " (" << u << ',' << v << ")";
    out << '\n';
    return out.str();
}

namespace {

std::vector<std::pair<int, int>> all_pairs(const std::vector<int>& vs) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            es.emplace_back(std::min(vs[i], vs[j]), std::max(vs[i], vs[j]));
    return es;
}

struct CliqueSearch {
    const Graph& g;
    int k;
    std::vector<int> ord;       // vertices by descending degree, index tiebreak
    std::vector<VertexSet> suffix; // suffix[i] = {ord[j] : j >= i}
    std::vector<int> stack;

    CliqueSearch(const Graph& graph, int target) : g(graph), k(target) {
        const int p = g.vertex_count();
        ord.resize(p);
        std::iota(ord.begin(), ord.end(), 0);
        std::stable_sort(ord.begin(), ord.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        suffix.resize(p + 1);
        for (int i = p - 1; i >= 0; --i) {
            suffix[i] = suffix[i + 1];
            suffix[i].set(ord[i]);
        }
    }

    bool expand(const VertexSet& cands, int start, int depth) {
        if (depth == k) return true;
        int avail = (cands & suffix[start]).count();
        if (depth + avail < k) return false;
        for (int i = start; i < g.vertex_count(); ++i) {
            int v = ord[i];
            if (!cands.test(v)) continue;
            stack.push_back(v);
            if (expand(cands & g.neighbors(v), i + 1, depth + 1)) return true;
            stack.pop_back();
            if (depth + --avail < k) return false;
        }
        return false;
    }
};

} // namespace

std::optional<Witness> contains_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("contains_clique: need k >= 1");
    if (k > g.vertex_count()) return std::nullopt;
    if (k == 1) return Witness{-1, {0}, {}};
    CliqueSearch s(g, k);
    VertexSet all;
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    if (!s.expand(all, 0, 0)) return std::nullopt;
    std::sort(s.stack.begin(), s.stack.end());
    return Witness{-1, s.stack, all_pairs(s.stack)};
}

namespace {

struct CycleSearch {
    const Graph& g;
    int n;
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    std::vector<int> path;

    CycleSearch(const Graph& graph, int len, std::uint64_t max_expansions)
        : g(graph), n(len), budget(max_expansions) {}

    void spend() {
        if (++expansions > budget)
            throw BudgetExhaustedError("contains_cycle_exact: exceeded " +
                                       std::to_string(budget) + " node expansions");
    }

    // Vertices reachable from cur through `allowed` (cur itself excluded
    // unless allowed).
    VertexSet reachable(int cur, const VertexSet& allowed) const {
        VertexSet reach, frontier;
        frontier = g.neighbors(cur) & allowed;
        reach = frontier;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v = frontier.first(); v >= 0; v = frontier.next_after(v))
                next |= g.neighbors(v);
            next &= allowed;
            next -= reach;
            reach |= next;
            frontier = next;
        }
        return reach;
    }

    // Extend the current path (path.back() = cur) to a cycle of length n
    // anchored at path[0].
    bool extend(VertexSet& allowed) {
        spend();
        const int anchor = path[0];
        const int cur = path.back();
        if (static_cast<int>(path.size()) == n)
            return g.has_edge(cur, anchor);
        // Fresh vertices must keep the anchor reachable and be plentiful
        // enough to fill the remaining slots.
        VertexSet open = allowed;
        open.set(anchor);
        VertexSet reach = reachable(cur, open);
        if (!reach.test(anchor)) return false;
        if ((reach & allowed).count() < n - static_cast<int>(path.size())) return false;
        VertexSet nexts = g.neighbors(cur) & allowed;
        for (int v = nexts.first(); v >= 0; v = nexts.next_after(v)) {
            allowed.reset(v);
            path.push_back(v);
            if (extend(allowed)) return true;
            path.pop_back();
            allowed.set(v);
        }
        return false;
    }
};

// Iteratively strip vertices with fewer than two neighbors inside `keep`;
// cycles only live in the 2-core.
VertexSet two_core(const Graph& g, VertexSet keep) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = keep.first(); v >= 0; v = keep.next_after(v)) {
            if ((g.neighbors(v) & keep).count() < 2) {
                keep.reset(v);
                changed = true;
            }
        }
    }
    return keep;
}

} // namespace

std::optional<Witness> contains_cycle_exact(const Graph& g, int n, std::uint64_t max_expansions) {
    if (n < 3) throw std::invalid_argument("contains_cycle_exact: need n >= 3");
    if (n > g.vertex_count()) return std::nullopt;
    CycleSearch s(g, n, max_expansions);
    for (const auto& comp : components(g)) {
        if (static_cast<int>(comp.size()) < n) continue;
        VertexSet comp_set;
        for (int v : comp) comp_set.set(v);
        VertexSet core = two_core(g, comp_set);
        if (core.count() < n) continue;
        // Anchor = least cycle vertex; everything else stays above it.
        for (int anchor = core.first(); anchor >= 0; anchor = core.next_after(anchor)) {
            VertexSet allowed = core;
            for (int v = core.first(); v >= 0 && v <= anchor; v = core.next_after(v))
                allowed.reset(v);
            if (allowed.count() < n - 1) break;
            s.path.assign(1, anchor);
            if (s.extend(allowed)) {
                Witness w{-1, s.path, {}};
                for (int i = 0; i < n; ++i) {
                    int a = s.path[i], b = s.path[(i + 1) % n];
                    w.edges.emplace_back(std::min(a, b), std::max(a, b));
                }
                return w;
            }
        }
    }
    return std::nullopt;
}

namespace {

// Pattern-vertex visit order: breadth-first so every vertex after the root
// has an already-matched neighbor. Root = max degree, least index.
std::vector<int> bfs_order(const Graph& pattern, int root) {
    std::vector<int> order{root};
    VertexSet seen;
    seen.set(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const VertexSet& nb = pattern.neighbors(order[i]);
        for (int v = nb.first(); v >= 0; v = nb.next_after(v))
            if (!seen.test(v)) {
                seen.set(v);
                order.push_back(v);
            }
    }
    return order;
}

struct PatternMatch {
    const Graph& host;
    const Graph& pat;
    std::vector<int> order;
    std::vector<std::vector<int>> earlier; // earlier[i]: pattern nbrs of order[i] already placed
    std::vector<int> map;                  // pattern vertex -> host vertex, -1 unset
    VertexSet used;

    PatternMatch(const Graph& h, const Graph& p, std::vector<int> ord)
        : host(h), pat(p), order(std::move(ord)), map(p.vertex_count(), -1) {
        earlier.resize(order.size());
        std::vector<int> pos(pat.vertex_count(), -1);
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < order.size(); ++i) {
            const VertexSet& nb = pat.neighbors(order[i]);
            for (int b = nb.first(); b >= 0; b = nb.next_after(b))
                if (pos[b] < static_cast<int>(i)) earlier[i].push_back(b);
        }
    }

    bool place(std::size_t i) {
        if (i == order.size()) return true;
        const int a = order[i];
        const int need_deg = pat.degree(a);
        VertexSet cands;
        if (earlier[i].empty()) {
            for (int v = 0; v < host.vertex_count(); ++v) cands.set(v);
        } else {
            cands = host.neighbors(map[earlier[i][0]]);
            for (std::size_t j = 1; j < earlier[i].size(); ++j)
                cands &= host.neighbors(map[earlier[i][j]]);
        }
        cands -= used;
        for (int v = cands.first(); v >= 0; v = cands.next_after(v)) {
            if (host.degree(v) < need_deg) continue;
            map[a] = v;
            used.set(v);
            if (place(i + 1)) return true;
            used.reset(v);
            map[a] = -1;
        }
        return false;
    }
};

Witness witness_from_map(const Graph& pat, const std::vector<int>& map) {
    Witness w;
    w.vertices = map;
    for (auto [a, b] : pat.edges())
        w.edges.emplace_back(std::min(map[a], map[b]), std::max(map[a], map[b]));
    return w;
}

int pattern_root(const Graph& pat) {
    int root = 0;
    for (int v = 1; v < pat.vertex_count(); ++v)
        if (pat.degree(v) > pat.degree(root)) root = v;
    return root;
}

} // namespace

std::optional<Witness> contains_subgraph(const Graph& g, const Graph& pattern) {
    if (pattern.vertex_count() < 1)
        throw std::invalid_argument("contains_subgraph: empty pattern");
    if (!is_connected(pattern))
        throw std::invalid_argument("contains_subgraph: pattern must be connected");
    if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
    PatternMatch m(g, pattern, bfs_order(pattern, pattern_root(pattern)));
    if (!m.place(0)) return std::nullopt;
    return witness_from_map(pattern, m.map);
}

std::optional<Witness> contains_target(const Graph& g, const Target& t) {
    switch (t.kind) {
    case Target::Kind::Clique: return contains_clique(g, t.size);
    case Target::Kind::Cycle: return contains_cycle_exact(g, t.size);
    case Target::Kind::Path:
    case Target::Kind::General: return contains_subgraph(g, t.pattern);
    }
    return std::nullopt;
}

bool witness_valid(const Graph& g, const Target& t, const Witness& w) {
    const int p = g.vertex_count();
    for (int v : w.vertices)
        if (v < 0 || v >= p) return false;
    std::vector<int> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (auto [u, v] : w.edges) {
        if (u == v || !std::binary_search(sorted.begin(), sorted.end(), u) ||
            !std::binary_search(sorted.begin(), sorted.end(), v))
            return false;
        if (!g.has_edge(u, v)) return false;
    }
    auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    switch (t.kind) {
    case Target::Kind::Clique: {
        if (static_cast<int>(w.vertices.size()) != t.size) return false;
        auto want = all_pairs(sorted);
        auto got = w.edges;
        std::sort(got.begin(), got.end());
        return got == want;
    }
    case Target::Kind::Cycle: {
        const int n = t.size;
        if (static_cast<int>(w.vertices.size()) != n ||
            static_cast<int>(w.edges.size()) != n)
            return false;
        for (int i = 0; i < n; ++i)
            if (w.edges[i] != norm(w.vertices[i], w.vertices[(i + 1) % n])) return false;
        return true;
    }
    case Target::Kind::Path:
    case Target::Kind::General: {
        const Graph& pat = t.pattern;
        if (static_cast<int>(w.vertices.size()) != pat.vertex_count()) return false;
        auto pat_edges = pat.edges();
        if (w.edges.size() != pat_edges.size()) return false;
        for (std::size_t i = 0; i < pat_edges.size(); ++i) {
            auto [a, b] = pat_edges[i];
            if (w.edges[i] != norm(w.vertices[a], w.vertices[b])) return false;
        }
        return true;
    }
    }
    return false;
}

bool completes_clique(const Graph& g, int k, int u, int v) {
    if (k <= 2) return k >= 1; // the edge itself (k=2) or any vertex (k=1)
    // Need a (k-2)-clique among common neighbors; enumerate ascending.
    VertexSet common = g.neighbors(u) & g.neighbors(v);
    struct Rec {
        const Graph& g;
        bool find(VertexSet cands, int need) {
            if (need == 0) return true;
            if (cands.count() < need) return false;
            for (int w = cands.first(); w >= 0; w = cands.next_after(w)) {
                VertexSet next = cands & g.neighbors(w);
                // restrict to vertices above w so each subset is tried once
                for (int x = next.first(); x >= 0 && x <= w; x = next.next_after(x))
                    next.reset(x);
                if (find(next, need - 1)) return true;
                cands.reset(w);
                if (cands.count() < need) return false;
            }
            return false;
        }
    } rec{g};
    return rec.find(common, k - 2);
}

namespace {

// Path from cur to goal visiting exactly `remaining` more edges, fresh
// vertices only.
bool path_to(const Graph& g, int cur, int goal, int remaining, VertexSet& unused) {
    if (remaining == 0) return cur == goal;
    // Enough fresh vertices reachable from cur, and the goal among them?
    VertexSet open = unused;
    open.set(goal);
    VertexSet frontier = g.neighbors(cur) & open;
    VertexSet reach = frontier;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v = frontier.first(); v >= 0; v = frontier.next_after(v))
            next |= g.neighbors(v);
        next &= open;
        next -= reach;
        reach |= next;
        frontier = next;
    }
    if (!reach.test(goal)) return false;
    if ((reach & unused).count() < remaining - 1) return false;
    VertexSet nexts = g.neighbors(cur) & (remaining == 1 ? open : unused);
    for (int v = nexts.first(); v >= 0; v = nexts.next_after(v)) {
        if (v == goal) {
            if (remaining == 1) return true;
            continue;
        }
        unused.reset(v);
        if (path_to(g, v, goal, remaining - 1, unused)) {
            unused.set(v);
            return true;
        }
        unused.set(v);
    }
    return false;
}

} // namespace

bool completes_cycle(const Graph& g, int n, int u, int v) {
    // A length-n cycle through {u,v} is a u-v path on n vertices plus the
    // edge itself.
    VertexSet unused;
    for (int w = 0; w < g.vertex_count(); ++w) unused.set(w);
    unused.reset(u);
    unused.reset(v);
    return path_to(g, u, v, n - 1, unused);
}

bool completes_pattern(const Graph& g, const Graph& pattern, int u, int v) {
    if (pattern.vertex_count() > g.vertex_count()) return false;
    if (pattern.vertex_count() == 1) return true;
    for (auto [a, b] : pattern.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            const int hu = flip ? v : u, hv = flip ? u : v;
            if (g.degree(hu) < pattern.degree(a) || g.degree(hv) < pattern.degree(b)) continue;
            // Seed the match with a->hu, b->hv, then fill in BFS order from
            // the seed pair.
            std::vector<int> order{a, b};
            VertexSet seen;
            seen.set(a);
            seen.set(b);
            for (std::size_t i = 0; i < order.size(); ++i) {
                const VertexSet& nb = pattern.neighbors(order[i]);
                for (int x = nb.first(); x >= 0; x = nb.next_after(x))
                    if (!seen.test(x)) {
                        seen.set(x);
                        order.push_back(x);
                    }
            }
            PatternMatch m(g, pattern, order);
            m.map[a] = hu;
            m.map[b] = hv;
            m.used.set(hu);
            m.used.set(hv);
            if (m.place(2)) return true;
        }
    }
    return false;
}

bool completes_target(const Graph& g, const Target& t, int u, int v) {
    switch (t.kind) {
    case Target::Kind::Clique: return completes_clique(g, t.size, u, v);
    case Target::Kind::Cycle: return completes_cycle(g, t.size, u, v);
    case Target::Kind::Path:
    case Target::Kind::General: return completes_pattern(g, t.pattern, u, v);
    }
    return false;
}

std::optional<Witness> verify_coloring(const Coloring& c, const TargetSpec& spec) {
    if (spec.size() != c.class_count())
        throw std::invalid_argument("verify_coloring: " + std::to_string(spec.size()) +
                                    " targets for " + std::to_string(c.class_count()) +
                                    " classes");
    for (int i = 0; i < spec.size(); ++i) {
        Graph gi = c.class_graph(i);
        if (auto w = contains_target(gi, spec[i])) {
            w->class_index = i;
            return w;
        }
    }
    return std::nullopt;
}

} // namespace ramsey
