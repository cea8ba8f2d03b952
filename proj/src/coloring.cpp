#include "ramsey/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

Coloring::Coloring(int p, int r, int fill_class) : p_(p), r_(r) {
    if (p < 0 || p > kMaxVertices)
        throw std::invalid_argument("Coloring: vertex count " + std::to_string(p) +
                                    " outside 0.." + std::to_string(kMaxVertices));
    if (r < 1 || r > 255)
        throw std::invalid_argument("Coloring: class count " + std::to_string(r) +
                                    " outside 1..255");
    if (fill_class < 0 || fill_class >= r)
        throw std::invalid_argument("Coloring: fill class out of range");
    cells_.assign(static_cast<std::size_t>(p) * (p - 1) / 2,
                  static_cast<std::uint8_t>(fill_class));
}

void Coloring::set_class(int u, int v, int c) {
    if (u == v || u < 0 || v < 0 || u >= p_ || v >= p_)
        throw std::invalid_argument("Coloring::set_class: bad pair");
    if (c < 0 || c >= r_) throw std::invalid_argument("Coloring::set_class: class out of range");
    cells_[pair_index(u, v)] = static_cast<std::uint8_t>(c);
}

Graph Coloring::class_graph(int i) const {
    if (i < 0 || i >= r_)
        throw std::invalid_argument("class_graph: class " + std::to_string(i) +
                                    " out of range (r=" + std::to_string(r_) + ")");
    Graph g(p_);
    std::size_t idx = 0;
    for (int v = 1; v < p_; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if (cells_[idx] == i) g.add_edge(u, v);
    return g;
}

std::vector<int> Coloring::class_sizes() const {
    std::vector<int> sizes(r_, 0);
    for (auto c : cells_) ++sizes[c];
    return sizes;
}

Coloring Coloring::prefix(int q) const {
    if (q < 0 || q > p_) throw std::invalid_argument("Coloring::prefix: q out of range");
    Coloring sub(q, r_);
    std::copy_n(cells_.begin(), sub.cells_.size(), sub.cells_.begin());
    return sub;
}

ClassLabel class_label(int index) {
    switch (index) {
    case 0: return {0, "green"};
    case 1: return {1, "red"};
    case 2: return {2, "blue"};
    default: return {index, "c" + std::to_string(index)};
    }
}

MergeResult merge_classes(const Coloring& c, const std::vector<int>& merge_set) {
    if (merge_set.empty()) throw std::invalid_argument("merge_classes: empty merge set");
    std::set<int> mset(merge_set.begin(), merge_set.end());
    for (int i : mset)
        if (i < 0 || i >= c.class_count())
            throw std::invalid_argument("merge_classes: class " + std::to_string(i) +
                                        " out of range");
    const int r_old = c.class_count();
    const int lead = *mset.begin();
    // Members above the lead disappear; survivors shift down past them.
    std::vector<int> remap(r_old);
    for (int old = 0; old < r_old; ++old) {
        if (mset.count(old)) {
            remap[old] = lead;
        } else {
            int shift = 0;
            for (int m : mset)
                if (m != lead && m < old) ++shift;
            remap[old] = old - shift;
        }
    }
    const int r_new = r_old - static_cast<int>(mset.size()) + 1;
    Coloring merged(c.vertex_count(), r_new);
    const auto& src = c.cells();
    for (std::size_t i = 0; i < src.size(); ++i)
        merged.data()[i] = static_cast<std::uint8_t>(remap[src[i]]);
    return {std::move(merged), std::move(remap)};
}

namespace {

// Ceiling on canonical_key inputs regardless of the caller's limit; the
// minimization is factorial and pointless beyond this.
constexpr int kMaxKeyVertices = 32;

// Branch-and-bound minimization of the flat array over vertex relabelings.
// perm[new_label] = old vertex. The entries contributed by new label v
// depend only on perm[0..v], so we extend the permutation one label at a
// time, comparing each label's segment against the incumbent minimum:
// greater prunes, smaller overwrites the incumbent's tail with a sentinel
// above any class value, equal descends.
struct KeyMinimizer {
    const Coloring& col;
    int p;
    std::vector<std::uint8_t> best;
    std::vector<int> perm;
    std::vector<bool> used;
    std::vector<std::uint8_t> seg;

    explicit KeyMinimizer(const Coloring& c)
        : col(c), p(c.vertex_count()), best(c.cells()), perm(p), used(p, false), seg(p) {}

    void run() {
        if (p <= 1) return;
        descend(0);
    }

    // Swapping a and b fixes the coloring iff they relate identically to
    // every other vertex. Subtrees of such candidates at the same level are
    // interchangeable, which collapses the blowup on symmetric colorings.
    bool swap_is_automorphism(int a, int b) const {
        for (int w = 0; w < p; ++w) {
            if (w == a || w == b) continue;
            if (col.class_of(a, w) != col.class_of(b, w)) return false;
        }
        return true;
    }

    void descend(int level) {
        if (level == p) return; // reached a leaf: best already holds this labeling
        const std::size_t off = Coloring::pair_index(0, level);
        int tried[kMaxKeyVertices];
        int tried_n = 0;
        for (int cand = 0; cand < p; ++cand) {
            if (used[cand]) continue;
            bool dup = false;
            for (int i = 0; i < tried_n && !dup; ++i)
                dup = swap_is_automorphism(tried[i], cand);
            if (dup) continue;
            int cmp = 0;
            for (int u = 0; u < level; ++u) {
                seg[u] = static_cast<std::uint8_t>(col.class_of(perm[u], cand));
                if (cmp == 0 && seg[u] != best[off + u]) {
                    cmp = seg[u] < best[off + u] ? -1 : 1;
                    if (cmp > 0) break;
                }
            }
            if (cmp > 0) continue;
            tried[tried_n++] = cand;
            if (cmp < 0) {
                std::copy_n(seg.begin(), level, best.begin() + off);
                std::fill(best.begin() + off + level, best.end(), std::uint8_t{255});
            }
            used[cand] = true;
            perm[level] = cand;
            descend(level + 1);
            used[cand] = false;
        }
    }
};

} // namespace

std::string canonical_key(const Coloring& c, int limit) {
    if (c.vertex_count() > std::min(limit, kMaxKeyVertices))
        throw std::invalid_argument("canonical_key: p=" + std::to_string(c.vertex_count()) +
                                    " exceeds supported limit " + std::to_string(limit));
    KeyMinimizer m(c);
    m.run();
    std::string key;
    key.reserve(2 + m.best.size());
    key.push_back(static_cast<char>(c.vertex_count()));
    key.push_back(static_cast<char>(c.class_count()));
    key.append(m.best.begin(), m.best.end());
    return key;
}

Coloring read_coloring(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw FormatError("coloring file, line " + std::to_string(lineno) + ": " + msg);
    };
    // Comments are only allowed before the header.
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        break;
    }
    if (in.fail() && line.empty()) throw FormatError("coloring file: missing header");
    std::istringstream hs(line);
    std::string magic;
    int version = 0, p = -1, r = 0;
    if (!(hs >> magic >> version >> p >> r) || magic != "RCOL")
        fail("expected header 'RCOL 1 <p> <r>'");
    std::string rest;
    if (hs >> rest) fail("trailing tokens after header");
    if (version != 1) fail("unsupported version " + std::to_string(version));
    if (p < 0 || p > kMaxVertices) fail("vertex count out of range");
    if (r < 1 || r > 255) fail("class count out of range");

    Coloring c(p, r);
    for (int v = 1; v < p; ++v) {
        if (!std::getline(in, line)) {
            ++lineno;
            fail("unexpected end of file; expected row for vertex " + std::to_string(v));
        }
        ++lineno;
        std::istringstream ls(line);
        for (int u = 0; u < v; ++u) {
            int cls;
            if (!(ls >> cls)) fail("expected " + std::to_string(v) + " class entries");
            if (cls < 0 || cls >= r) fail("class index out of range");
            c.set_class(u, v, cls);
        }
        if (ls >> rest) fail("trailing tokens in row");
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            fail("trailing content after coloring");
    }
    return c;
}

void write_coloring(std::ostream& out, const Coloring& c) {
    out << "RCOL 1 " << c.vertex_count() << ' ' << c.class_count() << '\n';
    for (int v = 1; v < c.vertex_count(); ++v) {
        for (int u = 0; u < v; ++u) {
            if (u) out << ' ';
            out << c.class_of(u, v);
        }
        out << '\n';
    }
}

Coloring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open coloring file: " + path);
    return read_coloring(in);
}

void save_coloring(const std::string& path, const Coloring& c) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write coloring file: " + path);
    write_coloring(out, c);
}

void write_dot(std::ostream& out, const Coloring& c) {
    out << "graph coloring {\n";
    out << "  node [shape=point];\n";
    for (int v = 0; v < c.vertex_count(); ++v) out << "  " << v << ";\n";
    for (int u = 0; u < c.vertex_count(); ++u)
        for (int v = u + 1; v < c.vertex_count(); ++v)
            out << "  " << u << " -- " << v << " [color="
                << class_label(c.class_of(u, v)).name << "];\n";
    out << "}\n";
}

} // namespace ramsey
