#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "ramsey/coloring.hpp"
#include "ramsey/errors.hpp"
#include "support/corpus.hpp"
#include "support/naive.hpp"

using namespace ramsey;
using namespace ramsey::testing;

TEST_CASE("pair_index follows the file layout") {
    CHECK(Coloring::pair_index(0, 1) == 0);
    CHECK(Coloring::pair_index(0, 2) == 1);
    CHECK(Coloring::pair_index(1, 2) == 2);
    CHECK(Coloring::pair_index(0, 3) == 3);
    CHECK(Coloring::pair_index(2, 3) == 5);
    CHECK(Coloring::pair_index(3, 2) == 5); // unordered
}

TEST_CASE("class_graph of a 1-class coloring is complete") {
    for (int p : {0, 1, 2, 5, 9}) {
        Coloring c(p, 1);
        CHECK(c.class_graph(0) == complete(p));
    }
    CHECK_THROWS_AS(Coloring(4, 2).class_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(Coloring(4, 2).class_graph(-1), std::invalid_argument);
}

TEST_CASE("class graphs partition the edges of K_p") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const int p = static_cast<int>(rng() % 10);
        const int r = 1 + static_cast<int>(rng() % 4);
        Coloring c = random_coloring(p, r, rng);
        int total = 0;
        for (int i = 0; i < r; ++i) total += c.class_graph(i).edge_count();
        CHECK(total == p * (p - 1) / 2);
        auto sizes = c.class_sizes();
        CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == p * (p - 1) / 2);
    }
}

TEST_CASE("merge_classes: identity, full merge, remap compaction") {
    std::mt19937 rng(5);
    Coloring c = random_coloring(6, 3, rng);

    auto single = merge_classes(c, {0});
    CHECK(single.coloring.cells() == c.cells());
    CHECK(single.remap == std::vector<int>{0, 1, 2});

    Coloring k4(4, 3);
    k4.set_class(0, 1, 1);
    k4.set_class(2, 3, 2);
    auto all = merge_classes(k4, {0, 1, 2});
    CHECK(all.coloring.class_count() == 1);
    CHECK(all.coloring.class_graph(0) == complete(4));

    Coloring five(4, 5);
    auto m = merge_classes(five, {1, 3});
    CHECK(m.coloring.class_count() == 4);
    CHECK(m.remap == std::vector<int>{0, 1, 2, 1, 3});

    CHECK_THROWS_AS(merge_classes(c, {}), std::invalid_argument);
    CHECK_THROWS_AS(merge_classes(c, {3}), std::invalid_argument);
}

TEST_CASE("merge_classes reassigns exactly the merged pairs") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int p = 2 + static_cast<int>(rng() % 7);
        const int r = 2 + static_cast<int>(rng() % 4);
        Coloring c = random_coloring(p, r, rng);
        std::vector<int> mset;
        for (int i = 0; i < r; ++i)
            if (rng() % 2) mset.push_back(i);
        if (mset.empty()) mset.push_back(static_cast<int>(rng() % r));
        auto [merged, remap] = merge_classes(c, mset);
        const int lead = *std::min_element(mset.begin(), mset.end());
        for (int v = 1; v < p; ++v)
            for (int u = 0; u < v; ++u) {
                const int old_class = c.class_of(u, v);
                const bool in_set = std::find(mset.begin(), mset.end(), old_class) != mset.end();
                CHECK(merged.class_of(u, v) == (in_set ? remap[lead] : remap[old_class]));
            }
        CHECK(merged.pair_count() == c.pair_count());
    }
}

namespace {

std::string key_of(const Coloring& c) { return canonical_key(c); }

} // namespace

TEST_CASE("canonical_key: invariant under every vertex permutation (exhaustive p=5,6)") {
    std::mt19937 rng(17);
    for (int p : {5, 6}) {
        for (int trial = 0; trial < 4; ++trial) {
            Coloring c = random_coloring(p, 1 + trial % 3, rng);
            const std::string key = key_of(c);
            std::vector<int> perm(p);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                CHECK(key_of(relabel(c, perm)) == key);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("canonical_key equals the true permutation minimum (exhaustive p<=5)") {
    std::mt19937 rng(83);
    for (int p : {2, 3, 4, 5}) {
        for (int trial = 0; trial < 6; ++trial) {
            Coloring c = random_coloring(p, 1 + trial % 3, rng);
            std::vector<int> perm(p);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<std::uint8_t> best;
            do {
                Coloring rel = relabel(c, perm);
                std::vector<std::uint8_t> ser(rel.cells().begin(), rel.cells().end());
                if (best.empty() || ser < best) best = ser;
            } while (std::next_permutation(perm.begin(), perm.end()));
            const std::string key = canonical_key(c);
            REQUIRE(key.size() == 2 + best.size());
            CHECK(std::equal(best.begin(), best.end(), key.begin() + 2,
                             [](std::uint8_t a, char b) {
                                 return a == static_cast<std::uint8_t>(b);
                             }));
        }
    }
}

TEST_CASE("canonical_key separates genuinely different colorings") {
    Coloring one_red(3, 2);
    one_red.set_class(0, 1, 1);
    Coloring one_red_elsewhere(3, 2);
    one_red_elsewhere.set_class(1, 2, 1);
    CHECK(key_of(one_red) == key_of(one_red_elsewhere));

    Coloring two_red(3, 2);
    two_red.set_class(0, 1, 1);
    two_red.set_class(1, 2, 1);
    CHECK(key_of(one_red) != key_of(two_red));

    // class identity matters: swapping class roles is a different coloring
    Coloring swapped(3, 2, 1);
    swapped.set_class(0, 1, 0);
    CHECK(key_of(one_red) != key_of(swapped));
}

TEST_CASE("canonical_key respects the size limit") {
    CHECK_THROWS_AS(canonical_key(Coloring(13, 2)), std::invalid_argument);
    CHECK_NOTHROW(canonical_key(Coloring(12, 2)));
    CHECK_NOTHROW(canonical_key(Coloring(0, 1)));
    CHECK_NOTHROW(canonical_key(Coloring(1, 1)));
}

TEST_CASE("coloring file round-trip is bit-exact") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const int p = static_cast<int>(rng() % 12);
        const int r = 1 + static_cast<int>(rng() % 5);
        Coloring c = random_coloring(p, r, rng);
        std::ostringstream first;
        write_coloring(first, c);
        std::istringstream in(first.str());
        Coloring back = read_coloring(in);
        CHECK(back == c);
        std::ostringstream second;
        write_coloring(second, back);
        CHECK(second.str() == first.str());
    }
}

TEST_CASE("coloring file parsing: header comments ok, malformed input rejected") {
    {
        std::istringstream in("# witness\n# another comment\nRCOL 1 3 2\n1\n0 0\n");
        Coloring c = read_coloring(in);
        CHECK(c.class_of(0, 1) == 1);
        CHECK(c.class_of(1, 2) == 0);
    }
    auto rejects = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_coloring(in), FormatError);
    };
    rejects("");
    rejects("RCOL 2 3 2\n0\n0 0\n");      // unknown version
    rejects("COL 1 3 2\n0\n0 0\n");       // bad magic
    rejects("RCOL 1 3 2\n0\n");           // missing row
    rejects("RCOL 1 3 2\n0\n0 0 0\n");    // extra entry in row
    rejects("RCOL 1 3 2\n0\n0 2\n");      // class out of range
    rejects("RCOL 1 3 2\n0\n0 0\nxx\n");  // trailing garbage
    rejects("RCOL 1 3 0\n");              // zero classes
    rejects("RCOL 1 3 2 9\n0\n0 0\n");    // trailing header token
}

TEST_CASE("palette names") {
    CHECK(class_label(0).name == "green");
    CHECK(class_label(1).name == "red");
    CHECK(class_label(2).name == "blue");
    CHECK(class_label(3).name == "c3");
    CHECK(class_label(7).name == "c7");
}

TEST_CASE("DOT export: exact bytes for a single edge, palette counts for the pentagon") {
    Coloring edge(2, 1);
    std::ostringstream os;
    write_dot(os, edge);
    CHECK(os.str() == "graph coloring {\n"
                      "  node [shape=point];\n"
                      "  0;\n"
                      "  1;\n"
                      "  0 -- 1 [color=green];\n"
                      "}\n");

    Coloring pent(5, 2);
    for (int i = 0; i < 5; ++i) {
        pent.set_class(i, (i + 1) % 5, 0);
        pent.set_class(i, (i + 2) % 5, 1);
    }
    std::ostringstream ps;
    write_dot(ps, pent);
    const std::string dot = ps.str();
    auto count = [&](const std::string& needle) {
        std::size_t n = 0, pos = 0;
        while ((pos = dot.find(needle, pos)) != std::string::npos) {
            ++n;
            pos += needle.size();
        }
        return n;
    };
    CHECK(count("[color=green]") == 5);
    CHECK(count("[color=red]") == 5);
}
