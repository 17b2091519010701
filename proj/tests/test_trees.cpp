#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "permuperc/trees.hpp"
#include "permuperc/union_find.hpp"

using namespace permuperc;

namespace {

std::vector<std::pair<int, int>> canonical_edges(const LabelledTree& t) {
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : t.edges) e.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(e.begin(), e.end());
    return e;
}

bool is_tree(const LabelledTree& t) {
    if (static_cast<int>(t.edges.size()) != t.m - 1) return false;
    UnionFind uf(static_cast<std::uint64_t>(t.m) + 1);
    for (auto [a, b] : t.edges)
        if (!uf.unite(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)))
            return false;  // cycle
    return true;
}

}  // namespace

TEST_CASE("tiny trees") {
    CHECK_THROWS(sample_uniform_tree(1, 5));
    const auto t2 = sample_uniform_tree(2, 5);
    CHECK(canonical_edges(t2) == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(tree_diameter(t2) == 1);
    CHECK(tree_max_degree(t2) == 1);
}

TEST_CASE("prufer sampling is uniform over the 3 trees on 3 labels") {
    std::map<std::vector<std::pair<int, int>>, int> freq;
    const int trials = 100000;
    for (int s = 0; s < trials; ++s)
        freq[canonical_edges(sample_uniform_tree(3, static_cast<std::uint64_t>(s)))]++;
    REQUIRE(freq.size() == 3);
    for (const auto& [edges, count] : freq) {
        (void)edges;
        CHECK(static_cast<double>(count) / trials == Catch::Approx(1.0 / 3.0).margin(0.01));
    }
}

TEST_CASE("prufer sampling is uniform over the 16 trees on 4 labels") {
    std::map<std::vector<std::pair<int, int>>, int> freq;
    const int trials = 160000;
    for (int s = 0; s < trials; ++s)
        freq[canonical_edges(sample_uniform_tree(4, static_cast<std::uint64_t>(s) + 7))]++;
    REQUIRE(freq.size() == 16);  // Cayley: 4^2
    for (const auto& [edges, count] : freq) {
        (void)edges;
        CHECK(static_cast<double>(count) / trials ==
              Catch::Approx(1.0 / 16.0).margin(0.004));
    }
}

TEST_CASE("samples are trees") {
    for (int m : {5, 23, 100})
        for (std::uint64_t s = 0; s < 50; ++s) {
            const auto t = sample_uniform_tree(m, s);
            REQUIRE(is_tree(t));
            for (auto [a, b] : t.edges) {
                REQUIRE(a >= 1);
                REQUIRE(a <= m);
                REQUIRE(b >= 1);
                REQUIRE(b <= m);
                REQUIRE(a != b);
            }
        }
}

TEST_CASE("path and star statistics") {
    LabelledTree path;
    path.m = 5;
    path.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
    CHECK(tree_diameter(path) == 4);
    CHECK(tree_max_degree(path) == 2);

    LabelledTree star;
    star.m = 7;
    star.edges = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}};
    CHECK(tree_diameter(star) == 2);
    CHECK(tree_max_degree(star) == 6);
}

TEST_CASE("large random trees have logarithmic degrees and sqrt diameters") {
    // Delta(T) concentrates near log m / log log m and the diameter near
    // sqrt(m); generous factors keep this a structural regression test, not
    // an asymptotic claim.
    const int m = 10000;
    const double scale = std::log(m) / std::log(std::log(m));  // ~4.15
    int in_band = 0;
    std::vector<int> diameters;
    for (int s = 0; s < 100; ++s) {
        const auto t = sample_uniform_tree(m, static_cast<std::uint64_t>(s) * 31 + 1);
        const int d = tree_max_degree(t);
        if (d >= 0.5 * scale && d <= 2.5 * scale) ++in_band;
        diameters.push_back(tree_diameter(t));
    }
    CHECK(in_band >= 90);
    std::sort(diameters.begin(), diameters.end());
    CHECK(diameters[50] <= 6.0 * std::sqrt(static_cast<double>(m)));
}

TEST_CASE("rooted subtree census on the hexagon") {
    // Arcs of j consecutive vertices are the only connected j-subsets of a
    // 6-cycle (j < 6), each a path; the full cycle has 6 spanning trees.
    CHECK(count_rooted_trees(2, 1) == 6);
    CHECK(count_rooted_trees(2, 2) == 12);
    CHECK(count_rooted_trees(2, 3) == 18);
    CHECK(count_rooted_trees(2, 4) == 24);
    CHECK(count_rooted_trees(2, 5) == 30);
    CHECK(count_rooted_trees(2, 6) == 36);
}

TEST_CASE("rooted subtree census on Perm(3)") {
    CHECK(count_rooted_trees(3, 1) == 24);
    CHECK(count_rooted_trees(3, 2) == 72);  // 36 edges, 2 roots each
    // Triangle-free host: connected 3-sets are exactly the 2-paths,
    // sum over centers of C(3,2) = 24*3 = 72, times 3 roots.
    CHECK(count_rooted_trees(3, 3) == 216);
    CHECK_THROWS(count_rooted_trees(4, 2));
    CHECK_THROWS(count_rooted_trees(3, 7));
}

TEST_CASE("census respects the degree-based sandwich") {
    for (int n : {2, 3}) {
        const double nv = static_cast<double>(host_vertex_count(n));
        for (int m = 1; m <= 6; ++m) {
            const auto t = static_cast<double>(count_rooted_trees(n, m));
            const auto b = tree_count_bounds(nv, n, m);
            REQUIRE(t <= b.upper);
            if (b.lower_valid) REQUIRE(t >= b.lower);
        }
    }
    // delta > m gates the lower bound: on Perm(3) that means m <= 2.
    CHECK(tree_count_bounds(24.0, 3, 2).lower_valid);
    CHECK(!tree_count_bounds(24.0, 3, 3).lower_valid);
}
