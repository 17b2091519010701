#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <vector>

#include "permuperc/percolation.hpp"

using namespace permuperc;

namespace {

// Independent component structure: explicit adjacency via apply_generator,
// BFS flood fill. Shares nothing with the union-find streaming path except
// the edge oracle itself.
std::vector<std::uint64_t> bfs_component_sizes(int n, double p, std::uint64_t seed) {
    const auto nverts = host_vertex_count(n);
    std::vector<std::vector<std::uint64_t>> adj(nverts);
    for (std::uint64_t u = 0; u < nverts; ++u) {
        const Permutation pu = unrank(n, u);
        for (int i = 1; i <= n; ++i) {
            const auto v = rank_of(apply_generator(pu, i));
            if (u < v && edge_open(seed, edge_id(pu, i), p)) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
    }
    std::vector<char> vis(nverts, 0);
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t s = 0; s < nverts; ++s) {
        if (vis[s]) continue;
        std::uint64_t cnt = 0;
        std::queue<std::uint64_t> q;
        q.push(s);
        vis[s] = 1;
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            ++cnt;
            for (auto v : adj[u])
                if (!vis[v]) {
                    vis[v] = 1;
                    q.push(v);
                }
        }
        sizes.push_back(cnt);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

}  // namespace

TEST_CASE("degenerate probabilities") {
    for (int n : {2, 3, 4}) {
        const auto all_closed = enumerate_components({n, 0.0, 123, 1});
        CHECK(all_closed.num_components == host_vertex_count(n));
        CHECK(all_closed.isolated_count == host_vertex_count(n));
        CHECK(all_closed.largest == 1);
        CHECK(!all_closed.connected);

        const auto all_open = enumerate_components({n, 1.0, 123, 1});
        CHECK(all_open.num_components == 1);
        CHECK(all_open.largest == host_vertex_count(n));
        CHECK(all_open.connected);
        CHECK(all_open.giant_fraction == 1.0);
        CHECK(all_open.isolated_count == 0);
    }
}

TEST_CASE("report bookkeeping") {
    const PercolationConfig cfg{3, 0.45, 7, 3};
    const auto rep = enumerate_components(cfg);
    std::uint64_t total = 0, iso = 0, geq = 0;
    for (auto s : rep.component_sizes) {
        total += s;
        if (s == 1) ++iso;
        if (s >= cfg.r) geq += s;
    }
    CHECK(total == host_vertex_count(3));
    CHECK(iso == rep.isolated_count);
    CHECK(geq == rep.count_in_components_geq_r);
    CHECK(rep.num_components == rep.component_sizes.size());
    CHECK(std::is_sorted(rep.component_sizes.begin(), rep.component_sizes.end(),
                         std::greater<std::uint64_t>()));
    CHECK(rep.largest == rep.component_sizes.front());
    CHECK((rep.num_components < 2 || rep.second_largest == rep.component_sizes[1]));

    // Determinism: identical config, identical report.
    const auto rep2 = enumerate_components(cfg);
    CHECK(rep.component_sizes == rep2.component_sizes);
}

TEST_CASE("union-find matches BFS flood fill") {
    for (int n : {2, 3, 4})
        for (double p : {0.15, 0.4, 0.7})
            for (std::uint64_t seed : {1ULL, 99ULL, 31415ULL}) {
                const auto rep = enumerate_components({n, p, seed, 1});
                const auto oracle = bfs_component_sizes(n, p, seed);
                REQUIRE(rep.component_sizes == oracle);
            }
}

TEST_CASE("hexagon connectivity probability is 7/64 at p=1/2") {
    // Exhaustive truth: C6 stays connected only with all 6 edges (1 way) or
    // exactly 5 (6 ways), so P = (1 + 6) / 2^6 at p = 1/2.
    int connected = 0;
    const int trials = 100000;
    for (int s = 0; s < trials; ++s)
        connected += enumerate_components({2, 0.5, static_cast<std::uint64_t>(s), 1}).connected;
    CHECK(static_cast<double>(connected) / trials ==
          Catch::Approx(7.0 / 64.0).margin(0.005));
}

TEST_CASE("isolated-vertex count has the exact closed-form mean") {
    // E[isolated] = (n+1)! (1-p)^n by linearity; n = 5 at two parameters.
    const int n = 5;
    const int seeds = 300;
    for (double p : {0.25, 0.4}) {
        double sum = 0, sumsq = 0;
        for (int s = 0; s < seeds; ++s) {
            const auto rep = enumerate_components({n, p, static_cast<std::uint64_t>(s), 1});
            const auto x = static_cast<double>(rep.isolated_count);
            sum += x;
            sumsq += x * x;
        }
        const double mean = sum / seeds;
        const double sd = std::sqrt(std::max(1e-9, sumsq / seeds - mean * mean));
        const double expect =
            static_cast<double>(host_vertex_count(n)) * std::pow(1.0 - p, n);
        REQUIRE(std::fabs(mean - expect) <= 3.0 * sd / std::sqrt(seeds));
    }
}

TEST_CASE("two-round exposure composes and nests") {
    const int n = 4;
    const double p1 = 0.2, p2 = 0.3;
    const auto [g1, g2] = two_round_exposure(n, p1, p2, 2718);

    // p2 = 0 leaves the graph alone.
    const auto [h1, h2] = two_round_exposure(n, p1, 0.0, 2718);
    CHECK(h1.component_sizes == h2.component_sizes);
    CHECK(h1.component_sizes == g1.component_sizes);

    // G2 is exactly a single exposure at 1-(1-p1)(1-p2).
    const double p = 1.0 - (1.0 - p1) * (1.0 - p2);
    const auto direct = enumerate_components({n, p, 2718, 1});
    CHECK(g2.component_sizes == direct.component_sizes);

    // Edgewise nesting under the shared seed.
    bool nested = true;
    for_each_host_edge(n, [&](std::uint64_t, std::uint64_t, std::uint64_t e) {
        if (edge_open(2718, e, p1) && !edge_open(2718, e, p)) nested = false;
    });
    CHECK(nested);
    CHECK(g1.largest <= g2.largest);
    CHECK(g1.num_components >= g2.num_components);
}

TEST_CASE("largest component is monotone along the coupling") {
    const std::vector<double> grid{0.05, 0.1, 0.2, 0.3, 0.45, 0.6, 0.8, 1.0};
    for (std::uint64_t seed : {5ULL, 6ULL, 7ULL}) {
        std::uint64_t prev = 0;
        for (double p : grid) {
            const auto rep = enumerate_components({4, p, seed, 1});
            REQUIRE(rep.largest >= prev);
            prev = rep.largest;
        }
    }
}

TEST_CASE("hitting times order and hexagon disagreement") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto ht = hitting_times(3, seed);
        REQUIRE(ht.t_connect >= ht.t_min_deg_1);
        REQUIRE(ht.t_min_deg_1 >= host_vertex_count(3) / 2);  // every vertex needs an edge
        REQUIRE(ht.t_connect >= host_vertex_count(3) - 1);
        REQUIRE(ht.agree == (ht.t_connect == ht.t_min_deg_1));
    }

    // On the hexagon t_connect = 5 always, and the last isolated vertex
    // survives to the fifth edge only when the two missing edges of the
    // first four share a vertex: 6 of the 15 pairs, so agreement = 0.4.
    int agree = 0;
    const int trials = 2000;
    for (int s = 0; s < trials; ++s) {
        const auto ht = hitting_times(2, static_cast<std::uint64_t>(s));
        REQUIRE(ht.t_connect == 5);
        agree += ht.agree;
    }
    const double rate = static_cast<double>(agree) / trials;
    CHECK(rate == Catch::Approx(0.4).margin(0.05));
}

TEST_CASE("distance-2 coverage endpoints") {
    CHECK(distance2_coverage({3, 0.3, 11, 1}, 1) == 1.0);
    CHECK(distance2_coverage({3, 1.0, 11, 1}, host_vertex_count(3)) == 1.0);
    CHECK(distance2_coverage({3, 0.0, 11, 1}, 2) == 0.0);

    // Midrange sanity: coverage is a fraction and grows with p.
    const double lo = distance2_coverage({4, 0.25, 4, 1}, 8);
    const double hi = distance2_coverage({4, 0.6, 4, 1}, 8);
    CHECK(lo >= 0.0);
    CHECK(hi <= 1.0);
    CHECK(lo <= hi);
}

TEST_CASE("medium component census") {
    CHECK(medium_component_census({3, 1.0, 5, 1}, 2, 8) == 0);
    CHECK(medium_component_census({3, 0.0, 5, 1}, 2, 8) == 0);

    const auto rep = enumerate_components({4, 0.3, 17, 1});
    std::uint64_t expect = 0;
    for (auto s : rep.component_sizes)
        if (2 <= s && s <= 4) ++expect;
    CHECK(medium_component_census(rep, 2, 4) == expect);
}

TEST_CASE("enumeration cap guards memory") {
    CHECK(max_enumeration_n() <= 11);
    CHECK_THROWS(enumerate_components({12, 0.5, 1, 1}));
}
