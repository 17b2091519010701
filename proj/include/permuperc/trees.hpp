#pragma once

// Labelled-tree utilities: uniform sampling via Prufer sequences, degree and
// diameter statistics, and the exact census of rooted m-vertex subtrees of
// small hosts (connected subset enumeration + Kirchhoff spanning-tree counts
// with exact integer arithmetic).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "permuperc/permutation.hpp"
#include "permuperc/random.hpp"

namespace permuperc {

struct LabelledTree {
    int m = 0;                              // labels 1..m
    std::vector<std::pair<int, int>> edges;  // m-1 edges
};

namespace detail {

// Unbiased integer in [0, m) from raw engine words.
template <typename Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t m) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % m;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % m;
}

}  // namespace detail

// Uniform over the m^(m-2) labelled trees: uniform Prufer word, linear-time
// decode by tracking degrees and the smallest current leaf.
inline LabelledTree sample_uniform_tree(int m, std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("sample_uniform_tree: m >= 2");
    LabelledTree t;
    t.m = m;
    t.edges.reserve(static_cast<std::size_t>(m) - 1);
    if (m == 2) {
        t.edges.emplace_back(1, 2);
        return t;
    }

    SplitMix64 rng(seed);
    std::vector<int> prufer(static_cast<std::size_t>(m) - 2);
    for (auto& x : prufer)
        x = static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(m))) + 1;

    std::vector<int> degree(static_cast<std::size_t>(m) + 1, 1);
    for (int x : prufer) ++degree[static_cast<std::size_t>(x)];

    int ptr = 1;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int x : prufer) {
        t.edges.emplace_back(leaf, x);
        if (--degree[static_cast<std::size_t>(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    t.edges.emplace_back(leaf, m);
    return t;
}

inline std::vector<std::vector<int>> tree_adjacency(const LabelledTree& t) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.m) + 1);
    for (const auto& [a, b] : t.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

inline int tree_max_degree(const LabelledTree& t) {
    const auto adj = tree_adjacency(t);
    std::size_t best = 0;
    for (const auto& a : adj) best = std::max(best, a.size());
    return static_cast<int>(best);
}

namespace detail {

inline std::pair<int, int> farthest_from(const std::vector<std::vector<int>>& adj,
                                         int src) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    int far = src;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (dist[static_cast<std::size_t>(u)] > dist[static_cast<std::size_t>(far)]) far = u;
        for (int v : adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return {far, dist[static_cast<std::size_t>(far)]};
}

}  // namespace detail

// Double BFS; exact on trees.
inline int tree_diameter(const LabelledTree& t) {
    const auto adj = tree_adjacency(t);
    const auto [far, d1] = detail::farthest_from(adj, 1);
    (void)d1;
    return detail::farthest_from(adj, far).second;
}

namespace detail {

// Exact spanning-tree count of a small simple graph: determinant of the
// reduced Laplacian by Bareiss fraction-free elimination. Values stay well
// inside int64 for the <= 6-vertex graphs this is used on.
inline std::int64_t spanning_tree_count(int k, const std::vector<std::pair<int, int>>& edges) {
    if (k == 1) return 1;
    std::vector<std::vector<std::int64_t>> L(static_cast<std::size_t>(k),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
    for (const auto& [a, b] : edges) {
        ++L[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)];
        ++L[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)];
        --L[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        --L[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
    }
    // Drop the last row and column, then Bareiss.
    const int d = k - 1;
    std::int64_t prev = 1;
    for (int c = 0; c < d; ++c) {
        if (L[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] == 0) {
            int swap_row = -1;
            for (int r2 = c + 1; r2 < d; ++r2)
                if (L[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c)] != 0) {
                    swap_row = r2;
                    break;
                }
            if (swap_row < 0) return 0;  // singular: disconnected
            std::swap(L[static_cast<std::size_t>(c)], L[static_cast<std::size_t>(swap_row)]);
            for (auto& row : L) row[static_cast<std::size_t>(c)] = -row[static_cast<std::size_t>(c)];
            // Negating a column keeps the determinant equal after a row swap.
        }
        for (int r2 = c + 1; r2 < d; ++r2)
            for (int c2 = c + 1; c2 < d; ++c2) {
                L[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] =
                    (L[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] *
                         L[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] -
                     L[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c)] *
                         L[static_cast<std::size_t>(c)][static_cast<std::size_t>(c2)]) /
                    prev;
            }
        prev = L[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    }
    return prev;
}

}  // namespace detail

// Exact number of rooted m-vertex subtrees of the host: over every
// m-subset of vertices, the spanning-tree count of the induced subgraph,
// times m choices of root. Cost-guarded to n <= 3, m <= 6.
inline std::uint64_t count_rooted_trees(int n, int m) {
    if (n < 1 || n > 3) throw std::invalid_argument("count_rooted_trees: n <= 3");
    if (m < 1 || m > 6) throw std::invalid_argument("count_rooted_trees: m <= 6");
    const auto nverts = static_cast<int>(host_vertex_count(n));
    if (m == 1) return static_cast<std::uint64_t>(nverts);

    // Host adjacency once.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nverts));
    for_each_host_edge(n, [&](std::uint64_t u, std::uint64_t v, std::uint64_t) {
        adj[static_cast<std::size_t>(u)].push_back(static_cast<int>(v));
        adj[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
    });

    std::uint64_t total = 0;
    std::vector<int> pick(static_cast<std::size_t>(m));
    std::vector<int> index_of(static_cast<std::size_t>(nverts), -1);

    // Lexicographic m-combinations of vertex ranks.
    for (int j = 0; j < m; ++j) pick[static_cast<std::size_t>(j)] = j;
    for (;;) {
        for (int j = 0; j < m; ++j) index_of[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])] = j;
        std::vector<std::pair<int, int>> edges;
        for (int j = 0; j < m; ++j)
            for (int w : adj[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])]) {
                const int jw = index_of[static_cast<std::size_t>(w)];
                if (jw > j) edges.emplace_back(j, jw);
            }
        if (static_cast<int>(edges.size()) >= m - 1)
            total += static_cast<std::uint64_t>(detail::spanning_tree_count(m, edges)) *
                     static_cast<std::uint64_t>(m);
        for (int j = 0; j < m; ++j) index_of[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])] = -1;

        int j = m - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == nverts - m + j) --j;
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
        for (int j2 = j + 1; j2 < m; ++j2)
            pick[static_cast<std::size_t>(j2)] = pick[static_cast<std::size_t>(j2 - 1)] + 1;
    }
    return total;
}

// Sandwich bounds for the rooted-subtree count on an n-regular host with
// n_vert vertices; the lower bound needs min degree > m.
struct TreeCountBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_valid = false;
};

inline TreeCountBounds tree_count_bounds(double n_vert, int degree, int m) {
    TreeCountBounds b;
    const double e = std::exp(1.0);
    b.upper = n_vert * std::pow(e * degree, m - 1);
    if (degree > m) {
        double fact = 1.0;
        for (int j = 2; j <= m - 1; ++j) fact *= j;
        b.lower = n_vert * std::pow(static_cast<double>(m), m - 2) *
                  std::pow(static_cast<double>(degree - m), m - 1) / fact;
        b.lower_valid = true;
    }
    return b;
}

}  // namespace permuperc
