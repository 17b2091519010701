#pragma once

// Seeded bond percolation on the full host graph: component structure by
// union-find over streamed canonical edges, two-round exposure, hitting
// times along the uniform edge order, and component-geometry probes.
//
// Everything here enumerates all (n+1)! vertices, so it is guarded by an
// explicit cap (default 9, env override PERMUPERC_MAX_N up to 11). Cluster
// exploration that avoids enumeration lives in pfs.hpp.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "permuperc/permutation.hpp"
#include "permuperc/random.hpp"
#include "permuperc/union_find.hpp"

namespace permuperc {

struct PercolationConfig {
    int n = 7;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t r = 1;  // component-size threshold for count_in_components_geq_r

    void validate() const {
        if (n < 1) throw std::invalid_argument("config: n >= 1 required");
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("config: p in [0,1]");
        if (r < 1) throw std::invalid_argument("config: r >= 1 required");
    }
};

struct ComponentReport {
    std::vector<std::uint64_t> component_sizes;  // descending
    std::uint64_t num_components = 0;
    std::uint64_t isolated_count = 0;
    std::uint64_t largest = 0;
    std::uint64_t second_largest = 0;
    double giant_fraction = 0.0;
    bool connected = false;
    std::uint64_t count_in_components_geq_r = 0;  // vertices in components of size >= r
};

// Hard ceiling for full enumeration; default 9 keeps union-find under 30 MB.
inline int max_enumeration_n() {
    int cap = 9;
    if (const char* env = std::getenv("PERMUPERC_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) cap = static_cast<int>(v);
    }
    return std::min(cap, 11);
}

inline void require_enumerable(int n) {
    const int cap = max_enumeration_n();
    if (n > cap)
        throw std::invalid_argument("n=" + std::to_string(n) +
                                    " exceeds enumeration cap " + std::to_string(cap) +
                                    " (raise PERMUPERC_MAX_N, hard max 11)");
    if (n >= 10) {
        const double bytes = 8.0 * static_cast<double>(host_vertex_count(n));
        std::fprintf(stderr, "# enumerating n=%d: ~%.1f GiB for union-find\n", n,
                     bytes / (1024.0 * 1024.0 * 1024.0));
    }
}

namespace detail {

inline ComponentReport report_from_union_find(UnionFind32& uf, std::uint64_t nverts,
                                              std::uint64_t r) {
    ComponentReport rep;
    rep.component_sizes.reserve(uf.component_count());
    for (std::uint64_t x = 0; x < nverts; ++x) {
        const auto xi = static_cast<std::uint32_t>(x);
        if (uf.find(xi) == xi) rep.component_sizes.push_back(uf.component_size(xi));
    }
    std::sort(rep.component_sizes.begin(), rep.component_sizes.end(),
              std::greater<std::uint64_t>());
    rep.num_components = rep.component_sizes.size();
    rep.largest = rep.component_sizes.empty() ? 0 : rep.component_sizes.front();
    rep.second_largest = rep.component_sizes.size() > 1 ? rep.component_sizes[1] : 0;
    rep.giant_fraction = static_cast<double>(rep.largest) / static_cast<double>(nverts);
    rep.connected = rep.num_components == 1;
    for (auto s : rep.component_sizes) {
        if (s == 1) ++rep.isolated_count;
        if (s >= r) rep.count_in_components_geq_r += s;
    }
    return rep;
}

}  // namespace detail

// Exact component structure of the percolated host. Streams every canonical
// edge once through the oracle; memory is 8 bytes per vertex.
inline ComponentReport enumerate_components(const PercolationConfig& cfg) {
    cfg.validate();
    require_enumerable(cfg.n);
    const std::uint64_t nverts = host_vertex_count(cfg.n);
    UnionFind32 uf(nverts);
    for_each_host_edge(cfg.n, [&](std::uint64_t u, std::uint64_t v, std::uint64_t e) {
        if (edge_open(cfg.seed, e, cfg.p))
            uf.unite(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    });
    return detail::report_from_union_find(uf, nverts, cfg.r);
}

// Number of components whose size falls in [lo, hi].
inline std::uint64_t medium_component_census(const ComponentReport& rep, std::uint64_t lo,
                                             std::uint64_t hi) {
    std::uint64_t c = 0;
    for (auto s : rep.component_sizes)
        if (lo <= s && s <= hi) ++c;
    return c;
}

inline std::uint64_t medium_component_census(const PercolationConfig& cfg, std::uint64_t lo,
                                             std::uint64_t hi) {
    return medium_component_census(enumerate_components(cfg), lo, hi);
}

// Sprinkling decomposition: G1 keeps edges with uniform below p1; G2 keeps
// those below p, where 1-p = (1-p1)(1-p2). Same seed, so G1 is a subgraph
// of G2 and G2 is distributed exactly as a single exposure at p.
inline std::pair<ComponentReport, ComponentReport> two_round_exposure(int n, double p1,
                                                                      double p2,
                                                                      std::uint64_t seed) {
    if (!(p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= 1.0))
        throw std::invalid_argument("two_round_exposure: probabilities in [0,1]");
    const double p = 1.0 - (1.0 - p1) * (1.0 - p2);
    PercolationConfig c1{n, p1, seed, 1};
    PercolationConfig c2{n, p, seed, 1};
    return {enumerate_components(c1), enumerate_components(c2)};
}

struct HittingTimes {
    std::uint64_t t_min_deg_1 = 0;  // edges inserted when the last isolated vertex vanishes
    std::uint64_t t_connect = 0;    // edges inserted when one component remains
    bool agree = false;             // the two thresholds coincide
};

// Insert edges in increasing uniform order (edge id breaks float ties) and
// record when minimum degree reaches 1 and when the graph connects.
// t_connect >= t_min_deg_1 always.
inline HittingTimes hitting_times(int n, std::uint64_t seed) {
    require_enumerable(n);
    const std::uint64_t nverts = host_vertex_count(n);
    const std::uint64_t nedges = host_edge_count(n);

    struct E {
        double u;
        std::uint64_t id;
        std::uint32_t a, b;
    };
    std::vector<E> edges;
    edges.reserve(nedges);
    for_each_host_edge(n, [&](std::uint64_t a, std::uint64_t b, std::uint64_t e) {
        edges.push_back({edge_uniform(seed, e), e, static_cast<std::uint32_t>(a),
                         static_cast<std::uint32_t>(b)});
    });
    std::sort(edges.begin(), edges.end(), [](const E& x, const E& y) {
        return x.u != y.u ? x.u < y.u : x.id < y.id;
    });

    UnionFind32 uf(nverts);
    std::vector<std::uint8_t> deg(nverts, 0);
    std::uint64_t isolated = nverts;
    HittingTimes ht;
    std::uint64_t t = 0;
    for (const auto& e : edges) {
        ++t;
        if (deg[e.a] == 0) --isolated;
        if (deg[e.b] == 0) --isolated;
        if (deg[e.a] < 255) ++deg[e.a];
        if (deg[e.b] < 255) ++deg[e.b];
        uf.unite(e.a, e.b);
        if (ht.t_min_deg_1 == 0 && isolated == 0) ht.t_min_deg_1 = t;
        if (uf.component_count() == 1) {
            ht.t_connect = t;
            break;
        }
    }
    ht.agree = ht.t_connect == ht.t_min_deg_1 && ht.t_connect != 0;
    return ht;
}

// Fraction of vertices within host distance 2 of some component of size >= r.
inline double distance2_coverage(const PercolationConfig& cfg, std::uint64_t r) {
    cfg.validate();
    require_enumerable(cfg.n);
    const int n = cfg.n;
    const std::uint64_t nverts = host_vertex_count(n);

    UnionFind32 uf(nverts);
    for_each_host_edge(n, [&](std::uint64_t u, std::uint64_t v, std::uint64_t e) {
        if (edge_open(cfg.seed, e, cfg.p))
            uf.unite(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    });

    std::vector<std::uint8_t> mark(nverts, 0);
    for (std::uint64_t x = 0; x < nverts; ++x)
        if (uf.component_size(static_cast<std::uint32_t>(x)) >= r) mark[x] = 1;

    // Two rounds of closed-neighborhood expansion over the host graph.
    const int len = n + 1;
    for (int round = 0; round < 2; ++round) {
        std::vector<std::uint8_t> next = mark;
        std::vector<int> w(len), pos(len + 1);
        for (int j = 0; j < len; ++j) w[j] = j + 1;
        std::uint64_t u = 0;
        do {
            if (!mark[u]) {
                for (int j = 0; j < len; ++j) pos[w[j]] = j;
                for (int i = 1; i <= n; ++i) {
                    const int a = pos[i], b = pos[i + 1];
                    const std::uint64_t nb = a < b ? u + factorial(n - a) : u - factorial(n - b);
                    if (mark[nb]) {
                        next[u] = 1;
                        break;
                    }
                }
            }
            ++u;
        } while (std::next_permutation(w.begin(), w.end()));
        mark.swap(next);
    }

    std::uint64_t covered = 0;
    for (auto m : mark) covered += m;
    return static_cast<double>(covered) / static_cast<double>(nverts);
}

}  // namespace permuperc
