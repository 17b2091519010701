#pragma once

// Projection-first search: explores a percolation cluster without touching
// the rest of the host graph. Every frontier vertex owns a private face; its
// open neighbors inside that face are discovered, then the face is projected
// onto the new vertices so that the children again hold pairwise disjoint
// faces. Four invariants are maintained:
//   (a) the recorded parent edges form a tree on the discovered set W
//   (b) W is the disjoint union of the per-round frontiers
//   (c) frontier faces are pairwise disjoint and meet W only in their owner
//   (d) dim H(x) >= m - w(x), with w(child) = w(parent) + #children(parent)
//
// The two-phase variant runs a few plain rounds and then exposes edges one
// at a time, stopping at K discovered neighbors per vertex; this caps the
// weight, hence the dimension loss, per level of the tree.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "permuperc/face.hpp"
#include "permuperc/permutation.hpp"
#include "permuperc/random.hpp"

namespace permuperc {

struct PfsConfig {
    enum class Mode { plain, two_phase };
    Mode mode = Mode::plain;
    double p = 0.0;
    std::uint64_t max_rounds = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t K = 0;     // per-vertex neighbor cap, two_phase only
    std::uint64_t tau1 = 0;  // plain rounds before truncation kicks in
    std::uint64_t r = std::numeric_limits<std::uint64_t>::max();  // early stop at |W| >= r
    bool check_invariants = false;

    void validate() const {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("pfs: p in [0,1]");
        if (max_rounds < 1) throw std::invalid_argument("pfs: max_rounds >= 1");
        if (mode == Mode::two_phase && K < 1)
            throw std::invalid_argument("pfs: two_phase needs K >= 1");
    }
};

// Truncation level K = ceil(max{2emp, log2(beta^-2)}) for p = (1+beta)/m.
inline std::uint64_t truncation_K(double beta, int m, double p) {
    const double a = 2.0 * std::exp(1.0) * static_cast<double>(m) * p;
    const double b = std::log2(1.0 / (beta * beta));
    return static_cast<std::uint64_t>(std::ceil(std::max(a, b)));
}

// Phase-1 length: log log m rounded to the nearest round, at least one.
inline std::uint64_t default_tau1(int m) {
    const double ll = std::log(std::log(static_cast<double>(m)));
    return static_cast<std::uint64_t>(std::max(1.0, std::round(ll)));
}

struct PfsTreeEdge {
    std::uint64_t child;
    std::uint64_t parent;
    int generator;
};

// One entry per processed frontier vertex: its face dimension at exposure
// time, how many open neighbors it found, its weight, depth, and round.
struct PfsExposure {
    std::uint64_t rank;
    int face_dim;
    int children;
    std::uint64_t weight;
    std::uint64_t depth;
    std::uint64_t round;
};

struct PfsFrontierVertex {
    Permutation perm;
    FaceChain face;
    std::uint64_t weight;
    std::uint64_t depth;
};

struct PfsState {
    std::uint64_t rounds = 0;
    std::vector<std::uint64_t> discovered;       // ranks, discovery order; W
    std::vector<PfsTreeEdge> tree;               // |W| - 1 edges
    std::vector<PfsExposure> exposures;
    std::vector<std::uint64_t> frontier_sizes;   // |A(t)|, t = 1, 2, ...
    std::vector<std::uint64_t> w_after_round;    // |W| after round t
    std::vector<int> min_face_dim_per_round;     // over A(t) at exposure time
    std::uint64_t max_weight = 0;
    std::uint64_t queried_edges = 0;
    bool stopped_at_r = false;
    std::vector<PfsFrontierVertex> frontier;     // state at termination

    std::uint64_t size() const { return discovered.size(); }
};

namespace detail {

inline void check_pfs_round(const PfsState& st,
                            const std::vector<PfsFrontierVertex>& frontier, int m) {
    // (a) parent edges form a tree: each non-root discovered exactly once.
    std::unordered_set<std::uint64_t> seen(st.discovered.begin(), st.discovered.end());
    if (seen.size() != st.discovered.size())
        throw std::logic_error("pfs invariant (a/b): vertex discovered twice");
    if (st.tree.size() + 1 != st.discovered.size())
        throw std::logic_error("pfs invariant (a): tree edge count");

    // (c) frontier faces pairwise disjoint, each containing only its owner
    // among the discovered vertices.
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (std::size_t j = i + 1; j < frontier.size(); ++j)
            if (!faces_disjoint(frontier[i].face, frontier[j].face))
                throw std::logic_error("pfs invariant (c): frontier faces intersect");
        std::uint64_t inside = 0;
        for (auto w : st.discovered)
            if (frontier[i].face.contains(unrank(frontier[i].perm.n(), w))) ++inside;
        if (inside != 1)
            throw std::logic_error("pfs invariant (c): face meets W beyond its owner");
    }

    // (d) dimension ledger.
    for (const auto& f : frontier)
        if (f.face.dimension() < m - static_cast<int>(f.weight))
            throw std::logic_error("pfs invariant (d): dimension below m - w(x)");
}

}  // namespace detail

// Core loop, generic in the edge oracle so tests can instrument queries.
// open(e) must be a pure function of the global host edge id e.
template <typename OpenFn>
PfsState pfs_explore_fn(const FaceChain& host, const Permutation& v, OpenFn&& open,
                        const PfsConfig& cfg) {
    cfg.validate();
    if (!host.contains(v)) throw std::invalid_argument("pfs: start vertex outside host");
    const int m = host.dimension();

    PfsState st;
    st.discovered.push_back(rank_of(v));
    std::vector<PfsFrontierVertex> frontier;
    frontier.push_back({v, host, 0, 1});

    while (!frontier.empty() && st.rounds < cfg.max_rounds &&
           st.size() < cfg.r) {
        ++st.rounds;
        const bool truncated =
            cfg.mode == PfsConfig::Mode::two_phase && st.rounds > cfg.tau1;
        st.frontier_sizes.push_back(frontier.size());
        int min_dim = m + 1;
        std::vector<PfsFrontierVertex> next;

        for (const auto& x : frontier) {
            if (st.size() >= cfg.r) break;
            min_dim = std::min(min_dim, x.face.dimension());

            // Expose admissible edges in ascending generator order; in the
            // truncated phase stop as soon as K neighbors are found.
            std::vector<std::pair<int, Permutation>> found;
            for (int g : x.face.available_levels()) {
                if (truncated && found.size() >= cfg.K) break;
                ++st.queried_edges;
                if (open(edge_id(x.perm, g))) found.emplace_back(g, apply_generator(x.perm, g));
            }

            st.exposures.push_back({rank_of(x.perm), x.face.dimension(),
                                    static_cast<int>(found.size()), x.weight, x.depth,
                                    st.rounds});
            if (found.empty()) continue;

            std::vector<Permutation> X;
            X.reserve(found.size() + 1);
            X.push_back(x.perm);
            for (const auto& [g, y] : found) {
                (void)g;
                X.push_back(y);
            }
            auto faces = project(x.face, X);

            const std::uint64_t cw = x.weight + found.size();
            st.max_weight = std::max(st.max_weight, cw);
            const auto parent_rank = rank_of(x.perm);
            for (const auto& [g, y] : found) {
                const auto yr = rank_of(y);
                st.discovered.push_back(yr);
                st.tree.push_back({yr, parent_rank, g});
                next.push_back({y, faces.at(y), cw, x.depth + 1});
            }
        }

        st.w_after_round.push_back(st.size());
        st.min_face_dim_per_round.push_back(min_dim <= m ? min_dim : 0);
        frontier.swap(next);

        if (cfg.check_invariants) detail::check_pfs_round(st, frontier, m);
        if (st.size() >= cfg.r) st.stopped_at_r = true;
    }

    st.frontier = std::move(frontier);
    return st;
}

inline PfsState pfs_explore(const FaceChain& host, const Permutation& v,
                            std::uint64_t seed, const PfsConfig& cfg) {
    if (cfg.mode != PfsConfig::Mode::plain)
        throw std::invalid_argument("pfs_explore: plain mode only");
    return pfs_explore_fn(host, v, [&](std::uint64_t e) { return edge_open(seed, e, cfg.p); },
                          cfg);
}

inline PfsState pfs_prime_explore(const FaceChain& host, const Permutation& v,
                                  std::uint64_t seed, const PfsConfig& cfg) {
    if (cfg.mode != PfsConfig::Mode::two_phase)
        throw std::invalid_argument("pfs_prime_explore: two_phase mode only");
    return pfs_explore_fn(host, v, [&](std::uint64_t e) { return edge_open(seed, e, cfg.p); },
                          cfg);
}

// One-sided cluster size test: true guarantees |C_v| >= r under this seed.
inline bool cluster_reaches(const FaceChain& host, const Permutation& v,
                            std::uint64_t seed, double p, std::uint64_t r) {
    if (r <= 1) return true;
    PfsConfig cfg;
    cfg.mode = PfsConfig::Mode::plain;
    cfg.p = p;
    cfg.r = r;
    return pfs_explore(host, v, seed, cfg).size() >= r;
}

}  // namespace permuperc
