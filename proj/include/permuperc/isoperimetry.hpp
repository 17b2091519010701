#pragma once

// Edge isoperimetry on the host graph: exact boundaries, the halfspace and
// subcube witness constructions, brute-force i_k on tiny instances, and the
// dimension-counting lower bound i_k >= n - log2(k).

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "permuperc/face.hpp"
#include "permuperc/percolation.hpp"
#include "permuperc/permutation.hpp"

namespace permuperc {

// Exact number of host edges with exactly one endpoint in S (ranks).
inline std::uint64_t edge_boundary(int n, const std::vector<std::uint64_t>& S) {
    require_enumerable(n);
    std::vector<std::uint8_t> in(host_vertex_count(n), 0);
    for (auto r : S) {
        if (r >= host_vertex_count(n)) throw std::invalid_argument("edge_boundary: rank out of range");
        in[r] = 1;
    }
    std::uint64_t cut = 0;
    for_each_host_edge(n, [&](std::uint64_t u, std::uint64_t v, std::uint64_t) {
        cut += in[u] != in[v];
    });
    return cut;
}

// S = {words with first value <= (n+1)/2}; half the vertices, boundary n!.
inline std::vector<std::uint64_t> halfspace_witness(int n) {
    if (n % 2 == 0) throw std::invalid_argument("halfspace_witness: n must be odd");
    require_enumerable(n);
    const int half = (n + 1) / 2;
    std::vector<std::uint64_t> S;
    S.reserve(host_vertex_count(n) / 2);
    std::vector<int> w(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = j + 1;
    std::uint64_t r = 0;
    do {
        if (w[0] <= half) S.push_back(r);
        ++r;
    } while (std::next_permutation(w.begin(), w.end()));
    return S;
}

// r two-element position blocks followed by singletons: an r-dimensional
// subcube with 2^r members and boundary 2^r (n-r).
inline FaceChain hypercube_face(int n, int r) {
    if (r < 1 || r > (n + 1) / 2) throw std::invalid_argument("hypercube_face: 1 <= r <= (n+1)/2");
    std::vector<std::vector<int>> blocks;
    for (int j = 0; j < r; ++j) blocks.push_back({2 * j + 1, 2 * j + 2});
    for (int pos = 2 * r + 1; pos <= n + 1; ++pos) blocks.push_back({pos});
    return FaceChain(n, std::move(blocks));
}

inline std::vector<std::uint64_t> face_member_ranks(const FaceChain& F) {
    std::vector<std::uint64_t> out;
    for (const auto& p : face_members(F)) out.push_back(rank_of(p));
    std::sort(out.begin(), out.end());
    return out;
}

inline double harper_bound(int n, std::uint64_t k) {
    return static_cast<double>(n) - std::log2(static_cast<double>(k));
}

struct IsoResult {
    double ratio = 0.0;                  // min |edge boundary| / k
    std::uint64_t boundary = 0;          // boundary of the reported witness
    std::vector<std::uint64_t> witness;  // one minimizing k-subset, lex-first
};

// Exact i_k by scanning all k-subsets with an incremental internal-edge
// count. Cost guard: n <= 3 for k <= 12, n = 4 only up to k = 3.
inline IsoResult i_k_bruteforce(int n, int k) {
    const bool permitted = (n >= 1 && n <= 3 && k >= 1 && k <= 12) ||
                           (n == 4 && k >= 1 && k <= 3);
    if (!permitted) throw std::invalid_argument("i_k_bruteforce: outside cost guard");
    const auto nverts = static_cast<int>(host_vertex_count(n));
    if (k > nverts) throw std::invalid_argument("i_k_bruteforce: k exceeds vertex count");

    // Adjacency as two-word bitmasks; hosts here have at most 120 vertices.
    std::vector<std::array<std::uint64_t, 2>> adj(static_cast<std::size_t>(nverts),
                                                  {0, 0});
    for_each_host_edge(n, [&](std::uint64_t u, std::uint64_t v, std::uint64_t) {
        adj[u][v >> 6] |= std::uint64_t{1} << (v & 63);
        adj[v][u >> 6] |= std::uint64_t{1} << (u & 63);
    });

    std::uint64_t best_boundary = ~std::uint64_t{0};
    std::vector<int> best, cur;
    cur.reserve(static_cast<std::size_t>(k));
    std::array<std::uint64_t, 2> mask{0, 0};

    // Depth-first over lexicographic combinations, carrying the number of
    // induced edges; boundary = n*k - 2*internal at the leaves.
    auto rec = [&](auto&& self, int next, int internal) -> void {
        if (static_cast<int>(cur.size()) == k) {
            const std::uint64_t b =
                static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(k) -
                2ULL * static_cast<std::uint64_t>(internal);
            if (b < best_boundary) {
                best_boundary = b;
                best = cur;
            }
            return;
        }
        const int remaining = k - static_cast<int>(cur.size());
        for (int v = next; v <= nverts - remaining; ++v) {
            const int gain = std::popcount(adj[static_cast<std::size_t>(v)][0] & mask[0]) +
                             std::popcount(adj[static_cast<std::size_t>(v)][1] & mask[1]);
            cur.push_back(v);
            mask[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
            self(self, v + 1, internal + gain);
            mask[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);

    IsoResult res;
    res.boundary = best_boundary;
    res.ratio = static_cast<double>(best_boundary) / static_cast<double>(k);
    res.witness.assign(best.begin(), best.end());
    return res;
}

struct ConjectureWitness {
    std::uint64_t k = 0;         // member count of the product-of-hexagons face
    std::uint64_t boundary = 0;  // exact edge boundary
    double ratio = 0.0;          // boundary / k
    int dimension = 0;
};

// The (n+1)/3 three-element-block face: a product of hexagons whose boundary
// ratio matches the conjectured i_k value at k = 6^{(n+1)/3}. Witness only;
// minimality is not claimed.
inline ConjectureWitness conjecture_face_boundary(int n) {
    if (n % 3 != 2) throw std::invalid_argument("conjecture_face_boundary: n mod 3 == 2 required");
    std::vector<std::vector<int>> blocks;
    for (int j = 0; j < (n + 1) / 3; ++j)
        blocks.push_back({3 * j + 1, 3 * j + 2, 3 * j + 3});
    const FaceChain F(n, std::move(blocks));
    ConjectureWitness w;
    w.k = F.member_count();
    w.dimension = F.dimension();
    w.boundary = edge_boundary(n, face_member_ranks(F));
    w.ratio = static_cast<double>(w.boundary) / static_cast<double>(w.k);
    return w;
}

}  // namespace permuperc
