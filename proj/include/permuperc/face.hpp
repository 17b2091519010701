#pragma once

// Faces of the permutahedron as ordered position partitions.
//
// A chain of blocks B_1,...,B_{k+1} (disjoint position sets covering
// {1..n+1}) describes the face whose members are exactly the permutations
// mapping each block onto its value range (c_{j-1}, c_j], c_j = |B_1|+...+|B_j|.
// Equivalently: pi(I_j) = {1..c_j} for every prefix I_j = B_1 u ... u B_j.
// The induced subgraph is a product of smaller permutahedra, one factor per
// block of size >= 2, and its dimension is sum(|B_j| - 1).

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "permuperc/permutation.hpp"

namespace permuperc {

class FaceChain {
public:
    FaceChain(int n, std::vector<std::vector<int>> blocks)
        : n_(n), blocks_(std::move(blocks)) {
        if (n < 1) throw std::invalid_argument("face chain: n >= 1 required");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 2, false);
        int covered = 0;
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("face chain: empty block");
            std::sort(b.begin(), b.end());
            for (int pos : b) {
                if (pos < 1 || pos > n + 1 || seen[static_cast<std::size_t>(pos)])
                    throw std::invalid_argument("face chain: blocks must partition positions");
                seen[static_cast<std::size_t>(pos)] = true;
                ++covered;
            }
        }
        if (covered != n + 1)
            throw std::invalid_argument("face chain: blocks must cover all positions");
    }

    static FaceChain full(int n) {
        std::vector<int> all(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) all[static_cast<std::size_t>(j)] = j + 1;
        return FaceChain(n, {all});
    }

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    int dimension() const {
        int d = 0;
        for (const auto& b : blocks_) d += static_cast<int>(b.size()) - 1;
        return d;
    }

    // Dimensions of the product factors: one permutahedron of dimension
    // |B_j| - 1 for each block with at least two positions.
    std::vector<int> factor_dimensions() const {
        std::vector<int> f;
        for (const auto& b : blocks_)
            if (b.size() >= 2) f.push_back(static_cast<int>(b.size()) - 1);
        return f;
    }

    // c_1 < c_2 < ... < c_{k+1} = n+1.
    std::vector<int> cumulative_sizes() const {
        std::vector<int> c;
        c.reserve(blocks_.size());
        int s = 0;
        for (const auto& b : blocks_) {
            s += static_cast<int>(b.size());
            c.push_back(s);
        }
        return c;
    }

    std::uint64_t member_count() const {
        std::uint64_t m = 1;
        for (const auto& b : blocks_) m *= factorial(static_cast<int>(b.size()));
        return m;
    }

    bool contains(const Permutation& p) const {
        if (p.n() != n_) throw std::invalid_argument("face chain: dimension mismatch");
        int lo = 0;
        for (const auto& b : blocks_) {
            const int hi = lo + static_cast<int>(b.size());
            for (int pos : b) {
                const int v = p.value_at(pos - 1);
                if (v <= lo || v > hi) return false;
            }
            lo = hi;
        }
        return true;
    }

    // Cutting at value level v refines the chain iff v is not already a
    // cumulative block size. Identical condition to generator v acting
    // within a single block, so available levels = admissible generators.
    bool level_available(int v) const {
        if (v < 1 || v > n_) return false;
        int s = 0;
        for (const auto& b : blocks_) {
            s += static_cast<int>(b.size());
            if (s == v) return false;
            if (s > v) return true;
        }
        return false;
    }

    std::vector<int> available_levels() const {
        std::vector<int> out;
        auto it = blocks_.begin();
        int upto = static_cast<int>(it->size());
        for (int v = 1; v <= n_; ++v) {
            while (upto < v) {
                ++it;
                upto += static_cast<int>(it->size());
            }
            if (upto != v) out.push_back(v);
        }
        return out;
    }

    bool operator==(const FaceChain& o) const {
        return n_ == o.n_ && blocks_ == o.blocks_;
    }

    std::string to_json() const {
        std::string s = "[";
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            if (j) s += ',';
            s += '[';
            for (std::size_t t = 0; t < blocks_[j].size(); ++t) {
                if (t) s += ',';
                s += std::to_string(blocks_[j][t]);
            }
            s += ']';
        }
        s += ']';
        return s;
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

// Neighbors of p inside the face: exactly the generators whose value level
// does not sit on a block boundary. Count equals the face dimension.
inline std::vector<std::pair<int, Permutation>> face_neighbors(const FaceChain& F,
                                                               const Permutation& p) {
    if (!F.contains(p)) throw std::invalid_argument("face_neighbors: vertex outside face");
    std::vector<std::pair<int, Permutation>> out;
    for (int v : F.available_levels()) out.emplace_back(v, apply_generator(p, v));
    return out;
}

// Child chain after cutting the block whose value range straddles v: the
// positions of that block holding values <= v split off as a new block in
// front. Drops the dimension by exactly 1 and keeps p inside.
inline FaceChain refine(const FaceChain& F, const Permutation& p, int v) {
    if (!F.contains(p)) throw std::invalid_argument("refine: vertex outside face");
    if (!F.level_available(v)) throw std::invalid_argument("refine: level unavailable");
    std::vector<std::vector<int>> child;
    child.reserve(F.blocks().size() + 1);
    int lo = 0;
    for (const auto& b : F.blocks()) {
        const int hi = lo + static_cast<int>(b.size());
        if (lo < v && v < hi) {
            std::vector<int> low, high;
            for (int pos : b)
                (p.value_at(pos - 1) <= v ? low : high).push_back(pos);
            child.push_back(std::move(low));
            child.push_back(std::move(high));
        } else {
            child.push_back(b);
        }
        lo = hi;
    }
    return FaceChain(F.n(), std::move(child));
}

namespace detail {

// The refine-child of F at level v is determined by which positions hold the
// values (c_{j-1}, v]; that position set is the grouping key.
inline std::vector<int> split_key(const FaceChain& F, const Permutation& p, int v) {
    int lo = 0;
    for (const auto& b : F.blocks()) {
        const int hi = lo + static_cast<int>(b.size());
        if (lo < v && v < hi) {
            std::vector<int> key;
            for (int pos : b)
                if (p.value_at(pos - 1) <= v) key.push_back(pos);
            return key;
        }
        lo = hi;
    }
    throw std::logic_error("split_key: level not inside any block");
}

inline void project_rec(const FaceChain& F, const std::vector<Permutation>& X,
                        std::map<Permutation, FaceChain>& out) {
    if (X.size() == 1) {
        out.emplace(X.front(), F);
        return;
    }
    for (int v : F.available_levels()) {
        std::map<std::vector<int>, std::vector<Permutation>> groups;
        for (const auto& x : X) groups[split_key(F, x, v)].push_back(x);
        if (groups.size() < 2) continue;
        for (auto& [key, grp] : groups) {
            (void)key;
            project_rec(refine(F, grp.front(), v), grp, out);
        }
        return;
    }
    throw std::invalid_argument("project: duplicate vertices in X");
}

}  // namespace detail

// Sends each x in X to a face containing it such that the faces are pairwise
// vertex-disjoint and dim(face(x)) >= dim(F) - (|X|-1). Deterministic: always
// cuts at the smallest level that separates the set, then recurses per child.
inline std::map<Permutation, FaceChain> project(const FaceChain& F,
                                                const std::vector<Permutation>& X) {
    if (X.empty()) throw std::invalid_argument("project: empty vertex set");
    for (const auto& x : X)
        if (!F.contains(x)) throw std::invalid_argument("project: vertex outside face");
    std::map<Permutation, FaceChain> out;
    detail::project_rec(F, X, out);
    if (out.size() != X.size())
        throw std::invalid_argument("project: duplicate vertices in X");
    return out;
}

// Two faces share a vertex iff all their prefix position sets are pairwise
// nested. Any incomparable pair of prefixes forces pi to map both onto value
// prefixes, impossible unless one contains the other.
inline bool faces_disjoint(const FaceChain& A, const FaceChain& B) {
    if (A.n() != B.n()) throw std::invalid_argument("faces_disjoint: dimension mismatch");
    auto prefixes = [](const FaceChain& F) {
        std::vector<std::uint32_t> out;
        std::uint32_t m = 0;
        const auto& bl = F.blocks();
        for (std::size_t j = 0; j + 1 < bl.size(); ++j) {
            for (int pos : bl[j]) m |= std::uint32_t{1} << pos;
            out.push_back(m);
        }
        return out;
    };
    const auto pa = prefixes(A);
    const auto pb = prefixes(B);
    for (auto a : pa)
        for (auto b : pb) {
            const auto c = a & b;
            if (c != a && c != b) return true;
        }
    return false;
}

// All member permutations, block by block; intended for small faces/tests.
inline std::vector<Permutation> face_members(const FaceChain& F) {
    std::vector<int> word(static_cast<std::size_t>(F.n()) + 1, 0);
    std::vector<Permutation> out;
    out.reserve(F.member_count());

    const auto& blocks = F.blocks();
    std::vector<std::vector<int>> arrangement(blocks.size());
    int lo = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        arrangement[j].resize(blocks[j].size());
        for (std::size_t t = 0; t < blocks[j].size(); ++t)
            arrangement[j][t] = lo + static_cast<int>(t) + 1;
        lo += static_cast<int>(blocks[j].size());
    }

    auto emit = [&]() {
        for (std::size_t j = 0; j < blocks.size(); ++j)
            for (std::size_t t = 0; t < blocks[j].size(); ++t)
                word[static_cast<std::size_t>(blocks[j][t] - 1)] = arrangement[j][t];
        out.emplace_back(word);
    };

    // Odometer over per-block value arrangements, lexicographic per block.
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == blocks.size()) {
            emit();
            return;
        }
        auto& arr = arrangement[j];
        std::sort(arr.begin(), arr.end());
        do {
            rec(j + 1);
        } while (std::next_permutation(arr.begin(), arr.end()));
    };
    rec(0);
    return out;
}

}  // namespace permuperc
