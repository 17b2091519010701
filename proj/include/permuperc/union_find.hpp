#pragma once

// Disjoint-set forest over dense 64-bit indices, path halving + union by
// size. Sized for full host graphs up to the enumeration cap, so parents are
// stored flat.

#include <cstdint>
#include <numeric>
#include <vector>

namespace permuperc {

template <typename Index>
class BasicUnionFind {
public:
    explicit BasicUnionFind(std::uint64_t n)
        : parent_(n), size_(n, Index{1}), components_(n) {
        std::iota(parent_.begin(), parent_.end(), Index{0});
    }

    Index find(Index x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true when the edge merged two components.
    bool unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    bool connected(Index a, Index b) { return find(a) == find(b); }
    std::uint64_t component_size(Index x) { return size_[find(x)]; }
    std::uint64_t component_count() const { return components_; }
    std::uint64_t element_count() const { return parent_.size(); }

private:
    std::vector<Index> parent_;
    std::vector<Index> size_;
    std::uint64_t components_;
};

using UnionFind = BasicUnionFind<std::uint64_t>;
// 8 bytes per vertex; enough for every host the engine can enumerate.
using UnionFind32 = BasicUnionFind<std::uint32_t>;

}  // namespace permuperc
