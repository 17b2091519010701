#pragma once

// One-line words of S_{n+1} together with the machinery needed to treat the
// permutahedron implicitly: adjacent-transposition neighbors, lexicographic
// (Lehmer) ranking, canonical edge ids, and inversion-set coordinates.
//
// Conventions used throughout:
//   * a permutation of [n+1] is stored as its word w, where w[j] is the value
//     written at position j (positions 0-based internally, values 1..n+1)
//   * generator i (1 <= i <= n) acts by swapping the values i and i+1, i.e.
//     it swaps the two positions currently holding i and i+1
//   * the host graph Perm(n) has (n+1)! vertices and degree n

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permuperc {

// Largest n for which vertex ranks and edge ids fit comfortably in 64 bits:
// edge ids are rank*n + (i-1) < n*(n+1)!, which stays below 2^64 up to n=18,
// and 20! itself is the last factorial representable. Enumeration-based code
// paths cap out far earlier; this bound only guards the arithmetic.
inline constexpr int max_rankable_n = 18;

inline constexpr std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int j = 2; j <= k; ++j) f *= static_cast<std::uint64_t>(j);
    return f;
}

inline std::uint64_t host_vertex_count(int n) { return factorial(n + 1); }
inline std::uint64_t host_edge_count(int n) {
    return factorial(n + 1) / 2 * static_cast<std::uint64_t>(n);
}

class Permutation {
public:
    explicit Permutation(std::vector<int> word) {
        const auto len = word.size();
        if (len < 2 || len > 20)
            throw std::invalid_argument("permutation word length must be in [2,20]");
        std::vector<bool> seen(len, false);
        word_.reserve(len);
        for (int v : word) {
            if (v < 1 || v > static_cast<int>(len) || seen[v - 1])
                throw std::invalid_argument("word is not a permutation of 1..n+1");
            seen[v - 1] = true;
            word_.push_back(static_cast<std::uint8_t>(v));
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(n + 1);
        for (int j = 0; j <= n; ++j) w[j] = j + 1;
        return Permutation(std::move(w));
    }

    // Dimension of the ambient permutahedron; the word has n+1 letters.
    int n() const { return static_cast<int>(word_.size()) - 1; }
    int size() const { return static_cast<int>(word_.size()); }

    // Value at 0-based position j.
    int value_at(int j) const { return word_[static_cast<std::size_t>(j)]; }

    // 0-based position holding value v. O(n).
    int position_of(int v) const {
        for (std::size_t j = 0; j < word_.size(); ++j)
            if (word_[j] == v) return static_cast<int>(j);
        throw std::out_of_range("value not present");
    }

    const std::vector<std::uint8_t>& word() const { return word_; }

    std::vector<int> word_as_ints() const {
        return std::vector<int>(word_.begin(), word_.end());
    }

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator!=(const Permutation& o) const { return word_ != o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t j = 0; j < word_.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(int(word_[j]));
        }
        s += ']';
        return s;
    }

private:
    std::vector<std::uint8_t> word_;
};

// tau_i applied on the left: exchanges the values i and i+1 wherever they sit.
inline Permutation apply_generator(const Permutation& p, int i) {
    if (i < 1 || i > p.n()) throw std::out_of_range("generator index");
    std::vector<int> w = p.word_as_ints();
    int a = -1, b = -1;
    for (int j = 0; j < p.size(); ++j) {
        if (w[j] == i) a = j;
        else if (w[j] == i + 1) b = j;
    }
    std::swap(w[a], w[b]);
    return Permutation(std::move(w));
}

// All n host neighbors as (generator index, neighbor) pairs, i ascending.
inline std::vector<std::pair<int, Permutation>> neighbors(const Permutation& p) {
    std::vector<std::pair<int, Permutation>> out;
    out.reserve(static_cast<std::size_t>(p.n()));
    for (int i = 1; i <= p.n(); ++i) out.emplace_back(i, apply_generator(p, i));
    return out;
}

// Lexicographic (Lehmer) rank among all words of the same length. O(n^2).
inline std::uint64_t rank_of(const Permutation& p) {
    const int len = p.size();
    std::uint64_t r = 0;
    for (int j = 0; j < len - 1; ++j) {
        int smaller = 0;
        for (int k = j + 1; k < len; ++k)
            if (p.value_at(k) < p.value_at(j)) ++smaller;
        r += static_cast<std::uint64_t>(smaller) * factorial(len - 1 - j);
    }
    return r;
}

inline Permutation unrank(int n, std::uint64_t r) {
    if (n < 1 || n > max_rankable_n + 1) throw std::out_of_range("unrank: n");
    const int len = n + 1;
    if (r >= factorial(len)) throw std::out_of_range("unrank: rank");
    std::vector<int> pool(len);
    for (int j = 0; j < len; ++j) pool[j] = j + 1;
    std::vector<int> w;
    w.reserve(len);
    for (int j = len - 1; j >= 0; --j) {
        const std::uint64_t f = factorial(j);
        const auto idx = static_cast<std::size_t>(r / f);
        r %= f;
        w.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(w));
}

// Rank of tau_i p given rank(p), without materializing either word.
// If i sits left of i+1 the swap raises the rank by (n - pos(i))!, else it
// lowers it by (n - pos(i+1))!; both positions 0-based.
inline std::uint64_t neighbor_rank(const Permutation& p, int i) {
    const int n = p.n();
    const int a = p.position_of(i);
    const int b = p.position_of(i + 1);
    const std::uint64_t r = rank_of(p);
    return a < b ? r + factorial(n - a) : r - factorial(n - b);
}

// Canonical id of the host edge {p, tau_i p}: the rank of the endpoint where
// i precedes i+1, scaled by n, plus (i-1). Unique and < n*(n+1)!.
inline std::uint64_t edge_id(const Permutation& p, int i) {
    const int n = p.n();
    const int a = p.position_of(i);
    const int b = p.position_of(i + 1);
    if (a < b) return rank_of(p) * static_cast<std::uint64_t>(n) + (i - 1);
    return (rank_of(p) - factorial(n - b)) * static_cast<std::uint64_t>(n) + (i - 1);
}

inline std::uint64_t edge_id_from_rank(std::uint64_t canonical_rank, int n, int i) {
    return canonical_rank * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(i - 1);
}

// Streams every host edge exactly once in lexicographic order of the smaller
// endpoint. Visits words with std::next_permutation and keeps a running rank,
// so the whole walk costs O(n) amortized per vertex and no ranking calls.
// f receives (rank of canonical endpoint, rank of other endpoint, edge id).
template <typename F>
void for_each_host_edge(int n, F&& f) {
    const int len = n + 1;
    std::vector<int> w(len);
    for (int j = 0; j < len; ++j) w[j] = j + 1;
    std::vector<int> pos(len + 1);
    std::uint64_t u = 0;
    do {
        for (int j = 0; j < len; ++j) pos[w[j]] = j;
        for (int i = 1; i <= n; ++i) {
            const int a = pos[i];
            if (a < pos[i + 1])
                f(u, u + factorial(n - a), u * static_cast<std::uint64_t>(n) + (i - 1));
        }
        ++u;
    } while (std::next_permutation(w.begin(), w.end()));
}

// Neighbor ranks of the vertex with rank u, generator index ascending.
inline std::vector<std::uint64_t> neighbor_ranks(int n, std::uint64_t u) {
    const Permutation p = unrank(n, u);
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int a = p.position_of(i);
        const int b = p.position_of(i + 1);
        out.push_back(a < b ? u + factorial(n - a) : u - factorial(n - b));
    }
    return out;
}

// Inversion set in position-pair coordinates: bit (a,b), a<b (1-based, lex
// ordered), is set when the values at positions a and b are out of order.
// Hamming distance between inversion sets equals graph distance in Perm(n),
// which is the Kendall tau distance between the words.
class InversionSet {
public:
    InversionSet(int n, std::vector<std::uint64_t> bits)
        : n_(n), bits_(std::move(bits)) {
        if (bits_.size() != word_count(n_))
            throw std::invalid_argument("inversion set: wrong bit width");
    }

    explicit InversionSet(const Permutation& p) : n_(p.n()) {
        bits_.assign(word_count(n_), 0);
        int idx = 0;
        for (int a = 0; a < p.size(); ++a)
            for (int b = a + 1; b < p.size(); ++b, ++idx)
                if (p.value_at(a) > p.value_at(b))
                    bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }

    int n() const { return n_; }
    int bit_count() const { return n_ * (n_ + 1) / 2; }

    // Lex index of the (a,b) pair, 1 <= a < b <= n+1.
    static int pair_index(int n, int a, int b) {
        if (!(1 <= a && a < b && b <= n + 1)) throw std::out_of_range("pair");
        return (a - 1) * (2 * (n + 1) - a) / 2 + (b - a - 1);
    }

    bool contains(int a, int b) const {
        const int idx = pair_index(n_, a, b);
        return (bits_[idx >> 6] >> (idx & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : bits_) c += std::popcount(w);
        return c;
    }

    int hamming(const InversionSet& o) const {
        if (o.n_ != n_) throw std::invalid_argument("dimension mismatch");
        int c = 0;
        for (std::size_t j = 0; j < bits_.size(); ++j)
            c += std::popcount(bits_[j] ^ o.bits_[j]);
        return c;
    }

    // Hex encoding, most significant nibble first; nibble 0 covers pairs 0-3.
    std::string to_hex() const {
        const int nibbles = (bit_count() + 3) / 4;
        std::string s(static_cast<std::size_t>(nibbles), '0');
        for (int k = 0; k < nibbles; ++k) {
            const int nib = static_cast<int>((bits_[k >> 4] >> (4 * (k & 15))) & 0xF);
            s[static_cast<std::size_t>(nibbles - 1 - k)] = "0123456789abcdef"[nib];
        }
        return s;
    }

    static InversionSet from_hex(int n, const std::string& hex) {
        const int nbits = n * (n + 1) / 2;
        const int nibbles = (nbits + 3) / 4;
        if (static_cast<int>(hex.size()) != nibbles)
            throw std::invalid_argument("inversion hex: wrong length");
        std::vector<std::uint64_t> bits(word_count(n), 0);
        for (int k = 0; k < nibbles; ++k) {
            const char c = hex[static_cast<std::size_t>(nibbles - 1 - k)];
            int nib;
            if (c >= '0' && c <= '9') nib = c - '0';
            else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
            else throw std::invalid_argument("inversion hex: bad digit");
            bits[k >> 4] |= static_cast<std::uint64_t>(nib) << (4 * (k & 15));
        }
        if (nbits & 63) {
            const std::uint64_t mask = (std::uint64_t{1} << (nbits & 63)) - 1;
            if (bits.back() & ~mask)
                throw std::invalid_argument("inversion hex: stray high bits");
        }
        return InversionSet(n, std::move(bits));
    }

    const std::vector<std::uint64_t>& raw() const { return bits_; }

    bool operator==(const InversionSet& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }

private:
    static std::size_t word_count(int n) {
        return static_cast<std::size_t>(n * (n + 1) / 2 + 63) / 64;
    }
    int n_;
    std::vector<std::uint64_t> bits_;
};

// Number of discordant pairs between two words; equals graph distance.
inline int kendall_distance(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n()) throw std::invalid_argument("dimension mismatch");
    int d = 0;
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b) {
            const bool pi = p.value_at(a) > p.value_at(b);
            const bool qi = q.value_at(a) > q.value_at(b);
            d += (pi != qi);
        }
    return d;
}

}  // namespace permuperc
