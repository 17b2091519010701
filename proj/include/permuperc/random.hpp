#pragma once

// Deterministic randomness primitives.
//
// Percolation states are never stored: whether an edge is open is a pure
// function of (seed, edge id), evaluated through a splitmix64-style finalizer.
// That keeps memory flat in the graph size and makes configurations with the
// same seed comparable across p (monotone coupling: raising p can only open
// more edges, because openness is u(seed, e) < p for a fixed uniform u).

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace permuperc {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t stream_gamma = 0xD1B54A32D192ED03ULL;

// splitmix64 finalizer; bijective on 64-bit words.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z += golden_gamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Uniform double in [0,1) with 53-bit resolution, as a pure function of
// (seed, edge). Distinct edges decorrelate through the odd stream constant.
inline double edge_uniform(std::uint64_t seed, std::uint64_t edge) {
    const std::uint64_t z = mix64(seed ^ (edge * stream_gamma));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// The percolation oracle itself. u < p, so p = 0 closes everything and
// p = 1 opens everything (u never reaches 1).
inline bool edge_open(std::uint64_t seed, std::uint64_t edge, double p) {
    return edge_uniform(seed, edge) < p;
}

// Derived seed for the i-th independent replica of a randomized procedure.
inline constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t i) {
    return mix64(seed ^ (i * stream_gamma));
}

// Counter-based engine (splitmix64). Every output is the finalizer applied to
// a fresh counter value, so a freshly constructed engine is unbiased from its
// very first word. That property matters here: Monte Carlo drivers construct
// one engine per replica, and mt19937_64's single-word seeding leaves its
// early outputs measurably non-uniform across families of related seeds
// (several standard deviations at 10^4 replicas), which is enough to corrupt
// survival estimates. Satisfies uniform_random_bit_generator.
class SplitMix64 {
  public:
    using result_type = std::uint64_t;
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    constexpr result_type operator()() {
        const result_type out = mix64(state_);  // mix64 folds in the increment
        state_ += golden_gamma;
        return out;
    }

  private:
    std::uint64_t state_;
};

// Binomial sampling. std::binomial_distribution and
// std::uniform_real_distribution are implementation-defined, so results
// would not reproduce across standard libraries; everything below consumes
// raw engine words through canonical_unit instead.

// Uniform in [0,1) from one 64-bit engine word, 53-bit resolution.
template <typename Rng>
double canonical_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inversion by summation, fine while n*p is small.
template <typename Rng>
long long binomial_small(Rng& rng, long long n, double p) {
    if (p <= 0.0 || n <= 0) return 0;
    if (p >= 1.0) return n;
    const double q = 1.0 - p;
    double per = std::pow(q, static_cast<double>(n));
    // Guard against pow underflow: fall back to counting trials.
    if (per <= 0.0) {
        long long c = 0;
        for (long long j = 0; j < n; ++j) c += (canonical_unit(rng) < p);
        return c;
    }
    double u = canonical_unit(rng);
    double cum = per;
    long long k = 0;
    while (u > cum && k < n) {
        ++k;
        per *= (static_cast<double>(n - k + 1) / static_cast<double>(k)) * (p / q);
        cum += per;
    }
    return k;
}

// BTRS rejection sampler (transformed rejection with squeeze), valid for
// n*min(p,1-p) >= 10. Constant expected time regardless of n.
template <typename Rng>
long long binomial_btrs(Rng& rng, long long n, double p) {
    const bool flip = p > 0.5;
    const double pp = flip ? 1.0 - p : p;
    const double q = 1.0 - pp;
    const double np = static_cast<double>(n) * pp;
    const double spq = std::sqrt(np * q);
    const double b = 1.15 + 2.53 * spq;
    const double a = -0.0873 + 0.0248 * b + 0.01 * pp;
    const double c = np + 0.5;
    const double v_r = 0.92 - 4.2 / b;
    const double r = pp / q;
    const double alpha = (2.83 + 5.1 / b) * spq;
    const double m = std::floor((static_cast<double>(n) + 1) * pp);

    auto lgamma1p = [](double x) { return std::lgamma(x + 1.0); };
    long long k;
    for (;;) {
        double u = canonical_unit(rng) - 0.5;
        double v = canonical_unit(rng);
        const double us = 0.5 - std::fabs(u);
        const double kd = std::floor((2.0 * a / us + b) * u + c);
        if (kd < 0.0 || kd > static_cast<double>(n)) continue;
        if (us >= 0.07 && v <= v_r) {
            k = static_cast<long long>(kd);
            break;
        }
        // Accept iff the hat-scaled uniform falls under f(k)/f(mode).
        v = std::log(v * alpha / (a / (us * us) + b));
        const double t = lgamma1p(m) + lgamma1p(static_cast<double>(n) - m)
                       - lgamma1p(kd) - lgamma1p(static_cast<double>(n) - kd)
                       + (kd - m) * std::log(r);
        if (v <= t) {
            k = static_cast<long long>(kd);
            break;
        }
    }
    return flip ? n - k : k;
}

// Dispatching sampler: exact inversion in the thin regime, BTRS otherwise.
template <typename Rng>
long long binomial(Rng& rng, long long n, double p) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    const double pmin = std::min(p, 1.0 - p);
    if (static_cast<double>(n) * pmin < 10.0 || n < 32)
        return binomial_small(rng, n, p);
    return binomial_btrs(rng, n, p);
}

}  // namespace permuperc
