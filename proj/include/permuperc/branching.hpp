#pragma once

// Branching-process ground truth: the survival fixed point gamma(c), a
// faithful Bin(n, p) Galton-Watson simulator, and the truncated binomial
// mean used to certify frontier growth of the truncated search.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "permuperc/random.hpp"

namespace permuperc {

// Unique root of gamma = 1 - exp(-c*gamma) in (0,1); 0 for c <= 1.
// Bisection: bracket is guaranteed and the flat slope near c -> 1+ cannot
// derail it the way a Newton step can.
inline double solve_gamma(double c) {
    if (c <= 0.0) throw std::invalid_argument("solve_gamma: c > 0 required");
    if (c <= 1.0) return 0.0;
    double lo = 1e-15, hi = 1.0;
    // f(gamma) = 1 - exp(-c*gamma) - gamma; f(lo) > 0, f(1) < 0.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = 1.0 - std::exp(-c * mid) - mid;
        (f > 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-13) break;
    }
    return 0.5 * (lo + hi);
}

struct GwConfig {
    long long n = 1;          // trials per birth
    double p = 0.0;           // per-trial probability; offspring mean c = n*p
    int max_generations = 1;
    std::uint64_t seed = 0;

    void validate() const {
        if (n < 1) throw std::invalid_argument("gw: n >= 1");
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gw: p in [0,1]");
        if (max_generations < 1) throw std::invalid_argument("gw: max_generations >= 1");
    }
};

struct GwOutcome {
    bool survived = false;             // nonempty at max_generations (or hit the node cap)
    long long total_size = 0;
    std::vector<long long> generation_sizes;  // [0] = 1
};

inline constexpr long long gw_node_cap = 10000000;

// Generation-by-generation simulation: Z_{t+1} ~ Bin(Z_t * n, p), which has
// exactly the distribution of summing Z_t independent Bin(n, p) broods.
// Runs that blow past the node cap count as survived.
inline GwOutcome simulate_gw(const GwConfig& cfg) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);
    GwOutcome out;
    long long z = 1;
    out.generation_sizes.push_back(z);
    out.total_size = z;
    for (int t = 0; t < cfg.max_generations && z > 0; ++t) {
        z = binomial(rng, z * cfg.n, cfg.p);
        out.generation_sizes.push_back(z);
        out.total_size += z;
        if (out.total_size >= gw_node_cap) {
            out.survived = true;
            return out;
        }
    }
    out.survived = z > 0;
    return out;
}

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long long trials = 0;
};

// Survival fraction of the Bin(n, c/n) process over independent trials.
inline McEstimate survival_probability_mc(long long n, double c, int max_generations,
                                          long long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("survival mc: trials >= 1");
    long long hits = 0;
    for (long long i = 0; i < trials; ++i) {
        GwConfig cfg{n, c / static_cast<double>(n), max_generations, split_seed(seed, static_cast<std::uint64_t>(i))};
        hits += simulate_gw(cfg).survived;
    }
    const double est = static_cast<double>(hits) / static_cast<double>(trials);
    return {est, std::sqrt(est * (1.0 - est) / static_cast<double>(trials)),
            trials};
}

// Monte Carlo E[min{Bin(m', p), K}].
inline McEstimate truncated_binomial_mean(long long m_prime, double p, long long K,
                                          long long trials, std::uint64_t seed) {
    if (m_prime < 1) throw std::invalid_argument("truncated mean: m' >= 1");
    if (K < 1) throw std::invalid_argument("truncated mean: K >= 1");
    if (trials < 1) throw std::invalid_argument("truncated mean: trials >= 1");
    SplitMix64 rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (long long i = 0; i < trials; ++i) {
        const auto y = static_cast<double>(std::min(binomial(rng, m_prime, p), K));
        sum += y;
        sumsq += y * y;
    }
    const double mean = sum / static_cast<double>(trials);
    const double var =
        std::max(0.0, sumsq / static_cast<double>(trials) - mean * mean);
    return {mean, std::sqrt(var / static_cast<double>(trials)), trials};
}

}  // namespace permuperc
