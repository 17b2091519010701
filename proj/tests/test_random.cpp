#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "permuperc/random.hpp"

using namespace permuperc;

TEST_CASE("mixer reference vectors") {
    // First outputs of the splitmix64 stream seeded with 0.
    CHECK(mix64(0) == 0xE220A8397B1DCDAFULL);
    CHECK(mix64(1) == 0x910A2DEC89025CC1ULL);
    CHECK(mix64(2) == 0x975835DE1C9756CEULL);

    // Hand-evaluated: mix64(0) >> 11 = 7956156453446585, scaled by 2^-53.
    CHECK(edge_uniform(0, 0) == 7956156453446585.0 * 0x1.0p-53);
    CHECK(edge_uniform(0, 0) == Catch::Approx(0.8833108082136426).epsilon(1e-15));
}

TEST_CASE("edge uniforms are deterministic and in [0,1)") {
    for (std::uint64_t e = 0; e < 1000; ++e) {
        const double u = edge_uniform(12345, e);
        REQUIRE(u == edge_uniform(12345, e));
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("edge uniform empirical mean") {
    double sum = 0.0;
    const int trials = 1000000;
    for (int e = 0; e < trials; ++e) sum += edge_uniform(99, static_cast<std::uint64_t>(e));
    CHECK(sum / trials == Catch::Approx(0.5).margin(0.002));
}

TEST_CASE("edge_open endpoints and frequency") {
    for (std::uint64_t e = 0; e < 200; ++e) {
        CHECK(!edge_open(7, e, 0.0));
        CHECK(edge_open(7, e, 1.0));
    }
    int open = 0;
    const int trials = 100000;
    for (int e = 0; e < trials; ++e) open += edge_open(3, static_cast<std::uint64_t>(e), 0.3);
    CHECK(static_cast<double>(open) / trials == Catch::Approx(0.3).margin(0.01));
}

TEST_CASE("monotone coupling in p") {
    for (std::uint64_t e = 0; e < 5000; ++e)
        for (double p : {0.1, 0.3, 0.5, 0.9})
            if (edge_open(42, e, p))
                for (double q : {0.5, 0.9, 1.0})
                    if (q >= p) REQUIRE(edge_open(42, e, q));
}

TEST_CASE("split seeds decorrelate replicas") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(split_seed(77, i));
    CHECK(seen.size() == 10000);
    CHECK(split_seed(77, 3) != split_seed(78, 3));
}

TEST_CASE("counter engine emits the splitmix64 stream") {
    SplitMix64 rng(0);
    CHECK(rng() == 0xE220A8397B1DCDAFULL);  // same stream head as mix64(0)
    SplitMix64 again(123456789);
    for (std::uint64_t k = 0; k < 16; ++k)
        REQUIRE(again() == mix64(123456789 + k * golden_gamma));
    static_assert(SplitMix64::min() == 0);
    static_assert(SplitMix64::max() == ~std::uint64_t{0});
}

TEST_CASE("counter engine first outputs are unbiased across replica seeds") {
    // mt19937_64 fails this check: seeding one engine per replica from
    // split_seed(777, i) leaves P(first uniform < 0.0949) more than four
    // standard deviations below its target over 10^4 replicas. The counter
    // engine's first output is a full-strength hash, so the family statistic
    // must stay in a normal band.
    const double p0 = 0.0948645066;  // (5/7)^7
    const double se = std::sqrt(p0 * (1 - p0) / 10000.0);
    for (const std::uint64_t base : {777ULL, 0ULL, 42ULL}) {
        int cnt = 0;
        for (std::uint64_t i = 0; i < 10000; ++i) {
            SplitMix64 rng(split_seed(base, i));
            cnt += canonical_unit(rng) < p0;
        }
        REQUIRE(static_cast<double>(cnt) / 10000.0 ==
                Catch::Approx(p0).margin(4.0 * se));
    }
}

TEST_CASE("small binomial matches exact pmf") {
    std::mt19937_64 rng(2024);
    const int n = 5;
    const double p = 0.3;
    std::vector<int> counts(n + 1, 0);
    const int trials = 200000;
    for (int t = 0; t < trials; ++t) counts[binomial_small(rng, n, p)]++;

    // Exact pmf of Bin(5, 0.3).
    const double pmf[6] = {0.16807, 0.36015, 0.3087, 0.1323, 0.02835, 0.00243};
    for (int k = 0; k <= n; ++k) {
        const double freq = static_cast<double>(counts[k]) / trials;
        const double se = std::sqrt(pmf[k] * (1 - pmf[k]) / trials);
        REQUIRE(freq == Catch::Approx(pmf[k]).margin(4 * se + 1e-4));
    }
}

TEST_CASE("btrs agrees with exact moments at large n") {
    std::mt19937_64 rng(99);
    const long long n = 4000;
    const double p = 0.35;
    const int trials = 20000;
    double sum = 0.0, sumsq = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto k = binomial_btrs(rng, n, p);
        REQUIRE(k >= 0);
        REQUIRE(k <= n);
        sum += static_cast<double>(k);
        sumsq += static_cast<double>(k) * static_cast<double>(k);
    }
    const double mean = sum / trials;
    const double var = sumsq / trials - mean * mean;
    const double exact_mean = static_cast<double>(n) * p;        // 1400
    const double exact_var = exact_mean * (1 - p);               // 910
    const double se_mean = std::sqrt(exact_var / trials);
    CHECK(mean == Catch::Approx(exact_mean).margin(4 * se_mean));
    CHECK(var == Catch::Approx(exact_var).epsilon(0.05));
}

TEST_CASE("btrs matches inversion sampler distribution") {
    // Same distribution through both samplers: compare empirical CDFs where
    // both regimes are valid (n*p = 48).
    std::mt19937_64 r1(5), r2(5);
    const long long n = 160;
    const double p = 0.3;
    const int trials = 100000;
    std::vector<int> c1(n + 1, 0), c2(n + 1, 0);
    for (int t = 0; t < trials; ++t) {
        c1[binomial_small(r1, n, p)]++;
        c2[binomial_btrs(r2, n, p)]++;
    }
    double cdf1 = 0, cdf2 = 0, sup = 0;
    for (long long k = 0; k <= n; ++k) {
        cdf1 += static_cast<double>(c1[k]) / trials;
        cdf2 += static_cast<double>(c2[k]) / trials;
        sup = std::max(sup, std::fabs(cdf1 - cdf2));
    }
    // Two-sample Kolmogorov bound at alpha ~ 1e-3 is ~1.95*sqrt(2/trials).
    CHECK(sup < 1.95 * std::sqrt(2.0 / trials));
}

TEST_CASE("binomial dispatcher endpoints") {
    std::mt19937_64 rng(1);
    CHECK(binomial(rng, 10, 0.0) == 0);
    CHECK(binomial(rng, 10, 1.0) == 10);
    CHECK(binomial(rng, 0, 0.5) == 0);
    for (int t = 0; t < 1000; ++t) {
        const auto k = binomial(rng, 100000, 0.5);
        REQUIRE(k >= 0);
        REQUIRE(k <= 100000);
    }
}
