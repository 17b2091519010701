#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "permuperc/spectral.hpp"

using namespace permuperc;

TEST_CASE("jacobi on small known matrices") {
    const auto ev2 = jacobi_eigenvalues({{2, 1}, {1, 2}});
    REQUIRE(ev2.size() == 2);
    CHECK(ev2[0] == Catch::Approx(1.0).margin(1e-12));
    CHECK(ev2[1] == Catch::Approx(3.0).margin(1e-12));

    // Laplacian of the 3-path: spectrum {0, 1, 3}.
    const auto ev3 = jacobi_eigenvalues({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
    CHECK(ev3[0] == Catch::Approx(0.0).margin(1e-12));
    CHECK(ev3[1] == Catch::Approx(1.0).margin(1e-12));
    CHECK(ev3[2] == Catch::Approx(3.0).margin(1e-12));

    CHECK_THROWS(jacobi_eigenvalues({{1, 2, 3}, {4, 5, 6}}));
}

TEST_CASE("hexagon laplacian spectrum") {
    // 2 - 2cos(2 pi k / 6) with multiplicities: {0, 1, 1, 3, 3, 4}.
    std::vector<std::vector<double>> L(6, std::vector<double>(6, 0.0));
    for (int i = 0; i < 6; ++i) {
        L[i][i] = 2.0;
        L[i][(i + 1) % 6] = L[(i + 1) % 6][i] = -1.0;
    }
    const auto ev = jacobi_eigenvalues(L);
    const double expect[6] = {0, 1, 1, 3, 3, 4};
    for (int i = 0; i < 6; ++i) REQUIRE(ev[i] == Catch::Approx(expect[i]).margin(1e-10));
}

TEST_CASE("algebraic connectivity matches the closed form") {
    CHECK_THROWS(laplacian_lambda1(5));
    for (int n = 1; n <= 4; ++n) {
        const double numeric = laplacian_lambda1(n);
        const double formula = lambda1_closed_form(n);
        REQUIRE(std::fabs(numeric - formula) <= 1e-9);
    }
    CHECK(lambda1_closed_form(1) == Catch::Approx(2.0).margin(1e-15));
    CHECK(lambda1_closed_form(2) == Catch::Approx(1.0).margin(1e-15));
}
