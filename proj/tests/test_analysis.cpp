#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "powermin/analysis.hpp"
#include "powermin/configuration.hpp"
#include "powermin/energy.hpp"
#include "powermin/errors.hpp"
#include "powermin/optimizer.hpp"

using namespace powermin;

namespace {

// Roots of w(a) = C n^2 for gamma = -0.5, alpha = -2.5, computed offline with
// 40-digit arithmetic by bisection on log a.
constexpr double kA10 = 0.089550305596853730804;
constexpr double kA64 = 0.020599801967397844949;
constexpr double kA128 = 0.011838215952770652605;
constexpr double kA1024 = 0.0022435288889509159018;

// Midpoint rule on the quantile difference, independent of the per-cell formula.
double w1_quadrature(std::vector<double> xs, double lo, double hi, int m = 400000) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (int k = 0; k < m; ++k) {
        const double u = (k + 0.5) / m;
        const auto idx = std::min(xs.size() - 1, static_cast<std::size_t>(u * n));
        sum += std::abs(xs[idx] - (lo + (hi - lo) * u));
    }
    return sum / m;
}

} // namespace

TEST_CASE("bound_diameter_case1") {
    CHECK(bound_diameter_case1(2, Potential(2.0, 1.0)) == doctest::Approx(8.0));
    CHECK(bound_diameter_case1(3, Potential(2.0, 1.0)) == doctest::Approx(18.0));
    CHECK(bound_diameter_case1(2, Potential(3.0, 1.0)) == doctest::Approx(std::sqrt(12.0)));
    CHECK_THROWS_AS(bound_diameter_case1(4, Potential(1.0, 0.0)), WrongPotentialClass);
    CHECK_THROWS_AS(bound_diameter_case1(4, Potential(-0.5, -2.5)), WrongPotentialClass);
    CHECK_THROWS_AS(bound_diameter_case1(1, Potential(2.0, 1.0)), std::invalid_argument);
}

TEST_CASE("solve_min_gap matches the high-precision roots") {
    const Potential p(-0.5, -2.5);
    CHECK(solve_min_gap(10, p) == doctest::Approx(kA10).epsilon(1e-11));
    CHECK(solve_min_gap(64, p) == doctest::Approx(kA64).epsilon(1e-11));
    CHECK(solve_min_gap(128, p) == doctest::Approx(kA128).epsilon(1e-11));
    CHECK(solve_min_gap(1024, p) == doctest::Approx(kA1024).epsilon(1e-11));

    // The defining equation written out for n = 10: -2 a^-0.5 + 0.4 a^-2.5 = 160.
    const double a = solve_min_gap(10, p);
    CHECK(-2.0 / std::sqrt(a) + 0.4 * std::pow(a, -2.5) == doctest::Approx(160.0).epsilon(1e-10));

    CHECK_THROWS_AS(solve_min_gap(10, Potential(2.0, 1.0)), WrongPotentialClass);
    CHECK_THROWS_AS(solve_min_gap(10, Potential(1.0, -1.0)), WrongPotentialClass);
}

TEST_CASE("solve_min_gap residual, bound and monotonicity") {
    for (auto [g, a] : {std::pair{-0.5, -2.5}, {-0.5, -1.5}, {-0.1, -4.0}, {-2.0, -3.0}}) {
        const Potential p(g, a);
        const double c = 1.0 / a - 1.0 / g;
        double previous = 1.0;
        for (std::size_t n = 2; n <= 4096; n *= 2) {
            const double an = solve_min_gap(n, p);
            const double level = c * static_cast<double>(n * n);
            CHECK(an > 0.0);
            CHECK(an < previous);
            CHECK(std::abs(eval_w(p, an) - level) / level < 1e-10);
            if (n >= 64) CHECK(an >= std::pow(-2.0 * a * c, 1.0 / a) * std::pow(static_cast<double>(n), 2.0 / a));
            previous = an;
        }
    }
}

TEST_CASE("spreading_lower_bound") {
    const Potential p(-0.5, -2.5);
    CHECK(spreading_lower_bound(2, p) == solve_min_gap(2, p));
    CHECK(spreading_lower_bound(64, p) == doctest::Approx(63.0 * kA64).epsilon(1e-11));

    // (n-1) a_n / n^(1+2/alpha) >= (63/64) (-2 alpha C)^(1/alpha) on n = 64..1024.
    const double floor = 63.0 / 64.0 * std::pow(8.0, -0.4);
    for (std::size_t n = 64; n <= 1024; n *= 2)
        CHECK(spreading_lower_bound(n, p) / std::pow(static_cast<double>(n), 0.2) >= floor);
}

TEST_CASE("quadratic_newtonian_minimizer") {
    auto xs = [](std::size_t n) {
        const auto c = quadratic_newtonian_minimizer(n);
        return std::vector<double>(c.coords().begin(), c.coords().end());
    };
    CHECK(xs(1) == std::vector<double>{0.0});
    CHECK(xs(2) == std::vector<double>{-0.5, 0.5});
    CHECK(xs(4) == std::vector<double>{-0.75, -0.25, 0.25, 0.75});

    const Potential p(2.0, 1.0);
    for (std::size_t n : {2, 3, 5, 8, 17, 64}) {
        const auto c = quadratic_newtonian_minimizer(n);
        CHECK(diameter(c) == doctest::Approx(2.0 * (n - 1.0) / n));
        for (double g : eval_gradient(p, c)) CHECK(std::abs(g) <= 1e-12 * n);
    }
}

TEST_CASE("wasserstein1_to_uniform") {
    CHECK(wasserstein1_to_uniform(Configuration::line({0.0})) == doctest::Approx(0.5));
    CHECK(wasserstein1_to_uniform(Configuration::line({-0.5, 0.5})) == doctest::Approx(0.25));
    for (std::size_t n : {1, 2, 5, 16, 100})
        CHECK(wasserstein1_to_uniform(quadratic_newtonian_minimizer(n)) == doctest::Approx(1.0 / (2.0 * n)).epsilon(1e-13));
    CHECK_THROWS_AS(wasserstein1_to_uniform(Configuration(2, {0, 0})), std::invalid_argument);
}

TEST_CASE("wasserstein1_to_uniform agrees with quadrature and is translation covariant") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> xs(1 + trial * 3);
        for (double& v : xs) v = u(rng);
        const double h = 0.5 + 0.25 * trial;
        const double exact = wasserstein1_to_uniform(Configuration::line(xs), h);
        CHECK(exact > 0.0);
        CHECK(exact == doctest::Approx(w1_quadrature(xs, -h, h)).epsilon(1e-6));

        // Shift points and interval together; compare against the shifted quadrature too.
        const double shift = 0.375;
        std::vector<double> moved = xs;
        for (double& v : moved) v += shift;
        CHECK(w1_quadrature(moved, -h + shift, h + shift) == doctest::Approx(exact).epsilon(1e-6));
        std::vector<double> back = moved;
        for (double& v : back) v -= shift;
        CHECK(std::abs(wasserstein1_to_uniform(Configuration::line(back), h) - exact) <= 1e-12);
    }
}

TEST_CASE("fit_power_law") {
    std::vector<std::pair<double, double>> s;
    for (double n : {8.0, 16.0, 32.0, 64.0}) s.emplace_back(n, 3.0 * std::pow(n, 0.2));
    auto f = fit_power_law(s);
    CHECK(f.exponent == doctest::Approx(0.2).epsilon(1e-10));
    CHECK(f.prefactor == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.sample_count == 4);

    s.clear();
    for (double n : {2.0, 5.0, 9.0}) s.emplace_back(n, 7.0);
    f = fit_power_law(s);
    CHECK(std::abs(f.exponent) < 1e-12);
    CHECK(f.prefactor == doctest::Approx(7.0));

    s.clear();
    for (double n : {1.0, 10.0, 100.0}) s.emplace_back(n, n);
    f = fit_power_law(s);
    CHECK(f.exponent == doctest::Approx(1.0));
    CHECK(f.prefactor == doctest::Approx(1.0));

    // Noisy data: r^2 strictly inside (0, 1).
    s = {{1.0, 1.0}, {2.0, 2.5}, {4.0, 3.5}, {8.0, 9.0}};
    f = fit_power_law(s);
    CHECK(f.r_squared > 0.0);
    CHECK(f.r_squared < 1.0);

    const std::vector<std::pair<double, double>> one{{4.0, 1.0}};
    CHECK_THROWS_AS(fit_power_law(one), std::invalid_argument);
    const std::vector<std::pair<double, double>> dup{{4.0, 1.0}, {4.0, 2.0}};
    CHECK_THROWS_AS(fit_power_law(dup), std::invalid_argument);
    const std::vector<std::pair<double, double>> neg{{4.0, 1.0}, {8.0, -2.0}};
    CHECK_THROWS_AS(fit_power_law(neg), std::invalid_argument);
    const std::vector<std::pair<double, double>> zero{{4.0, 1.0}, {8.0, 0.0}};
    CHECK_THROWS_AS(fit_power_law(zero), std::invalid_argument);
}

TEST_CASE("case-1 diameter bound dominates minimizer diameters") {
    GlobalOptions g;
    g.restarts = 4;
    for (auto [gamma, alpha] : {std::pair{2.0, 1.0}, {3.0, 1.5}}) {
        const Potential p(gamma, alpha);
        for (std::size_t n : {4, 8, 16}) {
            const auto r = global_minimize(p, n, 1, g);
            CHECK(r.converged);
            CHECK(diameter(r.config) <= bound_diameter_case1(n, p));
        }
    }
}
