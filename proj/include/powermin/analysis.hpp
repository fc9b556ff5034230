#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "powermin/configuration.hpp"
#include "powermin/potential.hpp"

namespace powermin {

/// Upper bound on the diameter of any configuration with negative energy
/// when 0 < alpha < gamma: (n^2 gamma / alpha)^(1/(gamma - alpha)).
/// Throws WrongPotentialClass outside that class and std::invalid_argument for n < 2.
double bound_diameter_case1(std::size_t n, const Potential& p);

/**
 * For alpha < gamma < 0, the unique a_n in (0, 1) with w(a_n) = C n^2,
 * C = 1/alpha - 1/gamma. Every neighbor gap of a 1D minimizer is at least a_n.
 *
 * Bisection on [1e-16, 1] to relative width 1e-12. Throws WrongPotentialClass
 * outside the class and BracketFailure if the level is not bracketed.
 */
double solve_min_gap(std::size_t n, const Potential& p);

/// (n - 1) a_n, a lower bound on the diameter of a 1D minimizer for alpha < gamma < 0.
double spreading_lower_bound(std::size_t n, const Potential& p);

/// Minimizer for (gamma, alpha) = (2, 1) in 1D: x_k = (2k - n - 1) / n, k = 1..n.
Configuration quadratic_newtonian_minimizer(std::size_t n);

/// W1 distance between the empirical measure of a 1D configuration and the
/// uniform density on [-half_width, half_width], integrated exactly cell by
/// cell over the quantile functions. Throws std::invalid_argument unless dim == 1.
double wasserstein1_to_uniform(const Configuration& c, double half_width = 1.0);

struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double r_squared = 0.0;
    std::size_t sample_count = 0;
};

/// Least-squares line through (log n, log value). Needs at least two samples
/// with distinct n and positive values (std::invalid_argument otherwise).
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> samples);

} // namespace powermin
