#pragma once

#include <span>
#include <vector>

#include "powermin/configuration.hpp"
#include "powermin/potential.hpp"

namespace powermin {

/// E_n split into its attractive (sum r^gamma/gamma) and repulsive
/// (-sum r^alpha/alpha) parts, both over ordered pairs i != j.
struct EnergyBreakdown {
    double total = 0.0;
    double attractive_part = 0.0;
    double repulsive_part = 0.0;
};

/// E_n = sum_{i != j} w(|x_i - x_j|). Self-interaction is always excluded.
/// Throws CoincidentPoints for coincident points under a singular kernel.
EnergyBreakdown eval_energy(const Potential& p, const Configuration& c);

/// E[mu] = E_n / (2 n^2) for the empirical measure of c.
double eval_energy_continuum(const Potential& p, const Configuration& c);

/**
 * Gradient of E_n, row-major like Configuration::coords():
 *
 *     grad_k = 2 sum_{j != k} (r^(gamma-2) - r^(alpha-2)) (x_k - x_j),  r = |x_k - x_j|.
 *
 * A coincident pair contributes nothing for alpha > 0 and throws
 * CoincidentPoints for singular kernels.
 */
std::vector<double> eval_gradient(const Potential& p, const Configuration& c);

/// Change E_n(x + step) - E_n(x), evaluated pair by pair from the relative
/// change of each distance so that it stays accurate when the change is far
/// below the rounding level of E_n itself. Throws CoincidentPoints if the
/// displaced configuration collides under a singular kernel.
double energy_change(const Potential& p, const Configuration& c, std::span<const double> step);

} // namespace powermin
