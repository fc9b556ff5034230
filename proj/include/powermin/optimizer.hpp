#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "powermin/configuration.hpp"
#include "powermin/potential.hpp"

namespace powermin {

struct OptimizerOptions {
    double tol_grad = 1e-9;        ///< stop once the gradient infinity-norm drops below this
    std::size_t max_iter = 50000;
    double armijo_c = 1e-4;
    double backtrack_factor = 0.5;
    double initial_step = 1.0;
    double gap_guard = 0.5;        ///< a step shrinks no pair distance by more than this fraction
    std::size_t history = 8;       ///< L-BFGS memory; 0 gives steepest descent with Barzilai-Borwein steps

    /// Throws std::invalid_argument if a field is outside its range.
    void validate() const;
};

enum class InitStrategy { UniformBox, PerturbedGrid };

std::string_view to_string(InitStrategy s);
InitStrategy parse_init_strategy(std::string_view name);

struct GlobalOptions {
    std::size_t restarts = 16;
    std::uint64_t seed = 42;
    InitStrategy init_strategy = InitStrategy::PerturbedGrid;
    OptimizerOptions optimizer{};
    /// Worker threads for restarts; 0 means POWERMIN_THREADS or the hardware count.
    std::size_t threads = 0;

    void validate() const;
};

enum class Termination {
    Converged,
    MaxIterExceeded,
    LineSearchStalled, ///< no step passes Armijo at the rounding floor
};

struct MinimizeResult {
    Configuration config = Configuration::origin(1, 1); ///< canonicalized
    double energy = 0.0;
    double grad_inf_norm = 0.0;
    std::size_t iterations = 0;
    std::size_t restarts_used = 0;
    bool converged = false;
    Termination termination = Termination::MaxIterExceeded;
};

/// Per-iteration record of a local run; energies are accumulated from the
/// accurate per-step energy changes.
struct DescentTrace {
    std::vector<double> energy;
    std::vector<double> min_gap;
    std::vector<double> grad_inf_norm;
};

/// Seeded starting configuration. UniformBox draws i.i.d. points in [-L, L]^dim
/// (L from the case-1 diameter bound when 0 < alpha < gamma, else n);
/// PerturbedGrid jitters a unit lattice by +-0.25 per coordinate, so min_gap >= 0.5.
Configuration init_configuration(const Potential& p, std::size_t n, std::size_t dim,
                                 std::uint64_t seed, InitStrategy strategy);

/**
 * Descent with Armijo backtracking on E_n.
 *
 * The search direction comes from a limited-memory BFGS model of the last
 * `history` steps (steepest descent when the memory is empty or the model
 * fails to give a descent direction). Every step must satisfy the Armijo
 * condition, checked on the accurate energy change, so the accepted energies
 * never increase. For kernels with a singular gradient at 0 (alpha < 1) a
 * step never shrinks a pair distance by more than gap_guard times its current
 * value, so no collision can be crossed. Throws CoincidentPoints if `start` has coincident points under a
 * singular kernel.
 */
MinimizeResult local_minimize(const Potential& p, const Configuration& start,
                              const OptimizerOptions& opts, DescentTrace* trace = nullptr);

/// Seed of restart `index`, a fixed mix of the base seed and the index.
std::uint64_t restart_seed(std::uint64_t base, std::size_t index);

/**
 * Multi-start minimization: `restarts` local runs from init_configuration with
 * seeds restart_seed(seed, i). Converged runs win over unconverged ones; among
 * those, lowest energy wins and near-ties (1e-12 relative) go to the lowest
 * index, so the outcome does not depend on execution order.
 */
MinimizeResult global_minimize(const Potential& p, std::size_t n, std::size_t dim,
                               const GlobalOptions& g);

/// Every restart's result in index order (used by uniqueness checks).
std::vector<MinimizeResult> minimize_restarts(const Potential& p, std::size_t n, std::size_t dim,
                                              const GlobalOptions& g);

} // namespace powermin
