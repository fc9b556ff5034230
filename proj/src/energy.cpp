#include "powermin/energy.hpp"

#include <stdexcept>

#include "powermin/errors.hpp"
#include "pair_kernel.hpp"

namespace powermin {

namespace {

double squared_distance(const double* a, const double* b, std::size_t dim) {
    double s = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

} // namespace

EnergyBreakdown eval_energy(const Potential& p, const Configuration& c) {
    const detail::PairKernel kernel(p.gamma(), p.alpha());
    const std::size_t n = c.size(), dim = c.dim();
    const double* x = c.coords().data();

    detail::CompensatedSum attractive, repulsive;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double sq = squared_distance(x + i * dim, x + j * dim, dim);
            if (sq == 0.0) {
                if (p.singular()) throw CoincidentPoints(i, j);
                continue; // w(0) = 0 for alpha > 0
            }
            const auto t = kernel.eval(sq);
            attractive.add(t.attractive);
            repulsive.add(-t.repulsive);
        }
    }
    EnergyBreakdown e;
    e.attractive_part = 2.0 * attractive.value();
    e.repulsive_part = 2.0 * repulsive.value();
    e.total = e.attractive_part + e.repulsive_part;
    return e;
}

double eval_energy_continuum(const Potential& p, const Configuration& c) {
    const double n = static_cast<double>(c.size());
    return eval_energy(p, c).total / (2.0 * n * n);
}

std::vector<double> eval_gradient(const Potential& p, const Configuration& c) {
    const detail::PairKernel kernel(p.gamma(), p.alpha());
    const std::size_t n = c.size(), dim = c.dim();
    const double* x = c.coords().data();
    std::vector<double> grad(n * dim, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double sq = squared_distance(x + i * dim, x + j * dim, dim);
            if (sq == 0.0) {
                if (p.singular()) throw CoincidentPoints(i, j);
                continue;
            }
            const double f = 2.0 * kernel.grad_factor(sq);
            for (std::size_t k = 0; k < dim; ++k) {
                const double v = f * (x[i * dim + k] - x[j * dim + k]);
                grad[i * dim + k] += v;
                grad[j * dim + k] -= v;
            }
        }
    }
    return grad;
}

double energy_change(const Potential& p, const Configuration& c, std::span<const double> step) {
    if (step.size() != c.coords().size())
        throw std::invalid_argument("step size does not match the configuration");
    const detail::PairKernel kernel(p.gamma(), p.alpha());
    const std::size_t n = c.size(), dim = c.dim();
    const double* x = c.coords().data();
    const double* s = step.data();

    detail::CompensatedSum change;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sq = 0.0, dsq = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = x[i * dim + k] - x[j * dim + k];
                const double delta = s[i * dim + k] - s[j * dim + k];
                sq += d * d;
                dsq += delta * (2.0 * d + delta);
            }
            const double new_sq = sq + dsq;
            if (sq == 0.0 || new_sq <= 0.0) {
                // Degenerate before or after the step: fall back to direct values.
                double after = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    const double d = (x[i * dim + k] + s[i * dim + k]) - (x[j * dim + k] + s[j * dim + k]);
                    after += d * d;
                }
                if (p.singular() && (sq == 0.0 || after == 0.0)) throw CoincidentPoints(i, j);
                const double w_before = sq == 0.0 ? 0.0 : kernel.eval(sq).attractive - kernel.eval(sq).repulsive;
                const double w_after = after == 0.0 ? 0.0 : kernel.eval(after).attractive - kernel.eval(after).repulsive;
                change.add(w_after - w_before);
                continue;
            }
            change.add(kernel.change(sq, dsq));
        }
    }
    return 2.0 * change.value();
}

} // namespace powermin
