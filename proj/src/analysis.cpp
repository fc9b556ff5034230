#include "powermin/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "powermin/errors.hpp"

namespace powermin {

double bound_diameter_case1(std::size_t n, const Potential& p) {
    if (p.classify() != PotentialClass::BothPositive)
        throw WrongPotentialClass("diameter bound requires 0 < alpha < gamma");
    if (n < 2) throw std::invalid_argument("diameter bound requires n >= 2");
    const double nn = static_cast<double>(n);
    return std::pow(nn * nn * p.gamma() / p.alpha(), 1.0 / (p.gamma() - p.alpha()));
}

double solve_min_gap(std::size_t n, const Potential& p) {
    if (p.classify() != PotentialClass::BothNegative)
        throw WrongPotentialClass("a_n is defined for alpha < gamma < 0");
    if (n < 2) throw std::invalid_argument("a_n requires n >= 2");

    const double nn = static_cast<double>(n);
    const double level = (1.0 / p.alpha() - 1.0 / p.gamma()) * nn * nn;

    double lo = 1e-16, hi = 1.0;
    if (!(eval_w(p, hi) < level) || !(eval_w(p, lo) > level))
        throw BracketFailure("w(a) = C n^2 is not bracketed by [1e-16, 1]");

    // w decreases strictly on (0, 1).
    for (int iter = 0; iter < 200 && hi - lo > 1e-12 * lo; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (eval_w(p, mid) > level)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double spreading_lower_bound(std::size_t n, const Potential& p) {
    return static_cast<double>(n - 1) * solve_min_gap(n, p);
}

Configuration quadratic_newtonian_minimizer(std::size_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::vector<double> xs(n);
    const double nn = static_cast<double>(n);
    for (std::size_t k = 1; k <= n; ++k)
        xs[k - 1] = (2.0 * static_cast<double>(k) - nn - 1.0) / nn;
    return Configuration::line(std::move(xs));
}

namespace {

/// Integral of |y| over a cell of width h where y runs linearly from y0 to y1.
double abs_linear_integral(double y0, double y1, double h) {
    if ((y0 >= 0.0) == (y1 >= 0.0) || y0 == 0.0 || y1 == 0.0)
        return 0.5 * (std::abs(y0) + std::abs(y1)) * h;
    return 0.5 * (y0 * y0 + y1 * y1) / (std::abs(y0) + std::abs(y1)) * h;
}

} // namespace

double wasserstein1_to_uniform(const Configuration& c, double half_width) {
    if (c.dim() != 1) throw std::invalid_argument("wasserstein1_to_uniform needs a 1D configuration");
    if (!(half_width > 0.0)) throw std::invalid_argument("half_width must be positive");

    std::vector<double> xs(c.coords().begin(), c.coords().end());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    const double cell = 1.0 / n;

    double total = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // Uniform quantile on the mass cell [i/n, (i+1)/n].
        const double q0 = -half_width + 2.0 * half_width * static_cast<double>(i) / n;
        const double q1 = -half_width + 2.0 * half_width * static_cast<double>(i + 1) / n;
        total += abs_linear_integral(xs[i] - q0, xs[i] - q1, cell);
    }
    return total;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> samples) {
    if (samples.size() < 2) throw std::invalid_argument("power-law fit needs at least two samples");
    std::set<double> seen;
    for (const auto& [n, v] : samples) {
        if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("sample n must be positive");
        if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("sample values must be positive");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate n in power-law samples");
    }

    const double m = static_cast<double>(samples.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [n, v] : samples) {
        mx += std::log(n);
        my += std::log(v);
    }
    mx /= m;
    my /= m;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [n, v] : samples) {
        const double dx = std::log(n) - mx, dy = std::log(v) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    PowerLawFit fit;
    fit.sample_count = samples.size();
    fit.exponent = sxy / sxx;
    fit.prefactor = std::exp(my - fit.exponent * mx);
    double ss_res = 0.0;
    for (const auto& [n, v] : samples) {
        const double r = std::log(v) - (my + fit.exponent * (std::log(n) - mx));
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

} // namespace powermin
