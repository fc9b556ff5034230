#include "powermin/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pair_kernel.hpp"

namespace powermin {

Configuration::Configuration(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0) throw std::invalid_argument("configuration dimension must be positive");
    if (coords_.empty() || coords_.size() % dim_ != 0)
        throw std::invalid_argument("coordinate count must be a positive multiple of the dimension");
    for (double v : coords_)
        if (!std::isfinite(v)) throw std::invalid_argument("configuration coordinates must be finite");
}

Configuration Configuration::origin(std::size_t dim, std::size_t n) {
    return Configuration(dim, std::vector<double>(dim * n, 0.0));
}

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

} // namespace

double diameter(const Configuration& c) {
    double best = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            best = std::max(best, squared_distance(c.point(i), c.point(j)));
    return std::sqrt(best);
}

double min_gap(const Configuration& c) {
    if (c.size() < 2) throw std::invalid_argument("min_gap needs at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            best = std::min(best, squared_distance(c.point(i), c.point(j)));
    return std::sqrt(best);
}

std::vector<double> centroid(const Configuration& c) {
    std::vector<double> mean(c.dim(), 0.0);
    for (std::size_t k = 0; k < c.dim(); ++k) {
        detail::CompensatedSum sum;
        for (std::size_t i = 0; i < c.size(); ++i) sum.add(c.point(i)[k]);
        mean[k] = sum.value() / static_cast<double>(c.size());
    }
    return mean;
}

Configuration canonicalize(const Configuration& c) {
    const auto mean = centroid(c);
    std::vector<double> xs(c.coords().begin(), c.coords().end());

    // A centroid at rounding level means the input is already centered;
    // subtracting it again would break idempotence.
    double scale = 0.0;
    for (double v : xs) scale = std::max(scale, std::abs(v));
    const double centered_tol = 8.0 * std::numeric_limits<double>::epsilon() * scale;
    for (std::size_t k = 0; k < c.dim(); ++k) {
        if (std::abs(mean[k]) <= centered_tol) continue;
        for (std::size_t i = 0; i < c.size(); ++i) xs[i * c.dim() + k] -= mean[k];
    }

    if (c.dim() == 1) {
        std::sort(xs.begin(), xs.end());
        std::vector<double> mirrored(xs.size());
        std::transform(xs.rbegin(), xs.rend(), mirrored.begin(), [](double v) { return -v; });
        if (std::lexicographical_compare(mirrored.begin(), mirrored.end(), xs.begin(), xs.end()))
            xs = std::move(mirrored);
    }
    return Configuration(c.dim(), std::move(xs));
}

std::vector<double> sorted_pair_distances(const Configuration& c) {
    std::vector<double> out;
    out.reserve(c.size() * (c.size() - 1) / 2);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            out.push_back(std::sqrt(squared_distance(c.point(i), c.point(j))));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace powermin
