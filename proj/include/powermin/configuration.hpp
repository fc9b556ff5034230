#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace powermin {

/**
 * n points in R^d stored row-major (point i occupies coords[i*d, i*d + d)).
 * Represents the empirical measure (1/n) sum_i delta_{x_i}.
 */
class Configuration {
public:
    /// Throws std::invalid_argument if dim == 0, coords.size() is not a
    /// positive multiple of dim, or any coordinate is non-finite.
    Configuration(std::size_t dim, std::vector<double> coords);

    /// n points at the origin of R^dim.
    static Configuration origin(std::size_t dim, std::size_t n);

    /// 1D configuration from scalar positions.
    static Configuration line(std::vector<double> xs) { return Configuration(1, std::move(xs)); }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return coords_.size() / dim_; }

    std::span<const double> point(std::size_t i) const noexcept {
        return {coords_.data() + i * dim_, dim_};
    }
    std::span<const double> coords() const noexcept { return coords_; }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::size_t dim_;
    std::vector<double> coords_;
};

/// Maximum pairwise Euclidean distance; 0 for a single point.
double diameter(const Configuration& c);

/// Minimum pairwise Euclidean distance. Throws std::invalid_argument for n < 2.
double min_gap(const Configuration& c);

/// Mean position.
std::vector<double> centroid(const Configuration& c);

/**
 * Representative of the configuration's symmetry class.
 *
 * The centroid is moved to the origin. In 1D the coordinates are also sorted,
 * and the lexicographically smaller of (x_1..x_n) and (-x_n..-x_1) is returned,
 * which picks one member of each translation+reflection orbit. For d > 1 only
 * the translation is removed; compare such configurations with
 * sorted_pair_distances().
 */
Configuration canonicalize(const Configuration& c);

/// All n(n-1)/2 pairwise distances, ascending. Isometry-invariant comparison key for d > 1.
std::vector<double> sorted_pair_distances(const Configuration& c);

} // namespace powermin
