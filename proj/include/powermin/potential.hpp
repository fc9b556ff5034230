#pragma once

#include <string_view>

namespace powermin {

enum class PotentialClass {
    BothPositive, // 0 < alpha < gamma
    Mixed,        // alpha <= 0 <= gamma
    BothNegative, // alpha < gamma < 0
};

std::string_view to_string(PotentialClass c);

/**
 * Radial repulsive-attractive power law
 *
 *     w(r) = r^gamma / gamma - r^alpha / alpha,   gamma > alpha,
 *
 * where a zero exponent stands for log r. The kernel is singular
 * (w(0) = +inf) whenever alpha <= 0.
 */
class Potential {
public:
    /// Throws std::invalid_argument unless both exponents are finite and gamma > alpha.
    Potential(double gamma, double alpha);

    double gamma() const noexcept { return gamma_; }
    double alpha() const noexcept { return alpha_; }

    PotentialClass classify() const noexcept;
    bool singular() const noexcept { return alpha_ <= 0.0; }

    /// w(1) = 1/gamma - 1/alpha with the log convention (log 1 = 0); the global minimum of w.
    double min_value() const noexcept;

    friend bool operator==(const Potential&, const Potential&) = default;

private:
    double gamma_;
    double alpha_;
};

inline PotentialClass classify_potential(const Potential& p) noexcept { return p.classify(); }

/// w(r). Returns +inf at r = 0 for singular kernels and 0 at r = 0 otherwise.
/// Throws std::invalid_argument for negative or NaN r.
double eval_w(const Potential& p, double r);

/// w'(r) = r^(gamma-1) - r^(alpha-1).
double eval_w_prime(const Potential& p, double r);

} // namespace powermin
