#include "powermin/potential.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pair_kernel.hpp"

namespace powermin {

std::string_view to_string(PotentialClass c) {
    switch (c) {
    case PotentialClass::BothPositive: return "both-positive";
    case PotentialClass::Mixed: return "mixed";
    case PotentialClass::BothNegative: return "both-negative";
    }
    return "unknown";
}

Potential::Potential(double gamma, double alpha) : gamma_(gamma), alpha_(alpha) {
    if (!std::isfinite(gamma) || !std::isfinite(alpha))
        throw std::invalid_argument("potential exponents must be finite");
    if (!(gamma > alpha))
        throw std::invalid_argument("potential requires gamma > alpha (got gamma=" +
                                    std::to_string(gamma) + ", alpha=" + std::to_string(alpha) + ")");
}

PotentialClass Potential::classify() const noexcept {
    if (alpha_ > 0.0) return PotentialClass::BothPositive;
    if (gamma_ >= 0.0) return PotentialClass::Mixed;
    return PotentialClass::BothNegative;
}

double Potential::min_value() const noexcept {
    auto inv = [](double e) { return e == 0.0 ? 0.0 : 1.0 / e; };
    return inv(gamma_) - inv(alpha_);
}

namespace {

void check_radius(double r) {
    if (std::isnan(r) || r < 0.0) throw std::invalid_argument("radius must be nonnegative");
}

} // namespace

double eval_w(const Potential& p, double r) {
    check_radius(r);
    if (r == 0.0) return p.singular() ? std::numeric_limits<double>::infinity() : 0.0;
    return detail::PowerTerm(p.gamma()).value(r) - detail::PowerTerm(p.alpha()).value(r);
}

double eval_w_prime(const Potential& p, double r) {
    check_radius(r);
    if (r == 0.0) {
        // r^(gamma-1) vanishes since gamma > alpha; the repulsive slope decides.
        if (p.alpha() > 1.0) return 0.0;
        if (p.alpha() == 1.0) return -1.0;
        return -std::numeric_limits<double>::infinity();
    }
    return std::pow(r, p.gamma() - 1.0) - std::pow(r, p.alpha() - 1.0);
}

} // namespace powermin
