#pragma once

#include <cmath>

namespace powermin::detail {

/// phi_e(r) = r^e / e, or log r when e == 0. Integer and half-integer
/// exponents up to magnitude 8 are evaluated without std::exp/std::log.
class PowerTerm {
public:
    explicit PowerTerm(double e) : exponent_(e) {
        const double twice = 2.0 * e;
        if (e == 0.0) {
            kind_ = Kind::Log;
        } else if (twice == std::round(twice) && std::abs(twice) <= 16.0) {
            kind_ = Kind::HalfInteger;
            const int m = static_cast<int>(std::abs(twice));
            whole_ = m / 2;
            odd_ = (m % 2) != 0;
            negative_ = e < 0.0;
        } else {
            kind_ = Kind::General;
        }
    }

    double exponent() const noexcept { return exponent_; }
    bool needs_log() const noexcept { return kind_ != Kind::HalfInteger; }
    bool is_log() const noexcept { return kind_ == Kind::Log; }

    /// r^e given r and, for general exponents, log r.
    double power(double r, double log_r) const noexcept {
        switch (kind_) {
        case Kind::Log: return 1.0;
        case Kind::General: return std::exp(exponent_ * log_r);
        case Kind::HalfInteger: {
            double v = odd_ ? std::sqrt(r) : 1.0;
            for (int k = 0; k < whole_; ++k) v *= r;
            return negative_ ? 1.0 / v : v;
        }
        }
        return 0.0;
    }

    /// phi_e(r) from r^e (and log r for the log convention).
    double value_from(double r_pow, double log_r) const noexcept {
        return kind_ == Kind::Log ? log_r : r_pow / exponent_;
    }

    double value(double r) const noexcept {
        const double lr = needs_log() ? std::log(r) : 0.0;
        return value_from(power(r, lr), lr);
    }

    /// phi_e(r') - phi_e(r) given r^e and log(r'/r).
    double change(double r_pow, double log_ratio) const noexcept {
        if (kind_ == Kind::Log) return log_ratio;
        return r_pow * std::expm1(exponent_ * log_ratio) / exponent_;
    }

private:
    enum class Kind { Log, HalfInteger, General };

    double exponent_;
    Kind kind_;
    int whole_ = 0;
    bool odd_ = false;
    bool negative_ = false;
};

/// Per-pair quantities of w(r) = phi_gamma(r) - phi_alpha(r) from the squared distance.
class PairKernel {
public:
    PairKernel(double gamma, double alpha)
        : att_(gamma), rep_(alpha),
          need_log_(att_.needs_log() || rep_.needs_log()) {}

    struct Terms {
        double attractive;  // phi_gamma(r)
        double repulsive;   // phi_alpha(r)
        double grad_factor; // w'(r) / r = r^(gamma-2) - r^(alpha-2)
    };

    Terms eval(double sq) const noexcept {
        double r = std::sqrt(sq);
        double lr = need_log_ ? std::log(r) : 0.0;
        double pg = att_.power(r, lr);
        double pa = rep_.power(r, lr);
        return {att_.value_from(pg, lr), rep_.value_from(pa, lr), (pg - pa) / sq};
    }

    double grad_factor(double sq) const noexcept {
        double r = std::sqrt(sq);
        double lr = need_log_ ? std::log(r) : 0.0;
        return (att_.power(r, lr) - rep_.power(r, lr)) / sq;
    }

    /// w(r') - w(r) where sq = r^2 and dsq = r'^2 - r^2.
    double change(double sq, double dsq) const noexcept {
        double r = std::sqrt(sq);
        double lr = need_log_ ? std::log(r) : 0.0;
        double log_ratio = 0.5 * std::log1p(dsq / sq);
        return att_.change(att_.power(r, lr), log_ratio) - rep_.change(rep_.power(r, lr), log_ratio);
    }

private:
    PowerTerm att_;
    PowerTerm rep_;
    bool need_log_;
};

/// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double v) noexcept {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace powermin::detail
