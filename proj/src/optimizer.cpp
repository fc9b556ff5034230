#include "powermin/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "powermin/analysis.hpp"
#include "powermin/energy.hpp"
#include "powermin/errors.hpp"
#include "pair_kernel.hpp"

namespace powermin {

void OptimizerOptions::validate() const {
    if (!(tol_grad > 0.0)) throw std::invalid_argument("tol_grad must be positive");
    if (max_iter == 0) throw std::invalid_argument("max_iter must be positive");
    if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw std::invalid_argument("armijo_c must lie in (0, 1)");
    if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0))
        throw std::invalid_argument("backtrack_factor must lie in (0, 1)");
    if (!(initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
    if (!(gap_guard > 0.0 && gap_guard < 1.0)) throw std::invalid_argument("gap_guard must lie in (0, 1)");
}

void GlobalOptions::validate() const {
    if (restarts == 0) throw std::invalid_argument("restarts must be at least 1");
    optimizer.validate();
}

std::string_view to_string(InitStrategy s) {
    return s == InitStrategy::UniformBox ? "uniform-box" : "perturbed-grid";
}

InitStrategy parse_init_strategy(std::string_view name) {
    if (name == "uniform-box") return InitStrategy::UniformBox;
    if (name == "perturbed-grid") return InitStrategy::PerturbedGrid;
    throw std::invalid_argument("unknown init strategy '" + std::string(name) + "'");
}

Configuration init_configuration(const Potential& p, std::size_t n, std::size_t dim,
                                 std::uint64_t seed, InitStrategy strategy) {
    if (n == 0 || dim == 0) throw std::invalid_argument("n and dim must be positive");
    if (n == 1) return Configuration::origin(dim, 1);

    std::mt19937_64 rng(seed);
    std::vector<double> xs(n * dim);
    if (strategy == InitStrategy::UniformBox) {
        double half = static_cast<double>(n);
        if (p.classify() == PotentialClass::BothPositive) half = std::min(bound_diameter_case1(n, p), half);
        std::uniform_real_distribution<double> u(-half, half);
        for (double& v : xs) v = u(rng);
    } else {
        // Unit lattice with side ceil(n^(1/dim)); in 1D a plain line.
        std::size_t side = 1;
        while (true) {
            std::size_t cells = 1;
            for (std::size_t k = 0; k < dim && cells < n; ++k) cells *= side;
            if (cells >= n) break;
            ++side;
        }
        std::uniform_real_distribution<double> jitter(-0.25, 0.25);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t index = i;
            for (std::size_t k = 0; k < dim; ++k) {
                xs[i * dim + k] = static_cast<double>(index % side) + jitter(rng);
                index /= side;
            }
        }
    }
    return Configuration(dim, std::move(xs));
}

namespace {

struct GradientState {
    std::vector<double> grad;
    double min_gap_sq = std::numeric_limits<double>::infinity();
};

void gradient_and_gap(const detail::PairKernel& kernel, bool singular, std::span<const double> x,
                      std::size_t dim, GradientState& out) {
    const std::size_t n = x.size() / dim;
    out.grad.assign(x.size(), 0.0);
    out.min_gap_sq = std::numeric_limits<double>::infinity();
    double* g = out.grad.data();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = x[i * dim + k] - x[j * dim + k];
                sq += d * d;
            }
            out.min_gap_sq = std::min(out.min_gap_sq, sq);
            if (sq == 0.0) {
                if (singular) throw CoincidentPoints(i, j);
                continue;
            }
            const double f = 2.0 * kernel.grad_factor(sq);
            for (std::size_t k = 0; k < dim; ++k) {
                const double v = f * (x[i * dim + k] - x[j * dim + k]);
                g[i * dim + k] += v;
                g[j * dim + k] -= v;
            }
        }
    }
}

double inf_norm(std::span<const double> v) {
    double m = 0.0;
    for (double e : v) m = std::max(m, std::abs(e));
    return m;
}

/// Largest t such that every pair distance along x + t * direction stays at
/// least (1 - fraction) times its current value. Receding pairs impose no limit.
double collision_free_step(std::span<const double> x, std::span<const double> direction, std::size_t dim,
                           double fraction) {
    const std::size_t n = x.size() / dim;
    const double keep = 1.0 - (1.0 - fraction) * (1.0 - fraction);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dd = 0.0, dv = 0.0, vv = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = x[i * dim + k] - x[j * dim + k];
                const double v = direction[i * dim + k] - direction[j * dim + k];
                dd += d * d;
                dv += d * v;
                vv += v * v;
            }
            if (dv >= 0.0) continue;
            // Smallest positive root of vv t^2 + 2 dv t + keep dd = 0, if the
            // closest approach gets that near.
            const double disc = dv * dv - vv * keep * dd;
            if (disc < 0.0) continue;
            const double root = keep * dd / (-dv + std::sqrt(disc));
            best = std::min(best, root);
        }
    }
    return best;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

MinimizeResult finish(const Potential& p, Configuration config, double grad_norm, std::size_t iterations,
                      Termination termination) {
    MinimizeResult r;
    r.config = canonicalize(config);
    r.energy = eval_energy(p, r.config).total;
    r.grad_inf_norm = grad_norm;
    r.iterations = iterations;
    r.restarts_used = 1;
    r.termination = termination;
    r.converged = termination == Termination::Converged;
    return r;
}

/// Curvature pairs for the limited-memory inverse Hessian, oldest first.
class CurvatureHistory {
public:
    explicit CurvatureHistory(std::size_t capacity) : capacity_(capacity) {}

    bool empty() const noexcept { return s_.empty(); }
    void clear() noexcept {
        s_.clear();
        y_.clear();
        rho_.clear();
    }

    /// Keeps the pair only if it carries positive curvature.
    void push(std::span<const double> s, std::span<const double> y) {
        const double sy = dot(s, y);
        if (!(sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y)))) return;
        last_bb_ = dot(s, s) / sy;
        if (capacity_ == 0) return;
        if (s_.size() == capacity_) {
            s_.erase(s_.begin());
            y_.erase(y_.begin());
            rho_.erase(rho_.begin());
        }
        s_.emplace_back(s.begin(), s.end());
        y_.emplace_back(y.begin(), y.end());
        rho_.push_back(1.0 / sy);
    }

    /// Barzilai-Borwein length of the latest accepted pair, or 0 if none.
    double bb_length() const noexcept { return last_bb_; }

    /// direction <- -H grad by the two-loop recursion.
    void apply(std::span<const double> grad, std::vector<double>& direction) {
        direction.assign(grad.begin(), grad.end());
        for (double& v : direction) v = -v;
        const std::size_t m = s_.size();
        coef_.assign(m, 0.0);
        for (std::size_t h = m; h-- > 0;) {
            coef_[h] = rho_[h] * dot(s_[h], direction);
            axpy(-coef_[h], y_[h], direction);
        }
        const double scale = 1.0 / (rho_.back() * dot(y_.back(), y_.back()));
        for (double& v : direction) v *= scale;
        for (std::size_t h = 0; h < m; ++h) {
            const double beta = rho_[h] * dot(y_[h], direction);
            axpy(coef_[h] - beta, s_[h], direction);
        }
    }

private:
    static void axpy(double a, std::span<const double> x, std::vector<double>& y) {
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    }

    std::size_t capacity_;
    std::vector<std::vector<double>> s_, y_;
    std::vector<double> rho_, coef_;
    double last_bb_ = 0.0;
};

} // namespace

MinimizeResult local_minimize(const Potential& p, const Configuration& start, const OptimizerOptions& opts,
                              DescentTrace* trace) {
    opts.validate();
    const std::size_t dim = start.dim();
    if (start.size() == 1)
        return finish(p, Configuration::origin(dim, 1), 0.0, 0, Termination::Converged);

    const detail::PairKernel kernel(p.gamma(), p.alpha());
    const bool guarded = p.alpha() < 1.0;

    Configuration current = start;
    double energy = eval_energy(p, current).total; // throws on coincident singular start
    GradientState state, next;
    gradient_and_gap(kernel, p.singular(), current.coords(), dim, state);
    double grad_norm = inf_norm(state.grad);

    if (trace) {
        trace->energy.assign(1, energy);
        trace->min_gap.assign(1, std::sqrt(state.min_gap_sq));
        trace->grad_inf_norm.assign(1, grad_norm);
    }

    const std::size_t size = current.coords().size();
    std::vector<double> direction(size), step(size), moved(size), change(size);
    CurvatureHistory history(opts.history);

    std::size_t iter = 0;
    Termination termination = Termination::MaxIterExceeded;
    while (true) {
        if (grad_norm < opts.tol_grad) {
            termination = Termination::Converged;
            break;
        }
        if (iter >= opts.max_iter) break;

        double t = opts.initial_step;
        double slope = 0.0;
        if (!history.empty()) {
            history.apply(state.grad, direction);
            slope = dot(state.grad, direction);
            t = 1.0;
        }
        if (history.empty() || !(slope < 0.0)) {
            history.clear();
            for (std::size_t i = 0; i < size; ++i) direction[i] = -state.grad[i];
            slope = -dot(state.grad, state.grad);
            if (history.bb_length() > 0.0) t = history.bb_length();
        }
        if (guarded) {
            const double cap = collision_free_step(current.coords(), direction, dim, opts.gap_guard);
            if (cap < 1e-3 * t && !history.empty()) {
                // The quasi-Newton step drives a pair together; restart from the gradient.
                history.clear();
                for (std::size_t i = 0; i < size; ++i) direction[i] = -state.grad[i];
                slope = -dot(state.grad, state.grad);
                t = history.bb_length() > 0.0 ? history.bb_length() : opts.initial_step;
                t = std::min(t, collision_free_step(current.coords(), direction, dim, opts.gap_guard));
            } else {
                t = std::min(t, cap);
            }
        }

        bool accepted = false;
        double delta = 0.0;
        for (int attempt = 0; attempt < 100; ++attempt) {
            for (std::size_t i = 0; i < size; ++i) step[i] = t * direction[i];
            try {
                delta = energy_change(p, current, step);
            } catch (const CoincidentPoints&) {
                delta = std::numeric_limits<double>::infinity();
            }
            if (delta <= opts.armijo_c * t * slope) {
                accepted = true;
                break;
            }
            t *= opts.backtrack_factor;
        }
        if (!accepted) {
            termination = Termination::LineSearchStalled;
            break;
        }

        const auto x = current.coords();
        for (std::size_t i = 0; i < size; ++i) moved[i] = x[i] + step[i];
        Configuration accepted_config(dim, moved);
        gradient_and_gap(kernel, p.singular(), accepted_config.coords(), dim, next);

        for (std::size_t i = 0; i < size; ++i) change[i] = next.grad[i] - state.grad[i];
        history.push(step, change);

        current = std::move(accepted_config);
        std::swap(state, next);
        energy += delta;
        grad_norm = inf_norm(state.grad);
        ++iter;

        if (trace) {
            trace->energy.push_back(energy);
            trace->min_gap.push_back(std::sqrt(state.min_gap_sq));
            trace->grad_inf_norm.push_back(grad_norm);
        }
    }
    return finish(p, std::move(current), grad_norm, iter, termination);
}

std::uint64_t restart_seed(std::uint64_t base, std::size_t index) {
    // splitmix64 finalizer over the base seed offset by the index.
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

std::size_t worker_count(const GlobalOptions& g) {
    std::size_t threads = g.threads;
    if (threads == 0) {
        if (const char* env = std::getenv("POWERMIN_THREADS")) {
            try {
                threads = static_cast<std::size_t>(std::stoul(env));
            } catch (const std::exception&) {
                threads = 0;
            }
        }
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return std::min(threads, g.restarts);
}

} // namespace

std::vector<MinimizeResult> minimize_restarts(const Potential& p, std::size_t n, std::size_t dim,
                                              const GlobalOptions& g) {
    g.validate();
    if (n == 0 || dim == 0) throw std::invalid_argument("n and dim must be positive");

    std::vector<MinimizeResult> results(g.restarts);
    auto run = [&](std::size_t i) {
        const auto start = init_configuration(p, n, dim, restart_seed(g.seed, i), g.init_strategy);
        results[i] = local_minimize(p, start, g.optimizer);
    };

    const std::size_t workers = worker_count(g);
    if (workers <= 1) {
        for (std::size_t i = 0; i < g.restarts; ++i) run(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < g.restarts && !failed; i = next++) {
                try {
                    run(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

MinimizeResult global_minimize(const Potential& p, std::size_t n, std::size_t dim, const GlobalOptions& g) {
    if (n == 1) {
        g.validate();
        MinimizeResult r = local_minimize(p, Configuration::origin(dim, 1), g.optimizer);
        r.restarts_used = 1;
        return r;
    }
    auto results = minimize_restarts(p, n, dim, g);

    std::size_t best = 0;
    auto better = [](const MinimizeResult& a, const MinimizeResult& b) {
        if (a.converged != b.converged) return a.converged;
        const double tie = 1e-12 * std::max(1.0, std::abs(b.energy));
        return a.energy < b.energy - tie;
    };
    for (std::size_t i = 1; i < results.size(); ++i)
        if (better(results[i], results[best])) best = i;

    MinimizeResult out = std::move(results[best]);
    out.restarts_used = results.size();
    return out;
}

} // namespace powermin
