#include "powermin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "powermin/analysis.hpp"
#include "powermin/energy.hpp"
#include "powermin/io.hpp"
#include "powermin/optimizer.hpp"

namespace powermin {

bool VerifyReport::overall_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::to_json(int indent) const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
        checks_json.push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"observed", c.observed},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
    nlohmann::json doc{{"suite_name", suite_name}, {"checks", std::move(checks_json)}, {"overall_pass", overall_pass()}};
    return doc.dump(indent);
}

namespace {

struct Checks {
    std::vector<VerifyCheck> list;

    void near(std::string name, double expected, double observed, double tol) {
        list.push_back({std::move(name), expected, observed, tol, std::abs(observed - expected) <= tol});
    }
    void at_least(std::string name, double bound, double observed) {
        list.push_back({std::move(name), bound, observed, 0.0, observed >= bound});
    }
    void at_most(std::string name, double bound, double observed) {
        list.push_back({std::move(name), bound, observed, 0.0, observed <= bound});
    }
    void greater(std::string name, double bound, double observed) {
        list.push_back({std::move(name), bound, observed, 0.0, observed > bound});
    }
    void less(std::string name, double bound, double observed) {
        list.push_back({std::move(name), bound, observed, 0.0, observed < bound});
    }
};

std::string tag(std::size_t n) { return "n=" + std::to_string(n); }

double max_spacing_error(const Configuration& c, double spacing) {
    const auto xs = c.coords();
    double worst = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) worst = std::max(worst, std::abs(xs[i] - xs[i - 1] - spacing));
    return worst;
}

double max_mirror_error(const Configuration& c) {
    const auto xs = c.coords();
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(xs[i] + xs[xs.size() - 1 - i]));
    return worst;
}

VerifyReport quadratic_newtonian() {
    const Potential p(2.0, 1.0);
    Checks checks;
    for (std::size_t n : {2, 4, 8, 16, 32, 64}) {
        const auto r = global_minimize(p, n, 1, GlobalOptions{});
        const double nn = static_cast<double>(n);
        checks.near(tag(n) + " max |spacing - 2/n|", 0.0, max_spacing_error(r.config, 2.0 / nn), 1e-7);
        checks.near(tag(n) + " W1 to uniform[-1,1]", 1.0 / (2.0 * nn), wasserstein1_to_uniform(r.config, 1.0), 1e-8);
    }
    return {"quadratic-newtonian", std::move(checks.list)};
}

VerifyReport uniqueness() {
    const Potential p(3.0, 0.5);
    GlobalOptions g;
    g.restarts = 20;
    g.init_strategy = InitStrategy::UniformBox;
    const auto runs = minimize_restarts(p, 20, 1, g);

    Checks checks;
    const auto reference = runs.front().config.coords();
    for (std::size_t i = 1; i < runs.size(); ++i) {
        const auto xs = runs[i].config.coords();
        double worst = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) worst = std::max(worst, std::abs(xs[k] - reference[k]));
        checks.near("restart " + std::to_string(i) + " vs restart 0 max coordinate gap", 0.0, worst, 1e-6);
    }
    for (std::size_t i = 0; i < runs.size(); ++i)
        checks.near("restart " + std::to_string(i) + " max |x_i + x_{n+1-i}|", 0.0, max_mirror_error(runs[i].config),
                    1e-6);
    return {"uniqueness", std::move(checks.list)};
}

VerifyReport symmetry() {
    struct Case {
        double gamma, alpha;
        std::size_t n;
    };
    Checks checks;
    for (const Case& c : {Case{3.0, 0.5, 20}, Case{2.0, 1.0, 9}, Case{1.5, -0.5, 12}, Case{1.0, 0.0, 10},
                          Case{4.0, 1.0, 15}}) {
        const Potential p(c.gamma, c.alpha);
        const auto r = global_minimize(p, c.n, 1, GlobalOptions{});
        const std::string name = "gamma=" + format_double(c.gamma) + " alpha=" + format_double(c.alpha) + " " + tag(c.n);
        checks.near(name + " max |x_i + x_{n+1-i}|", 0.0, max_mirror_error(r.config), 1e-6);
    }
    return {"symmetry", std::move(checks.list)};
}

VerifyReport confinement() {
    const Potential p(3.0, 1.5);
    const std::vector<std::size_t> ns{16, 32, 64, 128};
    Checks checks;
    for (std::size_t dim : {1, 2}) {
        std::vector<double> diam;
        for (std::size_t n : ns) diam.push_back(diameter(global_minimize(p, n, dim, GlobalOptions{}).config));
        const std::string d = "d=" + std::to_string(dim) + " ";
        checks.less(d + "relative diameter change n=64 -> n=128", 0.05, std::abs(diam[3] - diam[2]) / diam[2]);
        const auto [lo, hi] = std::minmax_element(diam.begin(), diam.end());
        checks.at_most(d + "max/min diameter over n=16..128", 1.5, *hi / *lo);
    }
    return {"confinement", std::move(checks.list)};
}

VerifyReport spreading() {
    const std::vector<std::size_t> ns{8, 16, 32, 64, 128};
    const GlobalOptions g;
    Checks checks;

    for (double alpha : {-2.5, -1.5}) {
        const Potential p(-0.5, alpha);
        const std::string a = "alpha=" + format_double(alpha) + " ";
        std::vector<std::pair<double, double>> samples;
        for (std::size_t n : ns) {
            const double d = diameter(global_minimize(p, n, 1, g).config);
            if (!samples.empty())
                checks.greater(a + tag(n) + " diameter exceeds previous n", samples.back().second, d);
            samples.emplace_back(static_cast<double>(n), d);
            if (alpha == -2.5) checks.at_least(a + tag(n) + " diameter >= (n-1) a_n", spreading_lower_bound(n, p), d);
        }
        if (alpha == -2.5)
            checks.at_least(a + "fitted log-log exponent >= 1 + 2/alpha", 1.0 + 2.0 / alpha,
                            fit_power_law(samples).exponent);
    }
    return {"spreading", std::move(checks.list)};
}

VerifyReport case1_bounds() {
    const Potential p(2.0, 1.0);
    Checks checks;
    for (std::size_t n : {3, 5, 9}) {
        const auto r = global_minimize(p, n, 1, GlobalOptions{});
        const double nn = static_cast<double>(n);
        checks.less(tag(n) + " I_n < 0", 0.0, r.energy);
        checks.at_least(tag(n) + " I_n >= n^2 (1/gamma - 1/alpha)", nn * nn * p.min_value(), r.energy);
        checks.at_most(tag(n) + " diameter <= (n^2 gamma/alpha)^(1/(gamma-alpha))", bound_diameter_case1(n, p),
                       diameter(r.config));
    }
    return {"case1-bounds", std::move(checks.list)};
}

VerifyReport gradient_fd() {
    Checks checks;
    const std::size_t n = 6;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-2.0, 2.0);

    for (const auto& [gamma, alpha] : {std::pair{2.0, 1.0}, {3.0, 1.5}, {1.0, 0.0}, {-0.5, -2.5}}) {
        const Potential p(gamma, alpha);
        double worst_rel = 0.0, worst_sum = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t dim = 1 + static_cast<std::size_t>(trial % 3);
            std::vector<double> xs(n * dim);
            Configuration c = Configuration::origin(dim, n);
            do {
                for (double& v : xs) v = u(rng);
                c = Configuration(dim, xs);
            } while (min_gap(c) < 0.25);

            const auto grad = eval_gradient(p, c);
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double h = 1e-6 * std::max(1.0, std::abs(xs[i]));
                auto plus = xs, minus = xs;
                plus[i] += h;
                minus[i] -= h;
                const double fd = (eval_energy(p, Configuration(dim, plus)).total -
                                   eval_energy(p, Configuration(dim, minus)).total) /
                                  (plus[i] - minus[i]);
                worst_rel = std::max(worst_rel, std::abs(grad[i] - fd) / std::abs(fd));
            }
            double scale = 0.0;
            for (double g : grad) scale += std::abs(g);
            for (std::size_t k = 0; k < dim; ++k) {
                double sum = 0.0;
                for (std::size_t i = 0; i < n; ++i) sum += grad[i * dim + k];
                worst_sum = std::max(worst_sum, std::abs(sum) / scale);
            }
        }
        const std::string name = "gamma=" + format_double(gamma) + " alpha=" + format_double(alpha);
        checks.less(name + " max relative error vs central differences", 1e-6, worst_rel);
        checks.less(name + " max |sum_k grad_k| / sum |grad|", 1e-10, worst_sum);
    }
    return {"gradient-fd", std::move(checks.list)};
}

} // namespace

const std::vector<std::string_view>& verify_suite_names() {
    static const std::vector<std::string_view> names{"uniqueness",          "symmetry",     "confinement", "spreading",
                                                     "quadratic-newtonian", "case1-bounds", "gradient-fd"};
    return names;
}

VerifyReport run_verify_suite(std::string_view name) {
    if (name == "uniqueness") return uniqueness();
    if (name == "symmetry") return symmetry();
    if (name == "confinement") return confinement();
    if (name == "spreading") return spreading();
    if (name == "quadratic-newtonian") return quadratic_newtonian();
    if (name == "case1-bounds") return case1_bounds();
    if (name == "gradient-fd") return gradient_fd();
    throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

} // namespace powermin
