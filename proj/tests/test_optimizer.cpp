#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "powermin/analysis.hpp"
#include "powermin/configuration.hpp"
#include "powermin/energy.hpp"
#include "powermin/errors.hpp"
#include "powermin/optimizer.hpp"

using namespace powermin;

namespace {

std::vector<double> coords(const Configuration& c) { return {c.coords().begin(), c.coords().end()}; }

} // namespace

TEST_CASE("option validation") {
    OptimizerOptions o;
    CHECK_NOTHROW(o.validate());
    o.tol_grad = 0.0;
    CHECK_THROWS_AS(o.validate(), std::invalid_argument);
    o = {};
    o.backtrack_factor = 1.0;
    CHECK_THROWS_AS(o.validate(), std::invalid_argument);
    o = {};
    o.gap_guard = 1.0;
    CHECK_THROWS_AS(o.validate(), std::invalid_argument);

    GlobalOptions g;
    CHECK(g.restarts == 16);
    CHECK(g.seed == 42);
    g.restarts = 0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);

    CHECK(parse_init_strategy("uniform-box") == InitStrategy::UniformBox);
    CHECK(parse_init_strategy(to_string(InitStrategy::PerturbedGrid)) == InitStrategy::PerturbedGrid);
    CHECK_THROWS_AS(parse_init_strategy("lattice"), std::invalid_argument);
}

TEST_CASE("init_configuration") {
    const Potential p(-0.5, -2.5);
    for (auto s : {InitStrategy::UniformBox, InitStrategy::PerturbedGrid}) {
        CHECK(init_configuration(p, 1, 2, 9, s) == Configuration::origin(2, 1));
        CHECK(init_configuration(p, 12, 2, 9, s) == init_configuration(p, 12, 2, 9, s));
        CHECK_FALSE(init_configuration(p, 12, 2, 9, s) == init_configuration(p, 12, 2, 10, s));
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        for (std::size_t dim : {1, 2, 3}) {
            CHECK(min_gap(init_configuration(p, 3, dim, seed, InitStrategy::PerturbedGrid)) >= 0.5);
            CHECK(min_gap(init_configuration(p, 30, dim, seed, InitStrategy::PerturbedGrid)) >= 0.5);
        }

    // The uniform box sits inside the case-1 bound.
    const Potential q(2.0, 1.0);
    const auto c = init_configuration(q, 3, 1, 4, InitStrategy::UniformBox);
    for (double x : c.coords()) CHECK(std::abs(x) <= 3.0);
}

TEST_CASE("local_minimize examples") {
    const Potential p(2.0, 1.0);
    const OptimizerOptions o;

    auto r = local_minimize(p, Configuration::line({0.0, 3.0}), o);
    CHECK(r.converged);
    CHECK(r.termination == Termination::Converged);
    CHECK(r.grad_inf_norm < 1e-9);
    CHECK(diameter(r.config) == doctest::Approx(1.0).epsilon(1e-9));

    r = local_minimize(p, Configuration::line({-1.1, -0.4, 0.6, 1.2}), o);
    CHECK(r.converged);
    const auto xs = coords(r.config);
    for (std::size_t i = 1; i < xs.size(); ++i) CHECK(std::abs(xs[i] - xs[i - 1] - 0.5) < 1e-7);
    CHECK(r.energy == eval_energy(p, r.config).total);
}

TEST_CASE("local_minimize keeps singular kernels collision free") {
    const Potential p(-0.5, -2.5);
    for (auto strategy : {InitStrategy::UniformBox, InitStrategy::PerturbedGrid})
        for (std::uint64_t seed : {1, 2, 3}) {
            DescentTrace trace;
            const auto start = init_configuration(p, 24, 1, seed, strategy);
            const auto r = local_minimize(p, start, OptimizerOptions{}, &trace);
            CHECK(r.converged);
            CHECK(min_gap(r.config) > 0.0);
            CHECK(std::isfinite(r.energy));
            REQUIRE(!trace.energy.empty());
            for (std::size_t i = 1; i < trace.energy.size(); ++i) CHECK(trace.energy[i] <= trace.energy[i - 1]);
            for (double gap : trace.min_gap) CHECK(gap > 0.0);
        }

    CHECK_THROWS_AS(local_minimize(p, Configuration::line({0.0, 0.0, 1.0}), OptimizerOptions{}), CoincidentPoints);
}

TEST_CASE("monotone descent across kernels and dimensions") {
    for (auto [g, a] : {std::pair{2.0, 1.0}, {3.0, 1.5}, {1.0, 0.0}, {2.7, 0.3}, {1.5, -0.5}}) {
        const Potential p(g, a);
        for (std::size_t dim : {1, 2}) {
            DescentTrace trace;
            const auto r = local_minimize(p, init_configuration(p, 15, dim, 77, InitStrategy::UniformBox),
                                          OptimizerOptions{}, &trace);
            CHECK(r.converged);
            CHECK(r.grad_inf_norm < 1e-9);
            for (std::size_t i = 1; i < trace.energy.size(); ++i) CHECK(trace.energy[i] <= trace.energy[i - 1]);
            if (p.singular())
                for (double gap : trace.min_gap) CHECK(gap > 0.0);
        }
    }
}

TEST_CASE("steepest descent fallback converges") {
    OptimizerOptions o;
    o.history = 0;
    DescentTrace trace;
    const auto r = local_minimize(Potential(2.0, 1.0), Configuration::line({-2.0, 0.3, 0.5, 3.0, 4.0}), o, &trace);
    CHECK(r.converged);
    for (std::size_t i = 1; i < trace.energy.size(); ++i) CHECK(trace.energy[i] <= trace.energy[i - 1]);
    CHECK(r.energy == doctest::Approx(-8.0).epsilon(1e-12));
}

TEST_CASE("max_iter is reported honestly") {
    OptimizerOptions o;
    o.max_iter = 2;
    const auto r = local_minimize(Potential(-0.5, -2.5), init_configuration(Potential(-0.5, -2.5), 30, 1, 5, InitStrategy::UniformBox), o);
    CHECK_FALSE(r.converged);
    CHECK(r.termination == Termination::MaxIterExceeded);
    CHECK(r.iterations == 2);
}

TEST_CASE("global_minimize examples") {
    const GlobalOptions g;

    auto r = global_minimize(Potential(2.0, 1.0), 5, 1, g);
    const std::vector<double> expected{-0.8, -0.4, 0.0, 0.4, 0.8};
    const auto xs = coords(r.config);
    REQUIRE(xs.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(xs[i] - expected[i]) < 1e-7);
    CHECK(r.restarts_used == 16);

    r = global_minimize(Potential(3.0, 1.0), 2, 2, g);
    CHECK(std::abs(diameter(r.config) - 1.0) < 1e-7);

    const Potential s(-0.5, -2.5);
    r = global_minimize(s, 16, 1, g);
    CHECK(r.converged);
    CHECK(diameter(r.config) >= spreading_lower_bound(16, s));
    const auto ys = coords(r.config);
    for (std::size_t i = 1; i < ys.size(); ++i) CHECK(ys[i] - ys[i - 1] >= solve_min_gap(16, s));

    r = global_minimize(Potential(1.0, 0.0), 1, 3, g);
    CHECK(r.config == Configuration::origin(3, 1));
    CHECK(r.energy == 0.0);
    CHECK(r.converged);
}

TEST_CASE("global_minimize is no worse than the closed form") {
    const Potential p(2.0, 1.0);
    for (std::size_t n : {2, 3, 7, 12, 20}) {
        const auto r = global_minimize(p, n, 1, GlobalOptions{});
        CHECK(r.energy <= eval_energy(p, quadratic_newtonian_minimizer(n)).total + 1e-7);
        CHECK(r.grad_inf_norm < 1e-9);
    }
}

TEST_CASE("global_minimize is deterministic regardless of thread count") {
    const Potential p(3.0, 0.5);
    GlobalOptions g;
    g.restarts = 6;
    g.init_strategy = InitStrategy::UniformBox;
    g.threads = 1;
    const auto serial = global_minimize(p, 11, 2, g);
    g.threads = 4;
    const auto parallel = global_minimize(p, 11, 2, g);
    CHECK(serial.config == parallel.config);
    CHECK(serial.energy == parallel.energy);
    CHECK(serial.iterations == parallel.iterations);

    const auto runs = minimize_restarts(p, 11, 2, g);
    CHECK(runs.size() == 6);
    for (const auto& r : runs) CHECK(r.energy >= serial.energy * (1.0 + 1e-12));

    CHECK(restart_seed(42, 0) != restart_seed(42, 1));
    CHECK(restart_seed(42, 3) == restart_seed(42, 3));
}
